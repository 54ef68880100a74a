import threading
import time

import pytest

from akns_rational.parallel import THREADS_ENV, ordered_map, worker_count


class TestWorkerCount:
    @pytest.mark.parametrize(("raw", "expected"), [(None, 1), ("", 1), ("4", 4), ("0", 1), ("-2", 1), ("many", 1)])
    def test_environment(self, monkeypatch, raw, expected):
        if raw is None:
            monkeypatch.delenv(THREADS_ENV, raising=False)
        else:
            monkeypatch.setenv(THREADS_ENV, raw)
        assert worker_count() == expected


class TestOrderedMap:
    def test_serial(self):
        assert ordered_map(lambda x: x * x, range(5), workers=1) == [0, 1, 4, 9, 16]

    def test_keeps_order(self):
        def slow_first(x):
            time.sleep(0.05 if x == 0 else 0.0)
            return x, threading.get_ident()

        out = ordered_map(slow_first, range(6), workers=3)
        assert [x for x, _ in out] == list(range(6))

    def test_uses_environment(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "2")

        def ident(_):
            time.sleep(0.02)
            return threading.get_ident()

        threads = set(ordered_map(ident, range(4)))
        assert 1 <= len(threads) <= 2

    def test_errors_propagate(self):
        def fail(x):
            if x == 2:
                raise ArithmeticError("boom")
            return x

        with pytest.raises(ArithmeticError, match="boom"):
            ordered_map(fail, range(4), workers=2)
