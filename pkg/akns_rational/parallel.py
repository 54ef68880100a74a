"""Bounded worker pool for the per-k and per-x loops."""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

LOGGER = logging.getLogger(__name__)

THREADS_ENV = "AKNS_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """Pool size from ``AKNS_THREADS``; unset or invalid means 1."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        LOGGER.warning("ignoring %s=%r, expected a positive integer", THREADS_ENV, raw)
        return 1
    return value


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """``[fn(x) for x in items]``, evaluated on up to ``workers`` threads.

    Results keep the order of ``items`` whatever the completion order.
    """
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(fn, items))
