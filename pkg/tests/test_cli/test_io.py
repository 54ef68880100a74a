import math

import numpy as np
import pytest

from akns_rational.basis.expansion import RationalExpansion
from akns_rational.basis.mobius import BasisParams
from akns_rational.cli.io import (
    Table,
    decode_scalar,
    dump_scattering,
    encode_scalar,
    error_rows,
    format_table,
    json_safe,
    load_scattering,
    read_scattering_file,
    read_table,
    write_scattering_file,
    write_table,
)
from akns_rational.numeric_core.scalar import DOUBLE, Precision
from akns_rational.scattering.data import ScatteringData
from akns_rational.scattering.spectrum import DiscreteDatum


def sample_data(params):
    ctx = params.precision
    third = ctx.complex(1) / 3
    e = [RationalExpansion.from_coefficients(params, {1: third, -2: third * 1j}, 0.0) for _ in range(4)]
    plus = (DiscreteDatum.from_b(ctx.complex(0.1, 0.5), third, ctx.complex(0, 2)),)
    minus = (DiscreteDatum.from_b(ctx.complex(0.1, -0.5), -third, ctx.complex(0, -2)),)
    return ScatteringData(*e, plus, minus, {"potential": "gaussian", "max_residual": np.float64(1e-13)})


class TestScalars:
    def test_double(self):
        assert encode_scalar(1 / 3 + 2j, DOUBLE) == [1 / 3, 2.0]
        assert decode_scalar([1 / 3, 2.0], DOUBLE) == 1 / 3 + 2j

    def test_extended_round_trip(self):
        precision = Precision(40)
        value = precision.ctx.mpc(1, 2) / 7
        pair = encode_scalar(value, precision)
        assert all(isinstance(p, str) for p in pair)
        assert decode_scalar(pair, precision) == value


class TestScatteringFile:
    @pytest.mark.parametrize("digits", [16, 40])
    def test_stable_text(self, digits):
        params = BasisParams(1.5, Precision(digits))
        text = dump_scattering(sample_data(params))
        assert text.endswith("\n")
        assert dump_scattering(load_scattering(text)) == text

    def test_fields(self, tmp_path):
        params = BasisParams(1.5)
        path = tmp_path / "out" / "data.json"
        write_scattering_file(path, sample_data(params))
        data = read_scattering_file(path)
        assert data.nu == 1.5
        assert data.rho1.coefficient(1) == 1 / 3
        assert data.plus[0].c == (1 / 3) / 2j
        assert data.minus[0].z == 0.1 - 0.5j
        assert data.meta == {"potential": "gaussian", "max_residual": 1e-13}

    def test_reread_at_other_precision(self):
        text = dump_scattering(sample_data(BasisParams()))
        data = load_scattering(text, digits=30)
        assert data.params.precision.digits == 30
        assert data.params.precision.extended

    @pytest.mark.parametrize("text", ["[]", '{"version": 1}', "not json"])
    def test_rejects_other_documents(self, text):
        with pytest.raises(ValueError, match="not a scattering-data file"):
            load_scattering(text)

    def test_missing_derivative(self):
        text = dump_scattering(sample_data(BasisParams())).replace('"derivative"', '"ignored"')
        data = load_scattering(text)
        assert data.plus[0].derivative == pytest.approx(2j)

    def test_empty(self):
        data = load_scattering(dump_scattering(ScatteringData.zero(BasisParams())))
        assert data.is_empty()


class TestTables:
    def test_append_checks_width(self):
        table = Table(("a", "b"))
        with pytest.raises(ValueError, match="expected 2 values, got 1"):
            table.append(1.0)

    def test_max_of_skips_missing(self):
        table = Table(("k", "abs_error"))
        table.append(0.0, None)
        table.append(1.0, math.nan)
        table.append(2.0, 3e-9)
        assert table.max_of("abs_error") == 3e-9
        assert table.column("k") == [0.0, 1.0, 2.0]

    def test_format(self):
        table = Table(("k", "value", "failure"))
        table.append(0.1, None, "gmres stagnated")
        assert format_table(table) == "k,value,failure\n0.1,,gmres stagnated\n"

    def test_file_round_trip(self, tmp_path):
        table = Table(("x", "y"))
        table.append(0.5, 1 / 3)
        path = tmp_path / "t.csv"
        write_table(table, path)
        back = read_table(path)
        assert back.header == ("x", "y")
        assert float(back.rows[0][1]) == 1 / 3

    def test_stdout(self, capsys):
        table = Table(("x",))
        table.append(2)
        write_table(table)
        assert capsys.readouterr().out == "x\n2\n"

    def test_error_rows(self):
        rows = error_rows([0.0, 1.0], [1 + 1j, 2.0], [1.0, None])
        assert rows[0] == (0.0, 1.0, 1.0, 1.0, 0.0, 1.0)
        assert rows[1] == (1.0, 2.0, 0.0, None, None, None)


def test_json_safe():
    doc = json_safe({"a": np.int64(3), "b": (1 + 2j, np.bool_(True)), "c": np.array([1.0, 2.0])})
    assert doc == {"a": 3, "b": [[1.0, 2.0], True], "c": [1.0, 2.0]}
