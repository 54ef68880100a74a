import json
import logging

import pytest

from akns_rational.cli.io import read_table
from akns_rational.cli.main import ERROR_HEADER, build_parser, main, parse_grid


class TestParseGrid:
    def test_inclusive(self):
        assert parse_grid("-1:0.5:1") == [-1.0, -0.5, 0.0, 0.5, 1.0]

    def test_decimal_step(self):
        grid = parse_grid("-10:0.1:10")
        assert len(grid) == 201
        assert grid[-1] == 10.0
        assert grid[100] == 0.0

    def test_single(self):
        assert parse_grid(" 2.5 ") == [2.5]

    def test_exact_steps(self):
        assert parse_grid("0:0.1:0.3") == [0.0, 0.1, 0.2, 0.3]
        assert parse_grid("1e-1:1e-1:2e-1") == [0.1, 0.2]

    @pytest.mark.parametrize(
        ("text", "match"),
        [
            ("a:b:c", "malformed grid"),
            ("0:1", "lo:step:hi"),
            ("0:0:1", "step must be positive"),
            ("1:0.5:0", "precedes its start"),
        ],
    )
    def test_errors(self, text, match):
        with pytest.raises(ValueError, match=match):
            parse_grid(text)


class TestParser:
    def test_defaults(self):
        args = build_parser().parse_args(["fourier"])
        assert args.method == "ode"
        assert args.n == 400
        assert args.k_grid == "-10:0.1:10"
        assert str(args.potential) == "gaussian"

    def test_bad_preset_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args(["scatter", "--potential", "square", "--out", "x.json"])
        assert info.value.code == 2
        assert "unknown preset" in capsys.readouterr().err

    def test_command_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestCommands:
    def test_fourier_zero(self, tmp_path):
        out = tmp_path / "ft.csv"
        assert main(["fourier", "--potential", "zero", "--n", "16", "--k-grid=-1:1:1", "--out", str(out)]) == 0
        table = read_table(out)
        assert table.header == ("k", *ERROR_HEADER)
        assert len(table.rows) == 3
        assert all(float(v) == 0.0 for v in table.column("abs_error"))

    def test_fourier_series_gaussian(self, tmp_path):
        out = tmp_path / "ft.csv"
        argv = ["fourier", "--method", "series", "--n", "512", "--k-grid=-2:1:2", "--out", str(out)]
        assert main(argv) == 0
        assert max(float(v) for v in read_table(out).column("abs_error")) < 1e-7

    def test_series_rejects_shift(self, tmp_path, caplog):
        argv = ["fourier", "--method", "series", "--imag-shift", "0.1", "--k-grid", "0", "--out", str(tmp_path / "x.csv")]
        with caplog.at_level(logging.ERROR):
            assert main(argv) == 2
        assert "real k" in caplog.text

    def test_fourier_custom_has_no_reference(self, tmp_path):
        samples = tmp_path / "q.csv"
        samples.write_text("-1.0,0.0,0.0\n0.0,1.0,0.0\n1.0,0.0,0.0\n")
        out = tmp_path / "ft.csv"
        argv = ["fourier", "--potential", f"custom-samples:path={samples}", "--n", "32", "--k-grid", "0", "--out", str(out)]
        assert main(argv) == 0
        assert read_table(out).header == ("k", "value_re", "value_im")

    def test_scatter_and_invert_zero(self, tmp_path):
        data = tmp_path / "zero.json"
        assert main(["scatter", "--potential", "zero", "--n", "20", "--m", "10", "--grid-size", "32", "--out", str(data)]) == 0
        doc = json.loads(data.read_text())
        assert doc["meta"]["potential"] == "zero"
        assert doc["poles_plus"] == []
        out = tmp_path / "inv.csv"
        assert main(["invscatter", "--data", str(data), "--x-grid=-1:1:1", "--out", str(out)]) == 0
        table = read_table(out)
        assert table.header[-2:] == ("q_error", "r_error")
        assert [float(v) for v in table.column("q_re")] == [0.0, 0.0, 0.0]
        assert table.column("failure") == ["", "", ""]

    def test_scatter_writes_spectral_scale(self, tmp_path):
        data = tmp_path / "zero.json"
        argv = ["scatter", "--potential", "zero", "--n", "20", "--m", "10", "--nu", "2", "--x-nu", "6", "--grid-size", "32", "--out", str(data)]
        assert main(argv) == 0
        assert json.loads(data.read_text())["nu"] == 2.0

    def test_invscatter_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            main(["invscatter", "--data", str(tmp_path / "absent.json")])

    def test_kdv_zero(self, tmp_path):
        out = tmp_path / "kdv.csv"
        assert main(["kdv", "--U0", "0", "--terms", "32", "--x-grid", "0:1:2", "--out", str(out)]) == 0
        table = read_table(out)
        assert table.header == ("x", *ERROR_HEADER, "iterations")
        assert all(float(v) == 0.0 for v in table.column("abs_error"))

    def test_kdv_rejects_negative_x(self, tmp_path):
        assert main(["kdv", "--U0", "0", "--terms", "16", "--x-grid=-1:1:1", "--out", str(tmp_path / "k.csv")]) == 2
