import math
import os

import pytest

from welltime import TABLE_CONSTANT, ThetaEvaluator, find_zero
from welltime.cli import format_number, main

from reference_data import UNCERTAINTY_PRODUCT


def run_cli(*argv):
    return main(list(argv))


def read(path):
    with open(path, "rb") as handle:
        return handle.read()


class TestFormatting:
    def test_nine_significant_digits(self):
        assert format_number(3.3351987790804778) == "3.33519878e+00"
        assert format_number(-0.000478509) == "-4.78509000e-04"

    def test_exact_zero_and_empty(self):
        assert format_number(0.0) == "0"
        assert format_number(None) == ""


class TestZerosCommand:
    def test_header_and_boundary_row(self, tmp_path):
        out = tmp_path / "zeros.csv"
        assert run_cli("zeros", "--count", "1", "--out", str(out)) == 0
        text = read(out).decode()
        assert text == "n,zero_position,difference,predicted,error,relative_error\n1,0,,0,0,\n"

    def test_small_table_values(self, tmp_path):
        out = tmp_path / "zeros.csv"
        assert run_cli("zeros", "--count", "3", "--out", str(out),
                       "--predicted-constant", str(TABLE_CONSTANT)) == 0
        lines = read(out).decode().splitlines()
        assert len(lines) == 4
        row2 = lines[2].split(",")
        assert row2[0] == "2"
        assert float(row2[1]) == pytest.approx(3.3351988, abs=1e-6)
        assert float(row2[3]) == pytest.approx(3.3356785, abs=1e-6)

    def test_deterministic_output(self, tmp_path):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        argv = ("zeros", "--count", "5")
        assert run_cli(*argv, "--out", str(first)) == 0
        assert run_cli(*argv, "--out", str(second)) == 0
        assert read(first) == read(second)

    def test_round_trip_at_emitted_precision(self, tmp_path):
        out = tmp_path / "zeros.csv"
        assert run_cli("zeros", "--count", "4", "--out", str(out)) == 0
        for line in read(out).decode().splitlines()[2:]:
            cells = line.split(",")
            for cell in cells[1:]:
                assert cell != ""
                value = float(cell)
                assert format_number(value) == cell

    def test_tsv_format(self, tmp_path):
        out = tmp_path / "zeros.tsv"
        assert run_cli("zeros", "--count", "2", "--format", "tsv", "--out", str(out)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "n\tzero_position\tdifference\tpredicted\terror\trelative_error"


class TestExtremaCommand:
    def test_rows_and_alternation(self, tmp_path):
        out = tmp_path / "extrema.csv"
        assert run_cli("extrema", "--count", "4", "--out", str(out)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "k,kind,y,value,predicted,error"
        kinds = [line.split(",")[1] for line in lines[1:]]
        assert kinds == ["maximum", "minimum", "maximum", "minimum"]
        first = lines[1].split(",")
        assert float(first[2]) == pytest.approx(2.05768, abs=1e-5)
        assert float(first[3]) == pytest.approx(1.3356, abs=1e-4)

    def test_unit_slope_override(self, tmp_path):
        out = tmp_path / "extrema.csv"
        assert run_cli("extrema", "--count", "1", "--a1", "1.0", "--out", str(out)) == 0
        first = read(out).decode().splitlines()[1].split(",")
        # first maximum of the unit-slope solution: 1.3356025 * amplitude/2
        assert float(first[3]) == pytest.approx(1.6244669, abs=1e-5)


class TestSpectrumCommand:
    def test_values_and_units(self, tmp_path):
        out = tmp_path / "spectrum.csv"
        assert run_cli("spectrum", "--count", "3", "--L", "2", "--out", str(out)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "n,zero_position,tau,tau_approx"
        row2 = lines[1].split(",")
        z2 = float(row2[1])
        assert float(row2[2]) == pytest.approx(4.0 / z2**2, rel=1e-8)


class TestUncertaintyCommand:
    def test_single_line_value(self, tmp_path, capsys):
        assert run_cli("uncertainty") == 0
        line = capsys.readouterr().out.strip()
        assert line.startswith("0.443635")
        assert abs(float(line) - float(UNCERTAINTY_PRODUCT)) <= 1e-4

    def test_written_to_file(self, tmp_path):
        out = tmp_path / "u.txt"
        assert run_cli("uncertainty", "--out", str(out)) == 0
        assert read(out).decode().startswith("0.443635")


class TestGaugeCheckCommand:
    def test_all_pass(self, tmp_path):
        out = tmp_path / "gauge.csv"
        assert run_cli("gauge-check", "--out", str(out)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "case,gauge,grid_step,residual,bound,status"
        assert len(lines) == 10
        assert all(line.endswith("pass") for line in lines[1:])


class TestPlotCommand:
    def test_theta_grid_construction(self, tmp_path):
        out = tmp_path / "theta.csv"
        assert run_cli("plot", "theta", "--y-max", "5", "--samples", "3",
                       "--out", str(out)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "y,theta"
        ys = [line.split(",")[0] for line in lines[1:]]
        assert ys == ["0", "2.50000000e+00", "5.00000000e+00"]
        assert lines[1].split(",")[1] == "0"

    def test_zero_spacing_series(self, tmp_path):
        out = tmp_path / "spacing.csv"
        assert run_cli("plot", "zero_spacing", "--count", "5", "--out", str(out)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "n,spacing"
        assert len(lines) == 5  # rows n = 2..5
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert values[0] == pytest.approx(3.3352, abs=1e-4)
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_relative_error_magnitudes(self, tmp_path):
        out = tmp_path / "rel.csv"
        assert run_cli("plot", "relative_error", "--count", "3", "--out", str(out),
                       "--predicted-constant", str(TABLE_CONSTANT)) == 0
        lines = read(out).decode().splitlines()
        assert lines[0] == "n,relative_error"
        rel3 = float(lines[2].split(",")[1])
        assert abs(rel3) == pytest.approx(1.45e-3, abs=5e-5)

    def test_figure_rendering(self, tmp_path):
        out = tmp_path / "theta.csv"
        fig = tmp_path / "theta.png"
        assert run_cli("plot", "theta", "--y-max", "4", "--samples", "41",
                       "--out", str(out), "--figure", str(fig)) == 0
        payload = read(fig)
        assert payload[:8] == b"\x89PNG\r\n\x1a\n"
        assert len(payload) > 1000


class TestReportCommand:
    def test_directory_contents(self, tmp_path):
        outdir = tmp_path / "report"
        assert run_cli("report", "--outdir", str(outdir), "--count", "12") == 0
        names = sorted(os.listdir(outdir))
        assert names == [
            "extrema.csv",
            "relative_error.png",
            "spectrum.csv",
            "theta_curve.csv",
            "theta_curve.png",
            "uncertainty.txt",
            "zero_spacing.png",
            "zeros.csv",
        ]
        assert read(outdir / "uncertainty.txt").decode().startswith("0.443635")
        zeros_lines = read(outdir / "zeros.csv").decode().splitlines()
        assert len(zeros_lines) == 13
        for png in ("theta_curve.png", "zero_spacing.png", "relative_error.png"):
            assert read(outdir / png)[:8] == b"\x89PNG\r\n\x1a\n"


class TestExitCodes:
    def test_config_error_bad_count(self, capsys):
        assert run_cli("zeros", "--count", "0") == 2
        assert "count" in capsys.readouterr().err

    def test_config_error_low_precision(self, capsys):
        assert run_cli("zeros", "--count", "2", "--precision", "10") == 2
        assert "digits" in capsys.readouterr().err

    def test_config_error_bad_units(self, capsys):
        assert run_cli("spectrum", "--count", "3", "--m", "0") == 2

    def test_config_error_unknown_flag(self, capsys):
        assert run_cli("zeros", "--no-such-flag") == 2

    def test_io_error(self, capsys):
        assert run_cli("zeros", "--count", "2", "--out", "/nonexistent/dir/z.csv") == 4
        assert "i/o" in capsys.readouterr().err

    def test_numeric_error_maps_to_3(self, monkeypatch, capsys):
        # force a numeric failure deep in the run: an evaluator whose term cap
        # is too small for the requested span
        from welltime import cli as cli_module
        from welltime.exceptions import ConvergenceError

        def boom(*args, **kwargs):
            raise ConvergenceError("stub blow-up")

        monkeypatch.setattr(cli_module, "zero_table", boom)
        assert run_cli("zeros", "--count", "2") == 3
        assert "stub blow-up" in capsys.readouterr().err
