"""Command-line front end: regenerate the reference tables and figures.

Commands
--------
zeros         60-row zero table (position, spacing, prediction, errors)
extrema       maxima/minima with the +/- 2/sqrt(y) envelope comparison
spectrum      time eigenvalues tau_n with their closed-form approximations
uncertainty   lowest energy x lowest time eigenvalue, in units of hbar
gauge-check   run the built-in gauge-invariance suite and report residuals
plot          two-column data files (theta curve, zero spacings, prediction
              errors), optionally rendered to PNG with --figure
report        everything above into a directory, data files plus figures

Numbers are written with 9 significant digits in scientific notation (exact
zeros as plain ``0``, undefined cells empty), so identical invocations give
byte-identical files.  Exit codes: 0 success, 2 bad configuration, 3 numeric
failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import os
import sys
from dataclasses import dataclass

from .exceptions import (
    BracketError,
    ConvergenceError,
    GridMismatchError,
    IntegrationError,
    PrecisionError,
)
from .extrema import extrema_table
from .gauge import run_gauge_suite
from .spectrum import PhysicalParams, tau_approx, tau_n, uncertainty_product
from .theta import ENVELOPE_NORMALIZED_A1, ThetaEvaluator, required_precision, theta
from .zeros import PRINTED_RADICAL_CONSTANT, TABLE_CONSTANT, find_zero, predicted_zero, zero_table

__all__ = ["RunConfig", "run", "main", "format_number", "emit_plot_data"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

_SEPARATORS = {"csv": ",", "tsv": "\t"}

_ZEROS_HEADER = ["n", "zero_position", "difference", "predicted", "error", "relative_error"]
_EXTREMA_HEADER = ["k", "kind", "y", "value", "predicted", "error"]
_SPECTRUM_HEADER = ["n", "zero_position", "tau", "tau_approx"]
_GAUGE_HEADER = ["case", "gauge", "grid_step", "residual", "bound", "status"]

_REPORT_THETA_SPAN = 30.0
_REPORT_THETA_SAMPLES = 1501


class ConfigError(Exception):
    """Invalid run configuration (maps to exit code 2)."""


@dataclass
class RunConfig:
    """Everything one invocation needs; identical configs give identical bytes."""

    command: str
    count: int = 60
    precision: int | None = None
    predicted_constant: float = PRINTED_RADICAL_CONSTANT
    m: float = 1.0
    L: float = 1.0
    hbar: float = 1.0
    output_path: str = "-"
    format: str = "csv"
    a1: float | None = None
    what: str | None = None
    y_max: float = 30.0
    samples: int = 601
    figure: str | None = None
    outdir: str | None = None


def format_number(value) -> str:
    """9 significant digits, scientific, no trailing-zero trimming.

    Exact zeros print as ``0`` and None (undefined cell) prints as empty.
    """
    if value is None:
        return ""
    v = float(value)
    if v == 0:
        return "0"
    return f"{v:.8e}"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return format_number(value)


def _table_text(header: list[str], rows, sep: str) -> str:
    lines = [sep.join(header)]
    lines.extend(sep.join(_cell(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as handle:
        handle.write(text)


def _params(config: RunConfig) -> PhysicalParams:
    try:
        return PhysicalParams(m=config.m, L=config.L, hbar=config.hbar)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _resolve_precision(config: RunConfig, y_needed: float) -> int:
    needed = required_precision(y_needed)
    if config.precision is None:
        return needed
    if config.precision < needed:
        raise ConfigError(
            f"--precision {config.precision} is below the {needed} digits needed "
            f"near y = {y_needed:.4g}"
        )
    return config.precision


def _resolve_a1(config: RunConfig) -> float:
    a1 = ENVELOPE_NORMALIZED_A1 if config.a1 is None else config.a1
    if a1 == 0:
        raise ConfigError("a1 must be nonzero")
    return a1


def _check_constant(config: RunConfig) -> None:
    if config.predicted_constant < 0:
        raise ConfigError("--predicted-constant must be nonnegative")


def _zeros_span(count: int) -> float:
    # bracketing scans up to one full spacing (2 pi / z) past the last prediction
    guess = predicted_zero(max(count, 2), TABLE_CONSTANT)
    return guess + 2.0 * math.pi / guess + 0.1


def _zero_rows(records) -> list[list]:
    return [
        [r.n, r.position, r.spacing, r.predicted, r.error, r.relative_error]
        for r in records
    ]


def emit_plot_data(config: RunConfig) -> tuple[list[str], list[list]]:
    """Header and rows for the requested plot data set (theta curve or per-zero series)."""
    if config.what == "theta":
        if config.samples < 2:
            raise ConfigError("--samples must be >= 2")
        if config.y_max <= 0:
            raise ConfigError("--y-max must be positive")
        prec = _resolve_precision(config, config.y_max)
        evaluator = ThetaEvaluator(a1=_resolve_a1(config), precision_digits=prec)
        step = config.y_max / (config.samples - 1)
        rows = []
        for i in range(config.samples):
            y = i * step
            rows.append([y, float(theta(y, evaluator))])
        return ["y", "theta"], rows

    _check_constant(config)
    if config.count < 2:
        raise ConfigError("--count must be >= 2 for per-zero data")
    prec = _resolve_precision(config, _zeros_span(config.count))
    evaluator = ThetaEvaluator(precision_digits=prec)
    records = zero_table(config.count, evaluator, constant=config.predicted_constant)
    if config.what == "zero_spacing":
        return ["n", "spacing"], [[r.n, r.spacing] for r in records if r.n >= 2]
    if config.what == "relative_error":
        return ["n", "relative_error"], [[r.n, r.relative_error] for r in records if r.n >= 2]
    raise ConfigError(f"unknown plot data set {config.what!r}")


def _render_figure(config: RunConfig, header: list[str], rows: list[list]) -> None:
    from . import plots  # lazy: pulls in matplotlib

    xs = [row[0] for row in rows]
    vs = [row[1] for row in rows]
    if config.what == "theta":
        plots.render_theta(config.figure, xs, vs)
    elif config.what == "zero_spacing":
        plots.render_zero_spacing(config.figure, xs, vs)
    else:
        plots.render_relative_error(config.figure, xs, vs)


def _cmd_zeros(config: RunConfig) -> int:
    if config.count < 1:
        raise ConfigError("--count must be >= 1")
    _check_constant(config)
    prec = _resolve_precision(config, _zeros_span(config.count))
    evaluator = ThetaEvaluator(precision_digits=prec)
    records = zero_table(config.count, evaluator, constant=config.predicted_constant)
    _emit(config.output_path, _table_text(_ZEROS_HEADER, _zero_rows(records),
                                          _SEPARATORS[config.format]))
    return EXIT_OK


def _cmd_extrema(config: RunConfig) -> int:
    if config.count < 1:
        raise ConfigError("--count must be >= 1")
    prec = _resolve_precision(config, _zeros_span(config.count + 1))
    evaluator = ThetaEvaluator(a1=_resolve_a1(config), precision_digits=prec)
    records = extrema_table(config.count, evaluator)
    rows = [[r.k, r.kind, r.y, r.value, r.predicted, r.error] for r in records]
    _emit(config.output_path, _table_text(_EXTREMA_HEADER, rows, _SEPARATORS[config.format]))
    return EXIT_OK


def _cmd_spectrum(config: RunConfig) -> int:
    if config.count < 2:
        raise ConfigError("--count must be >= 2 (the n = 1 zero has no finite tau)")
    _check_constant(config)
    params = _params(config)
    prec = _resolve_precision(config, _zeros_span(config.count))
    evaluator = ThetaEvaluator(precision_digits=prec)
    rows = []
    for n in range(2, config.count + 1):
        z = find_zero(n, evaluator)
        rows.append([n, z, tau_n(z, params), tau_approx(n, params, config.predicted_constant)])
    _emit(config.output_path, _table_text(_SPECTRUM_HEADER, rows, _SEPARATORS[config.format]))
    return EXIT_OK


def _cmd_uncertainty(config: RunConfig) -> int:
    prec = _resolve_precision(config, 4.5)
    evaluator = ThetaEvaluator(precision_digits=prec)
    z2 = find_zero(2, evaluator)
    _emit(config.output_path, f"{uncertainty_product(z2):.9f}\n")
    return EXIT_OK


def _cmd_gauge_check(config: RunConfig) -> int:
    params = _params(config)
    checks = run_gauge_suite(params)
    rows = [
        [c.case, c.gauge, c.grid_step, c.residual, c.bound, "pass" if c.passed else "fail"]
        for c in checks
    ]
    _emit(config.output_path, _table_text(_GAUGE_HEADER, rows, _SEPARATORS[config.format]))
    failed = [c for c in checks if not c.passed]
    if failed:
        for c in failed:
            print(
                f"gauge check failed: {c.case} with {c.gauge}: "
                f"residual {c.residual:.3e} > bound {c.bound:.3e}",
                file=sys.stderr,
            )
        return EXIT_NUMERIC
    return EXIT_OK


def _cmd_plot(config: RunConfig) -> int:
    header, rows = emit_plot_data(config)
    _emit(config.output_path, _table_text(header, rows, _SEPARATORS[config.format]))
    if config.figure:
        _render_figure(config, header, rows)
    return EXIT_OK


def _cmd_report(config: RunConfig) -> int:
    if config.outdir is None:
        raise ConfigError("--outdir is required")
    if config.count < 2:
        raise ConfigError("--count must be >= 2")
    _check_constant(config)
    params = _params(config)
    sep = _SEPARATORS[config.format]
    ext = config.format
    os.makedirs(config.outdir, exist_ok=True)

    def path(name: str) -> str:
        return os.path.join(config.outdir, name)

    prec = _resolve_precision(config, max(_zeros_span(config.count + 1), _REPORT_THETA_SPAN))
    a1 = _resolve_a1(config)

    records = zero_table(config.count, ThetaEvaluator(precision_digits=prec),
                         constant=config.predicted_constant)
    _emit(path(f"zeros.{ext}"), _table_text(_ZEROS_HEADER, _zero_rows(records), sep))

    spectrum_rows = [
        [r.n, r.position, tau_n(r.position, params),
         tau_approx(r.n, params, config.predicted_constant)]
        for r in records
        if r.n >= 2
    ]
    _emit(path(f"spectrum.{ext}"), _table_text(_SPECTRUM_HEADER, spectrum_rows, sep))

    _emit(path("uncertainty.txt"), f"{uncertainty_product(records[1].position):.9f}\n")

    extrema_records = extrema_table(
        min(config.count, 14),
        ThetaEvaluator(a1=a1, precision_digits=prec),
    )
    extrema_rows = [[r.k, r.kind, r.y, r.value, r.predicted, r.error] for r in extrema_records]
    _emit(path(f"extrema.{ext}"), _table_text(_EXTREMA_HEADER, extrema_rows, sep))

    theta_eval = ThetaEvaluator(a1=a1, precision_digits=prec)
    step = _REPORT_THETA_SPAN / (_REPORT_THETA_SAMPLES - 1)
    curve = [[i * step, float(theta(i * step, theta_eval))] for i in range(_REPORT_THETA_SAMPLES)]
    _emit(path(f"theta_curve.{ext}"), _table_text(["y", "theta"], curve, sep))

    from . import plots  # lazy: pulls in matplotlib

    plots.render_theta(path("theta_curve.png"), [r[0] for r in curve], [r[1] for r in curve])
    tail = [r for r in records if r.n >= 2]
    plots.render_zero_spacing(path("zero_spacing.png"), [r.n for r in tail],
                              [r.spacing for r in tail])
    plots.render_relative_error(path("relative_error.png"), [r.n for r in tail],
                                [r.relative_error for r in tail])
    print(f"report written to {config.outdir}")
    return EXIT_OK


_HANDLERS = {
    "zeros": _cmd_zeros,
    "extrema": _cmd_extrema,
    "spectrum": _cmd_spectrum,
    "uncertainty": _cmd_uncertainty,
    "gauge-check": _cmd_gauge_check,
    "plot": _cmd_plot,
    "report": _cmd_report,
}


def run(config: RunConfig) -> int:
    """Execute one configuration; returns the process exit code."""
    handler = _HANDLERS.get(config.command)
    if handler is None:
        print(f"error: unknown command {config.command!r}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return handler(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (PrecisionError, ConvergenceError, BracketError, IntegrationError,
            GridMismatchError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", dest="output_path", default="-",
                        help="output file path, or '-' for stdout (default)")
    parser.add_argument("--format", choices=("csv", "tsv"), default="csv",
                        help="delimiter for tabular output (default: csv)")


def _add_precision_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--precision", type=int, default=None,
                        help="decimal digits carried in series summation "
                             "(default: auto from the largest argument)")


def _add_constant_option(parser: argparse.ArgumentParser, default: float) -> None:
    parser.add_argument("--predicted-constant", type=float, default=default,
                        help="subtractive constant inside the prediction radical "
                             f"sqrt(4(n-1)pi - c) (default {default:.6f}; sqrt(pi) "
                             f"= {PRINTED_RADICAL_CONSTANT:.6f} is the closed form, "
                             f"{TABLE_CONSTANT} reproduces the bundled reference column)")


def _add_unit_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=float, default=1.0, help="particle mass (default 1)")
    parser.add_argument("--L", type=float, default=1.0, help="box width (default 1)")
    parser.add_argument("--hbar", type=float, default=1.0, help="reduced action (default 1)")


def _add_a1_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a1", type=float, default=None,
                        help="slope of theta at the origin (default "
                             f"{ENVELOPE_NORMALIZED_A1:.7f}, which pins the envelope "
                             "to exactly 2/sqrt(y); pass 1 for the unit-slope solution)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="welltime",
        description="Time eigenvalues of the one-dimensional hard-wall box: "
                    "tables, figures, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="zero table with spacings and predictions")
    p.add_argument("--count", type=int, default=60, help="number of zeros (default 60)")
    _add_constant_option(p, PRINTED_RADICAL_CONSTANT)
    _add_precision_option(p)
    _add_output_options(p)

    p = sub.add_parser("extrema", help="maxima/minima against the 2/sqrt(y) envelope")
    p.add_argument("--count", type=int, default=14, help="number of extrema (default 14)")
    _add_a1_option(p)
    _add_precision_option(p)
    _add_output_options(p)

    p = sub.add_parser("spectrum", help="time eigenvalues from the computed zeros")
    p.add_argument("--count", type=int, default=60, help="largest zero index (default 60)")
    _add_constant_option(p, PRINTED_RADICAL_CONSTANT)
    _add_unit_options(p)
    _add_precision_option(p)
    _add_output_options(p)

    p = sub.add_parser("uncertainty",
                       help="lowest energy x lowest time eigenvalue, in units of hbar")
    _add_precision_option(p)
    _add_output_options(p)

    p = sub.add_parser("gauge-check", help="run the built-in gauge-invariance suite")
    _add_unit_options(p)
    _add_output_options(p)

    p = sub.add_parser("plot", help="two-column plot data, optionally rendered to PNG")
    p.add_argument("what", choices=("theta", "zero_spacing", "relative_error"))
    p.add_argument("--y-max", type=float, default=30.0,
                   help="theta curve span (default 30)")
    p.add_argument("--samples", type=int, default=601,
                   help="theta curve sample count (default 601)")
    p.add_argument("--count", type=int, default=60,
                   help="zero count for per-zero data (default 60)")
    _add_constant_option(p, PRINTED_RADICAL_CONSTANT)
    _add_a1_option(p)
    p.add_argument("--figure", default=None, help="also render a PNG to this path")
    _add_precision_option(p)
    _add_output_options(p)

    p = sub.add_parser("report", help="all tables, data files, and figures into a directory")
    p.add_argument("--outdir", required=True, help="directory for the report files")
    p.add_argument("--count", type=int, default=60, help="number of zeros (default 60)")
    _add_constant_option(p, TABLE_CONSTANT)
    _add_a1_option(p)
    _add_unit_options(p)
    _add_precision_option(p)
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for field in dataclasses.fields(RunConfig):
        if field.name != "command" and hasattr(args, field.name):
            setattr(config, field.name, getattr(args, field.name))
    return config


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CONFIG
    return run(_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
