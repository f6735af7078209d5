"""Extrema of Theta and the +/- 2/sqrt(y) envelope they converge to.

Each extremum is the unique stationary point between consecutive zeros
(counting from the wall, so extremum k lies in (z_k, z_{k+1}) with z_1 = 0).
Refinement brackets a sign change of Theta' and bisects; the Newton polish
uses Theta'' = -(y**2/4) Theta, which the ODE supplies for free.

Envelope comparisons match the bundled reference tables when the evaluator
uses ``theta.ENVELOPE_NORMALIZED_A1`` (the tables' normalization); with
a1 = 1 all values scale up by UNIT_SLOPE_AMPLITUDE / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from .exceptions import BracketError
from .rootfind import refine_root
from .theta import ThetaEvaluator, theta, theta_prime
from .zeros import find_zero

__all__ = ["MAXIMUM", "MINIMUM", "ExtremumRecord", "envelope", "find_extremum", "extrema_table"]

MAXIMUM = "maximum"
MINIMUM = "minimum"


@dataclass(frozen=True)
class ExtremumRecord:
    """One extremum: 1-based index k ordered by y, kind, location, value, envelope."""

    k: int
    kind: str
    y: float
    value: float
    predicted: float
    error: float


def envelope(y: float, kind: str) -> float:
    """The asymptotic bound +2/sqrt(y) for maxima, -2/sqrt(y) for minima."""
    if y <= 0:
        raise ValueError("envelope is defined for y > 0")
    if kind not in (MAXIMUM, MINIMUM):
        raise ValueError(f"kind must be {MAXIMUM!r} or {MINIMUM!r}")
    magnitude = 2.0 / math.sqrt(y)
    return magnitude if kind == MAXIMUM else -magnitude


def _extremum_between(k: int, z_lo: float, z_hi: float, evaluator: ThetaEvaluator,
                      tol: float) -> ExtremumRecord:
    with localcontext() as ctx:
        ctx.prec = evaluator.precision_digits
        lo, hi = Decimal(z_lo), Decimal(z_hi)
        f_lo = theta_prime(lo, evaluator)
        f_hi = theta_prime(hi, evaluator)
        if (f_lo < 0) == (f_hi < 0):
            # slopes at consecutive simple zeros must alternate; anything else
            # means the series or its precision policy is broken
            raise BracketError(
                f"theta' does not change sign over ({z_lo:g}, {z_hi:g}); "
                "extremum bracketing failed"
            )
        ystar = refine_root(
            lambda x: theta_prime(x, evaluator),
            lo,
            hi,
            Decimal(tol),
            df=lambda x: -(x * x / 4) * theta(x, evaluator),
            f_lo=f_lo,
            f_hi=f_hi,
        )
        value = theta(ystar, evaluator)
    y = float(ystar)
    kind = MAXIMUM if value > 0 else MINIMUM
    predicted = envelope(y, kind)
    value_f = float(value)
    return ExtremumRecord(k=k, kind=kind, y=y, value=value_f,
                          predicted=predicted, error=value_f - predicted)


def find_extremum(k: int, evaluator: ThetaEvaluator, tol: float = 1e-10) -> ExtremumRecord:
    """The k-th extremum (ordered by y), located between zeros z_k and z_{k+1}."""
    if k < 1:
        raise ValueError("extremum index must be >= 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    z_lo = find_zero(k, evaluator)
    z_hi = find_zero(k + 1, evaluator)
    return _extremum_between(k, z_lo, z_hi, evaluator, tol)


def extrema_table(count: int, evaluator: ThetaEvaluator, tol: float = 1e-10) -> list[ExtremumRecord]:
    """The first ``count`` extrema ordered by y, kinds alternating from a maximum."""
    if count < 1:
        raise ValueError("count must be >= 1")
    zs = [find_zero(n, evaluator) for n in range(1, count + 2)]
    return [
        _extremum_between(k, zs[k - 1], zs[k], evaluator, tol)
        for k in range(1, count + 1)
    ]
