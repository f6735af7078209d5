"""Zeros of Theta and the one-constant closed-form prediction for them.

The n-th zero z_n (n = 1 at the wall, z_1 = 0) is located by bracketing a
sign change of the series around the predicted position and refining with
bisection plus a guarded Newton polish.  Zeros do not depend on the
normalization a1.

Two prediction constants ship with the library:

* ``PRINTED_RADICAL_CONSTANT`` (sqrt(pi)) -- the constant in the closed form
  as usually quoted, sqrt(4 (n-1) pi - c);
* ``TABLE_CONSTANT`` (1.439620) -- the constant the bundled reference
  prediction column actually back-solves to (see ERRATA.md).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from .exceptions import BracketError, PrecisionError
from .rootfind import refine_root
from .theta import ThetaEvaluator, required_precision, theta, theta_prime

__all__ = [
    "ZeroRecord",
    "PRINTED_RADICAL_CONSTANT",
    "TABLE_CONSTANT",
    "predicted_zero",
    "find_zero",
    "zero_table",
]

PRINTED_RADICAL_CONSTANT = math.sqrt(math.pi)
TABLE_CONSTANT = 1.439620

_SCAN_HALF_STEPS = 4  # scan covers guess +/- one predicted spacing
_MARCH_LIMIT = 64


@dataclass(frozen=True)
class ZeroRecord:
    """One table row: position, spacing to the previous zero, prediction, errors.

    ``spacing`` and ``relative_error`` are None for n = 1, where the zero sits
    exactly at the wall.
    """

    n: int
    position: float
    spacing: float | None
    predicted: float
    error: float
    relative_error: float | None


def predicted_zero(n: int, constant: float = PRINTED_RADICAL_CONSTANT) -> float:
    """Closed-form estimate sqrt(4 (n-1) pi - constant); exactly 0 for n = 1.

    n = 1 is the boundary zero pinned at the wall, so no formula applies.
    Raises ``ValueError`` when the radicand is not positive.
    """
    if n < 1:
        raise ValueError("zero index must be >= 1")
    if constant < 0:
        raise ValueError("prediction constant must be nonnegative")
    if n == 1:
        return 0.0
    radicand = 4.0 * (n - 1) * math.pi - constant
    if radicand <= 0:
        raise ValueError(f"radicand 4(n-1)pi - c = {radicand:g} is not positive for n = {n}")
    return math.sqrt(radicand)


def _scan_bracket(guess: float, evaluator: ThetaEvaluator):
    """Sign-change bracket nearest to ``guess``, scanning +/- one spacing."""
    half = math.pi / guess  # half the local asymptotic spacing 2*pi/z
    offsets = [i * half / 2 for i in range(-_SCAN_HALF_STEPS, _SCAN_HALF_STEPS + 1)]
    points = [guess + o for o in offsets if guess + o > 0]
    values = [theta(p, evaluator) for p in points]
    best = None
    for i in range(len(points) - 1):
        if (values[i] < 0) != (values[i + 1] < 0):
            mid = (points[i] + points[i + 1]) / 2
            dist = abs(mid - guess)
            if best is None or dist < best[0]:
                best = (dist, points[i], points[i + 1], values[i], values[i + 1])
    if best is None:
        return None
    _, lo, hi, f_lo, f_hi = best
    return Decimal(lo), Decimal(hi), f_lo, f_hi


def _march_bracket(z_prev: float, evaluator: ThetaEvaluator):
    """Walk upward from the previous zero in half-spacing steps to a sign change."""
    x = z_prev
    step = math.pi / max(x, 2.0)
    x += step / 4  # move off the zero before sampling the sign
    f_here = theta(x, evaluator)
    for _ in range(_MARCH_LIMIT):
        step = math.pi / max(x, 2.0)
        x_next = x + step
        f_next = theta(x_next, evaluator)
        if (f_here < 0) != (f_next < 0):
            return Decimal(x), Decimal(x_next), f_here, f_next
        x, f_here = x_next, f_next
    raise BracketError(f"no sign change within {_MARCH_LIMIT} steps above z = {z_prev:g}")


def find_zero(n: int, evaluator: ThetaEvaluator, tol: float = 1e-12) -> float:
    """The n-th zero of Theta to bracket width <= tol; n = 1 returns 0 exactly.

    Brackets around the closed-form prediction (falling back to marching up
    from the previous zero), then bisects and Newton-polishes without leaving
    the bracket.  Raises ``PrecisionError`` if the evaluator cannot resolve
    arguments near the zero, ``BracketError`` if no sign change turns up.
    """
    if n < 1:
        raise ValueError("zero index must be >= 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if n == 1:
        return 0.0

    # internal guess: the back-solved constant tracks the true zeros best
    guess = predicted_zero(n, TABLE_CONSTANT)
    needed = required_precision(guess + 2.0 * math.pi / guess)  # scan reach
    if evaluator.precision_digits < needed:
        raise PrecisionError(
            f"zero #{n} near y = {guess:.4g} needs {needed} digits, "
            f"evaluator carries {evaluator.precision_digits}"
        )

    bracket = _scan_bracket(guess, evaluator)
    if bracket is None:
        z_prev = find_zero(n - 1, evaluator, tol)
        bracket = _march_bracket(z_prev, evaluator)
    lo, hi, f_lo, f_hi = bracket

    with localcontext() as ctx:
        ctx.prec = evaluator.precision_digits
        root = refine_root(
            lambda x: theta(x, evaluator),
            lo,
            hi,
            Decimal(tol),
            df=lambda x: theta_prime(x, evaluator),
            f_lo=f_lo,
            f_hi=f_hi,
        )
    return float(root)


def zero_table(
    count: int,
    evaluator: ThetaEvaluator,
    constant: float = PRINTED_RADICAL_CONSTANT,
    tol: float = 1e-12,
) -> list[ZeroRecord]:
    """Records for zeros 1..count with spacings, predictions, and errors.

    ``relative_error`` follows the convention (position - predicted) / position.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    records = []
    previous = None
    for n in range(1, count + 1):
        position = find_zero(n, evaluator, tol)
        predicted = predicted_zero(n, constant)
        error = position - predicted
        records.append(
            ZeroRecord(
                n=n,
                position=position,
                spacing=None if n == 1 else position - previous,
                predicted=predicted,
                error=error,
                relative_error=None if n == 1 else error / position,
            )
        )
        previous = position
    return records
