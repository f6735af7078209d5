"""Bracketed root refinement on Decimal values.

Bisection does the guaranteed work; optional Newton steps polish the result
without ever leaving the final bracket.  All arithmetic inherits the caller's
decimal context, so precision is controlled by whoever owns the evaluator.
"""

from __future__ import annotations

from decimal import Decimal
from typing import Callable

from .exceptions import BracketError, ConvergenceError

__all__ = ["refine_root"]

_MAX_BISECTIONS = 400
_NEWTON_POLISH_STEPS = 3


def refine_root(
    f: Callable[[Decimal], Decimal],
    lo: Decimal,
    hi: Decimal,
    tol: Decimal,
    df: Callable[[Decimal], Decimal] | None = None,
    f_lo: Decimal | None = None,
    f_hi: Decimal | None = None,
) -> Decimal:
    """Root of ``f`` inside the sign-change bracket [lo, hi], to width <= tol.

    Bisects until the bracket is narrower than ``tol``; if ``df`` is given,
    up to three Newton steps then polish the midpoint, clamped to the final
    bracket.  Raises ``BracketError`` if f(lo) and f(hi) do not straddle zero.
    """
    if not lo < hi:
        raise ValueError("empty bracket")
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo < 0) == (f_hi < 0):
        raise BracketError(f"no sign change over [{lo}, {hi}]")
    negative_low = f_lo < 0

    for _ in range(_MAX_BISECTIONS):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == negative_low:
            lo = mid
        else:
            hi = mid
    else:
        raise ConvergenceError("bisection failed to reach the requested width")

    root = (lo + hi) / 2
    if df is not None:
        for _ in range(_NEWTON_POLISH_STEPS):
            slope = df(root)
            if slope == 0:
                break
            step = f(root) / slope
            candidate = root - step
            # the polish must stay inside what bisection certified
            if candidate <= lo or candidate >= hi:
                break
            if candidate == root:
                break
            root = candidate
    return root
