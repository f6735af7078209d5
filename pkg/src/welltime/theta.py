"""High-precision evaluation of the scaled time eigenfunction Theta.

Theta(y) is the odd solution of

    Theta'' + (y**2 / 4) * Theta = 0,    Theta(0) = 0,  Theta'(0) = a1,

summed from its power series

    Theta(y) = sum_j c_j * y**(4j+1),
    c_0 = a1,   c_j = -c_{j-1} / (4 * (4j) * (4j+1)).

The series alternates and its terms grow to roughly exp(y**2/4) before
shrinking, while the sum stays O(1): summing at argument y destroys about
y**2 / (4 ln 10) leading decimal digits.  Evaluation therefore runs in
decimal floating point with a per-evaluator digit budget;
``required_precision`` gives the floor (cancellation depth plus 20 guard
digits).  Coefficients are carried exactly as rationals and rounded once
per precision level, so the denominators contribute no compounding
round-off.

Everything here is pure: precision travels with the ``ThetaEvaluator`` and
is applied through ``decimal.localcontext`` (thread-local), never through
global state.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .exceptions import ConvergenceError, PrecisionError

__all__ = [
    "ThetaEvaluator",
    "SeriesTerm",
    "series_term",
    "coefficient",
    "required_precision",
    "theta",
    "theta_prime",
    "UNIT_SLOPE_AMPLITUDE",
    "ENVELOPE_NORMALIZED_A1",
]

# The unit-slope solution oscillates inside +/- UNIT_SLOPE_AMPLITUDE / sqrt(y)
# as y grows.  Dividing that out, a1 = ENVELOPE_NORMALIZED_A1 pins the
# asymptotic envelope to exactly +/- 2 / sqrt(y), the normalization under
# which the bundled reference extrema were tabulated (see ERRATA.md).
UNIT_SLOPE_AMPLITUDE = math.sqrt(2.0 * math.gamma(0.25) / math.gamma(0.75))
ENVELOPE_NORMALIZED_A1 = math.sqrt(2.0 * math.gamma(0.75) / math.gamma(0.25))

_COEFF_CHUNK = 64

_lock = threading.RLock()
_unit_coefficients: list[Fraction] = [Fraction(1)]
# (precision, derivative) -> unit coefficients rounded once to that precision
_decimal_coefficients: dict[tuple[int, bool], list[Decimal]] = {}


def required_precision(y) -> int:
    """Decimal digits needed to sum the series at argument ``y``.

    ceil(y**2 / (4 ln 10)) digits are lost to cancellation between terms of
    size ~exp(y**2/4); 20 guard digits cover round-off accumulation.
    """
    yf = float(y)
    if yf < 0:
        raise ValueError("argument must be nonnegative")
    return math.ceil(yf * yf / (4.0 * math.log(10.0))) + 20


def coefficient(j: int, a1=1) -> Fraction:
    """Exact coefficient of y**(4j+1): (-1)**j * a1 / (4**(2j) j! 5*9***(4j+1)).

    Computed by the recurrence c_j = -c_{j-1} / (4 (4j) (4j+1)) in rational
    arithmetic.  Python integers are unbounded, so the exact representation
    cannot overflow or wrap.  ``a1`` must convert exactly to a Fraction
    (ints, Fractions, and binary floats all do).
    """
    if j < 0:
        raise ValueError("term index must be nonnegative")
    with _lock:
        while len(_unit_coefficients) <= j:
            k = len(_unit_coefficients)
            _unit_coefficients.append(_unit_coefficients[-1] / (-4 * (4 * k) * (4 * k + 1)))
        c = _unit_coefficients[j]
    return c * Fraction(a1)


@dataclass(frozen=True)
class SeriesTerm:
    """One series term: coefficient of y**power, with power = 4j+1."""

    j: int
    power: int
    coefficient: Fraction


def series_term(j: int, a1=1) -> SeriesTerm:
    return SeriesTerm(j=j, power=4 * j + 1, coefficient=coefficient(j, a1))


@dataclass(frozen=True)
class ThetaEvaluator:
    """Immutable evaluation policy: normalization, digits carried, term cap.

    ``precision_digits`` must be at least ``required_precision(y)`` for every
    argument the evaluator is asked about; evaluation raises
    ``PrecisionError`` otherwise rather than returning noise.  Instances are
    values: safe to share or copy across threads.
    """

    a1: float = 1.0
    precision_digits: int = 40
    max_terms: int = 5000

    def __post_init__(self):
        if self.a1 == 0:
            raise ValueError("normalization a1 must be nonzero")
        if self.precision_digits < 1:
            raise ValueError("precision_digits must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")

    @classmethod
    def for_max_argument(cls, y_max, a1: float = 1.0, max_terms: int = 5000) -> "ThetaEvaluator":
        """Evaluator with enough digits for any argument in [0, y_max]."""
        return cls(a1=a1, precision_digits=required_precision(y_max), max_terms=max_terms)

    def theta(self, y) -> Decimal:
        return theta(y, self)

    def theta_prime(self, y) -> Decimal:
        return theta_prime(y, self)


def _as_decimal(y) -> Decimal:
    if isinstance(y, Decimal):
        return y
    if isinstance(y, str):
        return Decimal(y)
    if isinstance(y, (int, float)):
        # binary floats convert exactly; no string round-trip
        return Decimal(y)
    raise TypeError(f"cannot interpret {type(y).__name__} as a series argument")


def _coefficients_for(prec: int, derivative: bool, upto: int) -> list[Decimal]:
    """Unit-slope coefficients (times 4j+1 for the derivative) at ``prec`` digits."""
    key = (prec, derivative)
    with _lock:
        cache = _decimal_coefficients.setdefault(key, [])
        if len(cache) < upto:
            coefficient(upto - 1)  # extend the exact cache first
            with localcontext() as ctx:
                ctx.prec = prec
                while len(cache) < upto:
                    j = len(cache)
                    c = _unit_coefficients[j]
                    d = Decimal(c.numerator) / Decimal(c.denominator)
                    if derivative:
                        d *= 4 * j + 1
                    cache.append(d)
        return cache


def _sum_series(y, evaluator: ThetaEvaluator, derivative: bool) -> Decimal:
    yd = _as_decimal(y)
    if yd < 0:
        raise ValueError("argument must be nonnegative (the solution is odd)")
    needed = required_precision(yd)
    if evaluator.precision_digits < needed:
        raise PrecisionError(
            f"argument {float(yd):.6g} needs {needed} decimal digits, "
            f"evaluator carries {evaluator.precision_digits}"
        )
    if yd == 0:
        return Decimal(evaluator.a1) if derivative else Decimal(0)

    prec = evaluator.precision_digits
    coeffs = _coefficients_for(prec, derivative, _COEFF_CHUNK)
    with localcontext() as ctx:
        ctx.prec = prec
        y4 = yd * yd * yd * yd
        ypow = Decimal(evaluator.a1) * (Decimal(1) if derivative else yd)
        total = Decimal(0)
        largest = Decimal(0)
        threshold_scale = Decimal(1).scaleb(-prec)
        below = 0
        for j in range(evaluator.max_terms):
            if j >= len(coeffs):
                coeffs = _coefficients_for(prec, derivative, j + _COEFF_CHUNK)
            term = coeffs[j] * ypow
            total += term
            mag = abs(term)
            if mag > largest:
                largest = mag
            # stop only after three consecutive sub-threshold terms: a single
            # dip near the magnitude turnover is not proof of convergence
            if mag < largest * threshold_scale:
                below += 1
                if below >= 3:
                    return total
            else:
                below = 0
            ypow *= y4
    raise ConvergenceError(
        f"series did not meet the stopping rule within {evaluator.max_terms} terms "
        f"at y = {float(yd):.6g}"
    )


def theta(y, evaluator: ThetaEvaluator) -> Decimal:
    """Theta(y), summed at the evaluator's precision.

    Accepts float, int, str, or Decimal arguments; floats convert exactly.
    Raises ``PrecisionError`` if the evaluator carries too few digits for
    ``y`` and ``ConvergenceError`` if ``max_terms`` is exhausted.
    """
    return _sum_series(y, evaluator, derivative=False)


def theta_prime(y, evaluator: ThetaEvaluator) -> Decimal:
    """dTheta/dy, the term-by-term derivative: sum_j (4j+1) c_j y**(4j)."""
    return _sum_series(y, evaluator, derivative=True)
