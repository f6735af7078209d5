"""Physical time eigenvalues from the dimensionless zeros.

A box of width L with a particle of mass m has time eigenvalues
tau_n = m L**2 / (hbar z_n**2) for n >= 2; the n = 1 zero sits at the wall
(z_1 = 0) and yields no finite eigenvalue.  Everything here is plain
arithmetic on floats; natural units (m = L = hbar = 1) are the default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .theta import ThetaEvaluator
from .zeros import PRINTED_RADICAL_CONSTANT, find_zero

__all__ = [
    "PhysicalParams",
    "NATURAL_UNITS",
    "SpectrumEntry",
    "TimeSpectrum",
    "alpha",
    "tau_n",
    "tau_approx",
    "tau_approx_as_printed",
    "tau_diff",
    "tau_diff_approx",
    "tau_diff_approx_as_printed",
    "energy_eigenvalue",
    "uncertainty_product",
    "time_spectrum",
]


@dataclass(frozen=True)
class PhysicalParams:
    """Mass, box width, and reduced action in any consistent unit system."""

    m: float = 1.0
    L: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.m <= 0 or self.L <= 0 or self.hbar <= 0:
            raise ValueError("m, L, and hbar must all be positive")


NATURAL_UNITS = PhysicalParams()


def alpha(tau: float, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Scaling m / (hbar tau) that makes y = sqrt(alpha) x dimensionless."""
    if tau == 0:
        raise ValueError("tau must be nonzero")
    return params.m / (params.hbar * tau)


def tau_n(z: float, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Time eigenvalue m L**2 / (hbar z**2) for a zero at dimensionless z > 0."""
    if z <= 0:
        raise ValueError("zero position must be positive")
    return params.m * params.L**2 / (params.hbar * z * z)


def tau_approx(n: int, params: PhysicalParams = NATURAL_UNITS,
               constant: float = PRINTED_RADICAL_CONSTANT) -> float:
    """Closed-form eigenvalue with the predicted zero squared in the denominator."""
    if n < 2:
        raise ValueError("finite time eigenvalues start at n = 2")
    denominator = 4.0 * (n - 1) * math.pi - constant
    if denominator <= 0:
        raise ValueError(f"denominator 4(n-1)pi - c = {denominator:g} is not positive")
    return params.m * params.L**2 / (params.hbar * denominator)


def tau_approx_as_printed(n: int, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Variant reading the subtractive term as pi/n instead of a fixed constant.

    Kept for comparison with the fixed-constant form; see ERRATA.md for why
    both exist.
    """
    if n < 2:
        raise ValueError("finite time eigenvalues start at n = 2")
    denominator = 4.0 * (n - 1) * math.pi - math.pi / n
    return params.m * params.L**2 / (params.hbar * denominator)


def tau_diff(n: int, k: int, z_n: float, z_nk: float,
             params: PhysicalParams = NATURAL_UNITS) -> float:
    """tau_n - tau_{n+k} written as one quotient: (m L**2/hbar) (z_nk**2 - z_n**2) / (z_n**2 z_nk**2).

    Algebraically identical to tau_n(z_n) - tau_n(z_nk); the single-quotient
    form avoids cancellation when the two eigenvalues are close.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 < z_n < z_nk:
        raise ValueError("require 0 < z_n < z_{n+k}")
    zn2 = z_n * z_n
    znk2 = z_nk * z_nk
    return params.m * params.L**2 / params.hbar * (znk2 - zn2) / (zn2 * znk2)


def tau_diff_approx(n: int, k: int, params: PhysicalParams = NATURAL_UNITS,
                    constant: float = PRINTED_RADICAL_CONSTANT) -> float:
    """Closed-form eigenvalue difference; k = 0 degenerates to 0 (the numerator 4 pi k vanishes)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 0.0
    d1 = 4.0 * (n - 1) * math.pi - constant
    d2 = 4.0 * (n - 1 + k) * math.pi - constant
    if d1 <= 0 or d2 <= 0:
        raise ValueError("prediction denominator is not positive")
    return params.m * params.L**2 / params.hbar * (4.0 * math.pi * k) / (d1 * d2)


def tau_diff_approx_as_printed(n: int, k: int,
                               params: PhysicalParams = NATURAL_UNITS) -> float:
    """Difference variant with pi/n-style subtractive terms (see ERRATA.md)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 0.0
    d1 = 4.0 * (n - 1) * math.pi - math.pi / n
    d2 = 4.0 * (n - 1 + k) * math.pi - math.pi / (n + k)
    return params.m * params.L**2 / params.hbar * (4.0 * math.pi * k) / (d1 * d2)


def energy_eigenvalue(n: int, params: PhysicalParams = NATURAL_UNITS) -> float:
    """Standard box spectrum n**2 pi**2 hbar**2 / (2 m L**2)."""
    if n < 1:
        raise ValueError("energy quantum number must be >= 1")
    return n * n * math.pi**2 * params.hbar**2 / (2.0 * params.m * params.L**2)


def uncertainty_product(z_2: float) -> float:
    """Lowest energy eigenvalue times lowest time eigenvalue, in units of hbar.

    All m and L dependence cancels, leaving pi**2 / (2 z_2**2) -- a pure
    number slightly under one half.
    """
    if z_2 <= 0:
        raise ValueError("z_2 must be positive")
    return math.pi**2 / (2.0 * z_2 * z_2)


@dataclass(frozen=True)
class SpectrumEntry:
    n: int
    zero: float
    tau: float
    tau_predicted: float


@dataclass(frozen=True)
class TimeSpectrum:
    """Eigenvalues for n = 2..count, strictly decreasing in n."""

    entries: tuple[SpectrumEntry, ...]
    params: PhysicalParams


def time_spectrum(count: int, evaluator: ThetaEvaluator,
                  params: PhysicalParams = NATURAL_UNITS,
                  constant: float = PRINTED_RADICAL_CONSTANT,
                  tol: float = 1e-12) -> TimeSpectrum:
    """Spectrum built from freshly computed zeros z_2..z_count."""
    if count < 2:
        raise ValueError("count must be >= 2 (n = 1 has no finite eigenvalue)")
    entries = []
    for n in range(2, count + 1):
        z = find_zero(n, evaluator, tol)
        entries.append(SpectrumEntry(n=n, zero=z, tau=tau_n(z, params),
                                     tau_predicted=tau_approx(n, params, constant)))
    return TimeSpectrum(entries=tuple(entries), params=params)
