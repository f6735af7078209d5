"""Time eigenvalues of the one-dimensional hard-wall box.

High-precision evaluation of the scaled eigenfunction Theta (the odd solution
of Theta'' + (y**2/4) Theta = 0), its zeros and extrema, the physical time
spectrum they induce, and numeric verification that the gauge freedom in the
momentum representation is physically inert.
"""

from .exceptions import (
    BracketError,
    ConvergenceError,
    GridMismatchError,
    IntegrationError,
    PrecisionError,
    WelltimeError,
)
from .extrema import MAXIMUM, MINIMUM, ExtremumRecord, envelope, extrema_table, find_extremum
from .gauge import (
    ComplexGrid,
    GaugeCheck,
    GaugeFunction,
    density_invariance,
    energy_gauge_residual,
    energy_wave,
    run_gauge_suite,
    time_gauge_residual,
    time_wave,
)
from .ode import OdeTrajectory, integrate_ode
from .spectrum import (
    NATURAL_UNITS,
    PhysicalParams,
    SpectrumEntry,
    TimeSpectrum,
    alpha,
    energy_eigenvalue,
    tau_approx,
    tau_approx_as_printed,
    tau_diff,
    tau_diff_approx,
    tau_diff_approx_as_printed,
    tau_n,
    time_spectrum,
    uncertainty_product,
)
from .theta import (
    ENVELOPE_NORMALIZED_A1,
    UNIT_SLOPE_AMPLITUDE,
    SeriesTerm,
    ThetaEvaluator,
    coefficient,
    required_precision,
    series_term,
    theta,
    theta_prime,
)
from .zeros import (
    PRINTED_RADICAL_CONSTANT,
    TABLE_CONSTANT,
    ZeroRecord,
    find_zero,
    predicted_zero,
    zero_table,
)

__version__ = "0.1.0"

__all__ = [
    "WelltimeError", "PrecisionError", "ConvergenceError", "BracketError",
    "IntegrationError", "GridMismatchError",
    "ThetaEvaluator", "SeriesTerm", "series_term", "coefficient",
    "required_precision", "theta", "theta_prime",
    "UNIT_SLOPE_AMPLITUDE", "ENVELOPE_NORMALIZED_A1",
    "OdeTrajectory", "integrate_ode",
    "ZeroRecord", "predicted_zero", "find_zero", "zero_table",
    "PRINTED_RADICAL_CONSTANT", "TABLE_CONSTANT",
    "MAXIMUM", "MINIMUM", "ExtremumRecord", "envelope", "find_extremum", "extrema_table",
    "PhysicalParams", "NATURAL_UNITS", "SpectrumEntry", "TimeSpectrum",
    "alpha", "tau_n", "tau_approx", "tau_approx_as_printed",
    "tau_diff", "tau_diff_approx", "tau_diff_approx_as_printed",
    "energy_eigenvalue", "uncertainty_product", "time_spectrum",
    "GaugeFunction", "ComplexGrid", "GaugeCheck",
    "energy_wave", "time_wave", "energy_gauge_residual", "time_gauge_residual",
    "density_invariance", "run_gauge_suite",
    "__version__",
]
