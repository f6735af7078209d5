"""Error types shared across the library."""


class WelltimeError(Exception):
    """Base class for library-specific failures."""


class PrecisionError(WelltimeError):
    """An evaluation needs more decimal digits than the evaluator carries."""


class ConvergenceError(WelltimeError):
    """An iterative computation hit its term or iteration cap before converging."""


class BracketError(WelltimeError):
    """No sign change found where a root was expected."""


class IntegrationError(WelltimeError):
    """Adaptive integration failed (step-size underflow or step cap)."""


class GridMismatchError(WelltimeError):
    """Two sampled grids that must share abscissas do not."""
