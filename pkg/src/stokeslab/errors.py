"""Exception hierarchy shared by all stokeslab modules."""


class StokesLabError(Exception):
    """Base class for all errors raised by stokeslab."""


class PoleError(StokesLabError):
    """A gamma factor was evaluated at a nonpositive integer where that is fatal."""


class DomainError(StokesLabError):
    """Argument lies outside the domain (branch window, disk, sector) of the operation."""


class ConvergenceError(StokesLabError):
    """A series or quadrature could not certify the requested tolerance."""


class DivergenceError(StokesLabError):
    """An asymptotic series diverges immediately at the requested point."""


class DegenerateParameterError(StokesLabError):
    """Parameters violate a non-resonance or auxiliary admissibility condition."""


class SingularityError(StokesLabError):
    """Evaluation requested at (or too close to) a singular point of the equation."""


class PathError(StokesLabError):
    """Continuation path is invalid: clearance violation, step collapse, or unreachable tolerance."""


class IllConditionedError(StokesLabError):
    """A linear solve against a nearly singular frame was refused."""


class ContourError(StokesLabError):
    """No admissible integration contour separates the pole families."""


class FitError(StokesLabError):
    """A rate fit is degenerate (errors underflow or too few points)."""
