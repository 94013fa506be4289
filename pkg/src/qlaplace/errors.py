"""Exception hierarchy shared by all qlaplace modules."""


class QLaplaceError(Exception):
    """Base class for all library errors."""


class DomainError(QLaplaceError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(QLaplaceError):
    """A series failed to converge (divergent parameters or term budget hit)."""


class QuadratureError(QLaplaceError):
    """Adaptive integration could not meet the requested tolerance."""
