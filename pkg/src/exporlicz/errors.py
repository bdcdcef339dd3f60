"""Exception types shared across the package."""


class ExporliczError(Exception):
    """Base class for all errors raised by this package."""


class InvalidExponentError(ExporliczError, ValueError):
    """Exponent outside [1, inf]."""


class UnsupportedKindError(ExporliczError, ValueError):
    """Operation not defined for this function kind (e.g. psi at p = inf)."""


class InvalidInputError(ExporliczError, ValueError):
    """Input violates a documented precondition."""


class DomainError(ExporliczError, ValueError):
    """Argument outside the mathematical domain of a special function."""


class NoBracketError(ExporliczError, RuntimeError):
    """A monotone bisection could not bracket the threshold.

    ``side`` is "hi" when the predicate stayed infeasible up to the expansion
    cap (threshold above reach) and "lo" when it stayed feasible down to the
    shrink cap (threshold below reach).
    """

    def __init__(self, message, side):
        super().__init__(message)
        self.side = side


class ConvergenceError(ExporliczError, RuntimeError):
    """Iteration budget exhausted; carries the best bracket found."""

    def __init__(self, message, lo, hi):
        super().__init__(message)
        self.lo = lo
        self.hi = hi


class EmptyDomainError(ExporliczError, ValueError):
    """Objective is -inf everywhere on the search domain."""


class CenteringRequiredError(ExporliczError, ValueError):
    """The mgf-domination norm is only defined for mean-zero variables."""
