class PermGammaError(Exception):
    """Base class for errors raised by permgamma."""


class RankMismatchError(PermGammaError, ValueError):
    """A permutation and a subset K were built for different n."""


class BoundExceededError(PermGammaError, ValueError):
    """An enumeration was requested beyond the configured size bound."""


class NotFreeLetterError(PermGammaError, ValueError):
    """A valley hop was requested for a peak or a valley."""


class DomainError(PermGammaError, ValueError):
    """An argument lies outside the domain of a partial map."""


class InvariantViolation(PermGammaError, AssertionError):
    """An internal consistency check failed; this signals a bug."""
