"""Exception types shared across the package."""


class EigenpermError(Exception):
    """Base class for all errors raised by eigenperm."""


class OrderTooSmall(EigenpermError, ValueError):
    """A truncated series does not carry enough coefficients."""


class NonInvertible(EigenpermError, ValueError):
    """Series reversion requested for a series with vanishing linear term."""


class NotARationalSquare(EigenpermError, ValueError):
    """Leading coefficient has no rational square root."""


class NonPositiveLeading(EigenpermError, ValueError):
    """Leading coefficient is zero or negative."""


class PartsSumMismatch(EigenpermError, ValueError):
    pass


class InvalidCensus(EigenpermError, ValueError):
    """Outdegree counts do not describe any ordered tree."""


class LimitExceeded(EigenpermError, ValueError):
    """Requested size is beyond the configured enumeration limit."""


class EmptyPermutation(EigenpermError, ValueError):
    pass


class ConditionIViolation(EigenpermError, ValueError):
    """Permutation blocks between left-to-right maxima are not set-increasing."""


class InvalidTree(EigenpermError, ValueError):
    pass


class ParseError(EigenpermError, ValueError):
    pass


class VerificationError(EigenpermError):
    """A mathematical identity that must hold was found to fail."""
