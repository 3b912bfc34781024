"""Exception types raised by the construction pipeline."""


class GQCagesError(Exception):
    """Base class for all package errors."""


class NotPrimePowerError(GQCagesError, ValueError):
    """Raised when a field order is not a prime power."""

    def __init__(self, q, factorization):
        self.q = q
        self.factorization = factorization
        text = "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factorization.items()))
        super().__init__(f"{q} is not a prime power ({q} = {text})")


class FieldMismatchError(GQCagesError, TypeError):
    """Operands of a field operation belong to different fields."""


class SpanDegenerateError(GQCagesError):
    """A span/perp computation did not have the size a regular point requires."""


class AmbiguousPortError(GQCagesError):
    """A vertex that should have exactly one neighbour in a set has another count."""


class FrameMismatchError(GQCagesError):
    """A coordinate formula disagrees with the adjacency of the constructed cage."""


class HyperbolicLineDegenerateError(GQCagesError):
    """The common neighbourhood of the S-sets does not have q-1 elements."""


class NotPerfectMatchingError(GQCagesError):
    """A proposed matching does not cover its vertex set exactly once."""


class GirthViolationError(GQCagesError):
    """The constructed graph does not have the claimed girth."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
