"""Exception hierarchy."""


class PGroupCountError(Exception):
    """Base class for every error raised by pgroupcount."""


class NonExactDivisionError(PGroupCountError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ZeroPolynomialError(PGroupCountError, ValueError):
    """A quantity is undefined for the zero polynomial."""


class PartitionError(PGroupCountError, ValueError):
    """Malformed partition, padded partition or chain of partitions."""


class SingularMatrixError(PGroupCountError, ArithmeticError):
    """Matrix has determinant zero."""


class NotPrimePowerError(PGroupCountError, ValueError):
    """A value that must be a power of the chosen prime is not."""


class SizeGuardError(PGroupCountError):
    """Exhaustive enumeration would exceed the configured size bound."""

    def __init__(self, message: str, size: int | None = None, bound: int | None = None):
        super().__init__(message)
        self.size = size
        self.bound = bound


class VerificationMismatch(PGroupCountError):
    """A closed form disagreed with its cross-check."""

    def __init__(self, message: str, diff: dict | None = None):
        super().__init__(message)
        self.diff = diff or {}

    def __repr__(self):
        return f"VerificationMismatch({super().__str__()}, diff={self.diff!r})"
