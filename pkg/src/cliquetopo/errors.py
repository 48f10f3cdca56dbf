class InvalidArgument(ValueError):
    """Bad parameters: negative sizes, generators out of range, non-prime moduli."""


class BoundExceeded(RuntimeError):
    """A configured size cap (simplex count, matrix size) would be exceeded."""


class NumericalFailure(ArithmeticError):
    """A floating point computation did not meet its exactness guard."""


class InternalError(AssertionError):
    """An internal invariant such as d*d = 0 was violated."""
