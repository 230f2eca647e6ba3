"""Exception types shared across the package."""


class BudgetExceeded(Exception):
    """An enumeration would exceed the configured candidate-vector budget."""


class DegreeMismatch(ValueError):
    """Two homogeneous polynomials of different degrees were combined."""


class LengthMismatch(ValueError):
    """A coefficient sequence does not match the expected length n + 1."""


class NotPrimePower(ValueError):
    """Requested field size is not a supported prime power."""


class OutOfRange(ValueError):
    """An evaluation point or index lies outside the defined range."""
