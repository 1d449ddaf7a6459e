"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an operation receives malformed or out-of-contract input."""


class UnitIdealError(InputError):
    """Raised when a monomial ideal contains the constant monomial 1."""
