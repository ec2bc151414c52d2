class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class LeechBoundary(DomainError):
    """dim V_1 = 24: the W-element ratio dim/(dim - 24) is undefined."""


class NotFound(DomainError, LookupError):
    """A lookup key (class name, frame shape, table row) is absent."""
