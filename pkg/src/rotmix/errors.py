"""Exception hierarchy shared by all rotmix modules."""


class RotmixError(Exception):
    """Base class for all toolkit errors."""


class DomainError(RotmixError):
    """An argument is outside the mathematical domain of the operation."""


class ResourceLimitError(RotmixError):
    """A configured work cap (path count, step budget) was exceeded."""


class InternalConsistencyError(RotmixError):
    """An internal exactness check failed; indicates a bug, not bad input."""
