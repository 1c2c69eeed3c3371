"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for all domain-level errors raised by this package."""


class InvalidArgument(DomainError, ValueError):
    """An argument is outside the documented domain of an operation."""


class UndefinedPeriod(DomainError):
    """Raised for n < 2: the trajectory of 1 never reaches 2."""


class TooLarge(DomainError):
    """A requested exact rendering exceeds the configured size ceiling."""


class ResourceLimit(DomainError):
    """A computation would exceed a documented practical ceiling."""
