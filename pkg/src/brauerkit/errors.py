"""Exception hierarchy shared by every module."""


class BrauerKitError(Exception):
    """Base class for all library errors."""


class ValidationError(BrauerKitError, ValueError):
    """An input violates a documented precondition."""


class DescriptorMismatch(ValidationError):
    """Values from two different fields (or algebras) were combined."""


class SizeLimitExceeded(BrauerKitError):
    """A requested enumeration is larger than the configured limit."""


class UnsupportedError(BrauerKitError):
    """The request is mathematically fine but outside what is implemented.

    Raised instead of returning an answer that could be wrong.
    """


class InternalError(BrauerKitError, AssertionError):
    """A postcondition that holds mathematically failed to verify."""
