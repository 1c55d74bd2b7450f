"""Exception hierarchy shared by every layer of the package."""


class ComaxError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(ComaxError, ValueError):
    """A constructor or operation received a parameter outside its domain."""


class ResourceLimit(ComaxError):
    """A configured cap (group order, subgroup count, closure size) was exceeded."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class AmbientMismatch(ComaxError, ValueError):
    """Two subgroup sets (or a lattice and a group) belong to different groups."""


class SpecSyntaxError(ComaxError, ValueError):
    """Group-spec text could not be tokenized or parsed."""

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class SpecSemanticError(ComaxError, ValueError):
    """Group-spec text parsed, but a parameter violates its constraint."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)


class OutOfScope(ComaxError, ValueError):
    """A predictor was asked about an input its hypothesis does not cover."""


class InternalInconsistency(ComaxError, AssertionError):
    """Recognizer verdicts contradict a known class containment."""
