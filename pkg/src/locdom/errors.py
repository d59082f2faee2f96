"""Exception hierarchy shared by every module."""


class LocDomError(Exception):
    """Base class for all errors raised by locdom."""


class ParseError(LocDomError):
    """Input text is not in the announced format."""


class GraphValidationError(LocDomError):
    """Input describes something that is not a simple graph (loop, duplicate edge, ...)."""


class PreconditionError(LocDomError):
    """An operation was called on an input outside its domain."""


class CapExceededError(LocDomError):
    """An exact computation was refused because the instance exceeds a size cap.

    Callers may raise the cap explicitly or fall back to bounds-only mode.
    """

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} = {size} exceeds cap {cap}; raise the cap or use bounds-only mode")


class ConstructionError(LocDomError):
    """A constructive procedure failed (retries exhausted, internal invariant broken)."""
