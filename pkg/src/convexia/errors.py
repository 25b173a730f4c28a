"""Exception taxonomy shared by the whole package.

The CLI maps these onto its exit-code contract: parse/range errors exit 2,
domain (class mismatch) errors exit 3, budget errors exit 4.
"""


class ConvexiaError(Exception):
    """Base class for all errors raised by convexia."""


class GraphParseError(ConvexiaError):
    """Malformed input text (bad graph6 characters, broken edge lines, ...)."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class GraphRangeError(GraphParseError):
    """A vertex index lies outside the declared range."""


class DomainError(ConvexiaError):
    """Input violates an algorithm's precondition (wrong graph class etc.)."""


class BudgetError(ConvexiaError):
    """An exact-search budget (oracle cap) would be exceeded."""

    def __init__(self, message, cap=None):
        if cap is not None:
            message = f"{message} (cap {cap})"
        super().__init__(message)
        self.cap = cap
