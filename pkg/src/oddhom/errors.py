"""Exception hierarchy shared by every module and mapped to CLI exit codes."""

from __future__ import annotations


class OddhomError(Exception):
    """Base class for library errors."""


class InvalidInput(OddhomError, ValueError):
    """Input violates an operation's precondition (CLI exit code 2)."""


class ParseError(InvalidInput):
    """Malformed graph6 / edge-list / JSON input."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class GuardExceeded(OddhomError):
    """A desk-scale size guard refused the request (CLI exit code 3)."""


class LimitExceeded(GuardExceeded):
    """Enumeration produced more results than the caller allowed."""

    def __init__(self, message: str, count_so_far: int):
        super().__init__(message)
        self.count_so_far = count_so_far
