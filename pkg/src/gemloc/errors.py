"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class GemlocError(ValueError):
    """Base class for every error raised by gemloc.

    ``position`` is a 0-based character offset into the text being parsed,
    or ``None`` when the error did not come from text.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at position {self.position})"


class GrammarError(GemlocError):
    """Input outside the supported grammar: invalid parameters, ``ω`` on a non-``Q`` atom."""


class ParseError(GemlocError):
    """Malformed text."""
