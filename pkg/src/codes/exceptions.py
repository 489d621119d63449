"""Custom exception hierarchy for code construction, decoding and simulation."""

from __future__ import annotations


class CodingError(Exception):
    """Base exception for all coding errors.

    Args:
        message: Human-readable error description.
        context: Optional dict of extra context for logging/debugging.
    """

    def __init__(self, message: str = "", context: dict | None = None) -> None:
        super().__init__(message)
        self.context = context or {}


class ParameterError(CodingError):
    """Raised when code parameters or operation preconditions are invalid."""


class SymbolFileError(ParameterError):
    """Raised when a message or symbol file cannot be parsed."""

    def __init__(self, message: str, *, filename: str | None = None, line: int | None = None) -> None:
        self.filename = filename
        self.line = line
        super().__init__(message, context={"filename": filename, "line": line})


class DomainError(CodingError):
    """Raised when a field operation is undefined (e.g. inverse of zero)."""


class InsufficientSymbolsError(CodingError):
    """Raised when a line holds fewer than r+1 known symbols."""


class IntegrityError(CodingError):
    """Raised when known symbols contradict the code structure."""


class ConfigurationError(CodingError):
    """Raised when run configuration loading or validation fails."""


# ── CLI exit codes ───────────────────────────────────

EXIT_OK = 0
EXIT_INCOMPLETE = 1
EXIT_USAGE = 2
EXIT_INTEGRITY = 3


def exit_code_for(exc: Exception) -> int:
    """Map an exception raised by a command to its CLI exit code.

    Args:
        exc: The exception caught at the command boundary.

    Returns:
        3 for integrity failures, 2 for parameter/configuration problems.
        Anything else is re-raised by the caller, so 2 is only a fallback.
    """
    if isinstance(exc, IntegrityError):
        return EXIT_INTEGRITY
    return EXIT_USAGE
