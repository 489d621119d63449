"""Unit tests for the error hierarchy and CLI exit code mapping."""

import pytest

from src.codes.exceptions import (
    EXIT_INTEGRITY,
    EXIT_USAGE,
    CodingError,
    ConfigurationError,
    DomainError,
    InsufficientSymbolsError,
    IntegrityError,
    ParameterError,
    SymbolFileError,
    exit_code_for,
)


class TestHierarchy:
    @pytest.mark.parametrize(
        "exc_class",
        [ParameterError, SymbolFileError, DomainError, InsufficientSymbolsError, IntegrityError, ConfigurationError],
    )
    def test_subclass_of_coding_error(self, exc_class: type):
        assert issubclass(exc_class, CodingError)

    def test_context_defaults_to_empty(self):
        assert ParameterError("bad").context == {}

    def test_context_kept(self):
        exc = IntegrityError("mismatch", context={"line": 4})
        assert str(exc) == "mismatch"
        assert exc.context == {"line": 4}

    def test_symbol_file_error_location(self):
        exc = SymbolFileError("Bad symbol", filename="w.txt", line=3)
        assert exc.filename == "w.txt"
        assert exc.line == 3
        assert exc.context == {"filename": "w.txt", "line": 3}


class TestExitCodes:
    def test_integrity(self):
        assert exit_code_for(IntegrityError("x")) == EXIT_INTEGRITY == 3

    @pytest.mark.parametrize("exc", [ParameterError("x"), SymbolFileError("x"), ConfigurationError("x")])
    def test_usage(self, exc: Exception):
        assert exit_code_for(exc) == EXIT_USAGE == 2
