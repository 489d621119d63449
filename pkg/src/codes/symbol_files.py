"""Reading and writing message and codeword symbol files.

Symbol files start with a header line ``r m q`` followed by one symbol per
line: a decimal element index, or ``?`` for an erased position. Message files
hold k decimal symbols and no header. Blank lines and ``#`` comments are
ignored in both.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from pathlib import Path

from src.codes.exceptions import ParameterError, SymbolFileError
from src.codes.grm import CodeParams

logger = logging.getLogger(__name__)

ERASURE_MARK = "?"


def _content_lines(path: Path) -> Iterator[tuple[int, str]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SymbolFileError(f"Cannot read {path}: {exc}", filename=str(path)) from exc
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_symbol(token: str, q: int, path: Path, number: int, *, allow_erasure: bool) -> int | None:
    if token == ERASURE_MARK and allow_erasure:
        return None
    try:
        value = int(token)
    except ValueError:
        raise SymbolFileError(f"Invalid symbol {token!r}", filename=str(path), line=number) from None
    if not 0 <= value < q:
        raise SymbolFileError(f"Symbol {value} outside F_{q}", filename=str(path), line=number)
    return value


def read_message_file(path: Path, params: CodeParams) -> list[int]:
    """Read k message symbols for the given code parameters."""
    symbols = [
        _parse_symbol(token, params.q, path, number, allow_erasure=False)
        for number, token in _content_lines(path)
    ]
    if len(symbols) != params.k:
        raise SymbolFileError(f"Expected {params.k} message symbols, found {len(symbols)}", filename=str(path))
    return [s for s in symbols if s is not None]


def read_symbol_file(path: Path) -> tuple[CodeParams, list[int | None]]:
    """Read a codeword or received word; erased positions come back as ``None``."""
    lines = list(_content_lines(path))
    if not lines:
        raise SymbolFileError("Empty symbol file", filename=str(path))
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 3:
        raise SymbolFileError(f"Header must be 'r m q', got {header!r}", filename=str(path), line=number)
    try:
        r, m, q = (int(v) for v in fields)
        params = CodeParams(r=r, m=m, q=q)
    except (ValueError, ParameterError) as exc:
        raise SymbolFileError(f"Invalid header {header!r}: {exc}", filename=str(path), line=number) from exc

    symbols = [_parse_symbol(token, params.q, path, n, allow_erasure=True) for n, token in lines[1:]]
    if len(symbols) != params.n:
        raise SymbolFileError(f"Expected {params.n} symbols, found {len(symbols)}", filename=str(path))
    return params, symbols


def format_symbols(params: CodeParams, symbols: Sequence[int | None]) -> str:
    body = "\n".join(ERASURE_MARK if s is None else str(int(s)) for s in symbols)
    return f"{params.header()}\n{body}\n"


def write_symbol_file(path: Path, params: CodeParams, symbols: Sequence[int | None]) -> None:
    if len(symbols) != params.n:
        raise ParameterError(
            f"Expected {params.n} symbols, got {len(symbols)}",
            context={"path": str(path), **params.as_dict()},
        )
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_symbols(params, symbols), encoding="utf-8")
    logger.debug("Wrote %d symbols to %s", len(symbols), path)
