"""Reception state of a GRM word and the report every decoder returns."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import IntEnum
from typing import TYPE_CHECKING, Any

from src.codes.exceptions import IntegrityError, ParameterError
from src.codes.rsline import ERASED

if TYPE_CHECKING:
    from src.codes.grm import GrmCode


class SymbolStatus(IntEnum):
    ERASED = 0
    RECEIVED = 1
    RECOVERED = 2


class ReceptionState:
    """Per-position symbol status of one word: Received(v), Recovered(v) or Erased.

    A state is owned by a single decode call at a time; decoders copy their
    input before changing anything.

    Attributes:
        values: Symbol per position, ``ERASED`` (-1) where unknown.
        status: ``SymbolStatus`` per position.
        info_set: Information-set positions of the code the word belongs to.
    """

    __slots__ = ("info_set", "status", "values")

    def __init__(self, values: list[int], status: list[SymbolStatus], info_set: Sequence[int]) -> None:
        if len(values) != len(status):
            raise ParameterError("values and status lengths differ", context={"values": len(values), "status": len(status)})
        self.values = values
        self.status = status
        self.info_set = tuple(info_set)

    # ── Constructors ──

    @classmethod
    def erased(cls, code: GrmCode) -> ReceptionState:
        return cls([ERASED] * code.n, [SymbolStatus.ERASED] * code.n, code.info_set)

    @classmethod
    def from_symbols(cls, code: GrmCode, symbols: Sequence[int | None]) -> ReceptionState:
        """Received word with ``None`` marking erasures."""
        if len(symbols) != code.n:
            raise ParameterError(f"Expected {code.n} symbols, got {len(symbols)}", context=code.params.as_dict())
        state = cls.erased(code)
        for position, value in enumerate(symbols):
            if value is not None:
                state.receive(position, int(code.field.check(int(value))))
        return state

    @classmethod
    def from_codeword(cls, code: GrmCode, codeword: Sequence[int], received: Iterable[int]) -> ReceptionState:
        """The codeword seen through an erasure channel that delivered ``received`` positions."""
        state = cls.erased(code)
        for position in received:
            state.receive(int(position), int(codeword[int(position)]))
        return state

    def copy(self) -> ReceptionState:
        clone = ReceptionState.__new__(ReceptionState)
        clone.values = list(self.values)
        clone.status = list(self.status)
        clone.info_set = self.info_set
        return clone

    # ── Mutation ──

    def receive(self, position: int, value: int) -> bool:
        """Mark a symbol received.

        Returns:
            True when the position was unknown before, False when it had
            already been recovered (the status is upgraded after a consistency check).

        Raises:
            ParameterError: Position out of range or already received.
            IntegrityError: The received value contradicts a recovered one.
        """
        if not 0 <= position < len(self.values):
            raise ParameterError(f"Position {position} out of range", context={"n": len(self.values)})
        current = self.status[position]
        if current == SymbolStatus.RECEIVED:
            raise ParameterError(f"Position {position} already received", context={"position": position})
        if current == SymbolStatus.RECOVERED:
            if self.values[position] != value:
                raise IntegrityError(
                    f"Received value at {position} contradicts the recovered one",
                    context={"position": position, "received": value, "recovered": self.values[position]},
                )
            self.status[position] = SymbolStatus.RECEIVED
            return False
        self.values[position] = value
        self.status[position] = SymbolStatus.RECEIVED
        return True

    def recover(self, position: int, value: int) -> None:
        self.values[position] = value
        self.status[position] = SymbolStatus.RECOVERED

    # ── Queries ──

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def known_count(self) -> int:
        return sum(1 for s in self.status if s != SymbolStatus.ERASED)

    @property
    def info_known_count(self) -> int:
        status = self.status
        return sum(1 for i in self.info_set if status[i] != SymbolStatus.ERASED)

    @property
    def recovered_count(self) -> int:
        return sum(1 for s in self.status if s == SymbolStatus.RECOVERED)

    def is_known(self, position: int) -> bool:
        return self.status[position] != SymbolStatus.ERASED

    def erased_positions(self) -> list[int]:
        return [i for i, s in enumerate(self.status) if s == SymbolStatus.ERASED]

    def known_positions(self) -> list[int]:
        return [i for i, s in enumerate(self.status) if s != SymbolStatus.ERASED]

    def recovered_positions(self) -> list[int]:
        return [i for i, s in enumerate(self.status) if s == SymbolStatus.RECOVERED]

    def symbols(self) -> list[int | None]:
        return [None if s == SymbolStatus.ERASED else v for v, s in zip(self.values, self.status, strict=True)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReceptionState):
            return NotImplemented
        return self.values == other.values and self.status == other.status and self.info_set == other.info_set

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ReceptionState(n={self.n}, known={self.known_count}, recovered={self.recovered_count})"


@dataclass
class DecodeReport:
    """Outcome of one decode call.

    Attributes:
        final_state: State after decoding.
        recovered_count: Positions holding Recovered values in ``final_state``.
        full_decode: Every position known.
        info_decode: Every information-set position known.
        line_decode_ops: RS line decodes performed (local decoders).
        rref_pivots: Rank reached by Gaussian elimination.
        elapsed: Wall-clock seconds spent decoding.
    """

    final_state: ReceptionState
    recovered_count: int
    full_decode: bool
    info_decode: bool
    line_decode_ops: int = 0
    rref_pivots: int = 0
    elapsed: float = 0.0

    @classmethod
    def of(cls, state: ReceptionState, *, line_decode_ops: int = 0, rref_pivots: int = 0, elapsed: float = 0.0) -> DecodeReport:
        known = state.known_count
        return cls(
            final_state=state,
            recovered_count=state.recovered_count,
            full_decode=known == state.n,
            info_decode=state.info_known_count == len(state.info_set),
            line_decode_ops=line_decode_ops,
            rref_pivots=rref_pivots,
            elapsed=elapsed,
        )

    def summary(self) -> dict[str, Any]:
        """Flat record used by the simulation reports."""
        return {
            "known_count": self.final_state.known_count,
            "info_known_count": self.final_state.info_known_count,
            "recovered_count": self.recovered_count,
            "full_decode": self.full_decode,
            "info_decode": self.info_decode,
            "line_decode_ops": self.line_decode_ops,
            "rref_pivots": self.rref_pivots,
            "elapsed_us": self.elapsed * 1e6,
        }
