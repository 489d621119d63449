"""Erasure decoders for GRM words: LD, PLD, GE and the LD-then-GE combination."""

from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING

from src.codes.exceptions import ParameterError
from src.decoders.gaussian import decode_ge, decode_ld_then_ge, solve_erasures
from src.decoders.local import ProgressiveDecoder, decode_ld, decode_line, decode_pld, local_fixpoint
from src.decoders.state import DecodeReport, ReceptionState, SymbolStatus

if TYPE_CHECKING:
    from src.codes.grm import GrmCode


class Decoder(str, Enum):
    LD = "ld"
    PLD = "pld"
    GE = "ge"
    LD_GE = "ld-ge"
    RS = "rs"  # word-wise Reed-Solomon baseline, simulation only


GRM_DECODERS = (Decoder.LD, Decoder.PLD, Decoder.GE, Decoder.LD_GE)


def decode(kind: Decoder, code: GrmCode, state: ReceptionState) -> DecodeReport:
    """Decode ``state`` with the named decoder.

    PLD is fed the known symbols in position order, which reaches the same
    closure as LD.
    """
    if kind == Decoder.LD:
        return decode_ld(code, state)
    if kind == Decoder.PLD:
        return ProgressiveDecoder(code, state).report()
    if kind == Decoder.GE:
        return decode_ge(code, state)
    if kind == Decoder.LD_GE:
        return decode_ld_then_ge(code, state)
    raise ParameterError(f"Decoder {kind.value!r} does not decode GRM words", context={"decoder": kind.value})


__all__ = [
    "GRM_DECODERS",
    "DecodeReport",
    "Decoder",
    "ProgressiveDecoder",
    "ReceptionState",
    "SymbolStatus",
    "decode",
    "decode_ge",
    "decode_ld",
    "decode_ld_then_ge",
    "decode_line",
    "decode_pld",
    "local_fixpoint",
    "solve_erasures",
]
