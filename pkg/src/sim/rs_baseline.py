"""Word-wise (q, k) Reed-Solomon baseline for the simulation curves.

Length q over F_q, systematic on the first k abscissae gamma_0..gamma_{k-1}.
A word is decoded as a whole by interpolation once any k symbols are known,
and before that only the directly received message symbols count.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from src.codes.exceptions import ParameterError
from src.codes.gf import FieldSpec, field_new
from src.codes.rsline import ERASED, LineView, interpolate_line


@dataclass(frozen=True)
class RsBaseline:
    field: FieldSpec
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.field.q:
            raise ParameterError(
                f"RS dimension {self.k} must lie in 1..{self.field.q}",
                context={"q": self.field.q, "k": self.k},
            )

    @property
    def n(self) -> int:
        return self.field.q

    def encode(self, message: Sequence[int]) -> list[int]:
        if len(message) != self.k:
            raise ParameterError(f"Expected {self.k} message symbols, got {len(message)}", context={"k": self.k})
        values = [int(v) for v in message] + [ERASED] * (self.n - self.k)
        return interpolate_line(self.field, LineView(tuple(values)), self.k - 1)

    def decode(self, values: Sequence[int]) -> list[int] | None:
        """Full word from any k known entries (``ERASED`` elsewhere); None when fewer are known."""
        view = LineView(tuple(values))
        if view.known_count < self.k:
            return None
        return interpolate_line(self.field, view, self.k - 1)


def rs_baseline(q: int, k: int) -> RsBaseline:
    return RsBaseline(field=field_new(q), k=k)
