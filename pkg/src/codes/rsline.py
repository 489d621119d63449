"""(q, r+1) Reed-Solomon erasure decoding along one line.

The restriction of a degree-<=r polynomial to a line is a univariate
polynomial of degree <= r in gamma, so any r+1 known values on the line fix
the other q-(r+1). Abscissae are the element indices ``0..q-1`` themselves.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.codes.exceptions import InsufficientSymbolsError, IntegrityError, ParameterError
from src.codes.gf import FieldElement, FieldSpec

ERASED = -1


@dataclass(frozen=True)
class LineView:
    """Values seen on a line; ``values[i]`` belongs to abscissa gamma_i, ``ERASED`` if unknown."""

    values: tuple[int, ...]

    @classmethod
    def of(cls, values: Sequence[int | None]) -> LineView:
        return cls(values=tuple(ERASED if v is None else v for v in values))

    @property
    def gamma(self) -> range:
        return range(len(self.values))

    @property
    def known_count(self) -> int:
        return sum(1 for v in self.values if v != ERASED)

    @property
    def known_positions(self) -> list[int]:
        return [i for i, v in enumerate(self.values) if v != ERASED]


def _check_view(field: FieldSpec, view: LineView) -> None:
    if len(view.values) != field.q:
        raise ParameterError(
            f"A line over F_{field.q} holds {field.q} values, got {len(view.values)}",
            context={"q": field.q},
        )


def interpolate_line(field: FieldSpec, view: LineView, r: int) -> list[FieldElement]:
    """Fill every erasure of ``view`` from the degree-<=r interpolant of its known values.

    The interpolant goes through the first r+1 known entries by abscissa
    order; every further known entry is checked against it.

    Raises:
        InsufficientSymbolsError: Fewer than r+1 known entries.
        IntegrityError: Known entries disagree with any degree-<=r polynomial.
    """
    _check_view(field, view)
    known = view.known_positions
    if len(known) < r + 1:
        raise InsufficientSymbolsError(
            f"Line has {len(known)} known symbols, interpolation needs {r + 1}",
            context={"known": len(known), "r": r},
        )
    add, sub, mul, inv = field.add_lut, field.sub_lut, field.mul_lut, field.inv_lut
    xs = known[: r + 1]
    ys = [view.values[x] for x in xs]

    # barycentric weights w_j = 1 / prod_{l != j} (x_j - x_l)
    weights = []
    for j, xj in enumerate(xs):
        denom = 1
        for other, xl in enumerate(xs):
            if other != j:
                denom = mul[denom][sub[xj][xl]]
        weights.append(inv[denom])

    anchors = set(xs)
    out = list(view.values)
    for t in field.elements:
        if t in anchors:
            continue
        full = 1
        for xl in xs:
            full = mul[full][sub[t][xl]]
        acc = 0
        for xj, yj, wj in zip(xs, ys, weights, strict=True):
            acc = add[acc][mul[mul[yj][wj]][inv[sub[t][xj]]]]
        value = mul[full][acc]
        if out[t] == ERASED:
            out[t] = value
        elif out[t] != value:
            raise IntegrityError(
                "Known line values are inconsistent with a degree-<=r polynomial",
                context={"abscissa": t, "expected": value, "found": out[t], "r": r},
            )
    return out


def parity_sum_decode(field: FieldSpec, view: LineView, r: int) -> list[FieldElement]:
    """Fill the single erasure of a (q, q-1) line from the parity ``sum_i F(gamma_i) = 0``.

    Only field additions are used: the erased value is minus the sum of the others.

    Raises:
        ParameterError: Unless ``r == q - 2`` and exactly one entry is erased.
    """
    _check_view(field, view)
    if r != field.q - 2:
        raise ParameterError(
            f"Parity-sum decoding needs r = q-2 = {field.q - 2}, got r={r}",
            context={"q": field.q, "r": r},
        )
    erased = [i for i, v in enumerate(view.values) if v == ERASED]
    if len(erased) != 1:
        raise ParameterError(
            f"Parity-sum decoding needs exactly one erasure, got {len(erased)}",
            context={"erased": len(erased)},
        )
    out = list(view.values)
    out[erased[0]] = parity_complement(field, (v for v in view.values if v != ERASED))
    return out


def parity_complement(field: FieldSpec, known: Iterable[int]) -> FieldElement:
    """Minus the field sum of ``known``: the value that makes a (q, q-1) line sum to zero."""
    add = field.add_lut
    total = 0
    for v in known:
        total = add[total][v]
    return field.neg_lut[total]
