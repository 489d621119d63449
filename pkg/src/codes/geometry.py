"""Points and lines of the affine space F_q^m.

Every line is produced exactly once through a canonical form: a monic
direction (first nonzero coordinate, the pivot, equal to 1) and a base point
whose pivot coordinate is 0. Enumeration walks pivots ``0..m-1``, then
directions in free-coordinate index order, then base points in index order.
The ``j``-th point of a line is ``base + gamma_j * direction``, so its pivot
coordinate is ``gamma_j`` itself.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.codes.exceptions import ParameterError
from src.codes.gf import FieldElement, FieldSpec, IntArray, field_new


@dataclass(frozen=True)
class Point:
    """A point of F_q^m; ``index`` is the little-endian base-q reading of ``coords``."""

    coords: tuple[FieldElement, ...]
    index: int


@dataclass(frozen=True)
class Direction:
    """A monic direction vector: zero before ``pivot``, one at ``pivot``."""

    coords: tuple[FieldElement, ...]
    pivot: int

    def index(self, q: int) -> int:
        """Little-endian base-q index of the free coordinates after the pivot."""
        return sum(v * q**j for j, v in enumerate(self.coords[self.pivot + 1 :]))


@dataclass(frozen=True)
class Line:
    """A canonical line; ``points[j]`` is the index of ``base + gamma_j * direction``."""

    base: Point
    direction: Direction
    points: tuple[int, ...]

    @property
    def pivot(self) -> int:
        return self.direction.pivot

    def render(self, q: int) -> str:
        """Debug rendering ``pivot/directionIndex/baseIndex``."""
        return f"{self.pivot}/{self.direction.index(q)}/{self.base.index}"


def _as_field(q: int | FieldSpec) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else field_new(q)


def _check_dimension(m: int) -> None:
    if m < 1:
        raise ParameterError(f"Dimension m must be at least 1, got {m}", context={"m": m})


def point_index(coords: Sequence[FieldElement], q: int) -> int:
    return sum(c * q**j for j, c in enumerate(coords))


def point_coords(index: int, q: int, m: int) -> tuple[FieldElement, ...]:
    coords = []
    for _ in range(m):
        index, digit = divmod(index, q)
        coords.append(digit)
    return tuple(coords)


def make_point(coords: Sequence[FieldElement], q: int) -> Point:
    return Point(coords=tuple(coords), index=point_index(coords, q))


def enumerate_points(q: int | FieldSpec, m: int) -> list[Point]:
    """All ``q**m`` points in index order."""
    field = _as_field(q)
    _check_dimension(m)
    return [Point(coords=point_coords(i, field.q, m), index=i) for i in range(field.q**m)]


def point_array(q: int, m: int) -> IntArray:
    """``(q**m, m)`` array of point coordinates in index order."""
    index = np.arange(q**m, dtype=np.int64)
    return (index[:, None] // q ** np.arange(m, dtype=np.int64)[None, :]) % q  # type: ignore[no-any-return]


def monic_directions(q: int | FieldSpec, m: int) -> Iterator[Direction]:
    """Monic directions grouped by pivot, free coordinates in little-endian index order."""
    field = _as_field(q)
    _check_dimension(m)
    for pivot in range(m):
        free = m - pivot - 1
        for tail in range(field.q**free):
            coords = (0,) * pivot + (1,) + point_coords(tail, field.q, free)
            yield Direction(coords=coords, pivot=pivot)


def _line(field: FieldSpec, base: Point, direction: Direction) -> Line:
    add, mul = field.add_lut, field.mul_lut
    points = tuple(
        point_index([add[b][mul[gamma][v]] for b, v in zip(base.coords, direction.coords, strict=True)], field.q)
        for gamma in field.elements
    )
    return Line(base=base, direction=direction, points=points)


def canonical_line(q: int | FieldSpec, through: Sequence[FieldElement], direction: Sequence[FieldElement]) -> Line:
    """The canonical form of the line through a point along any nonzero direction."""
    field = _as_field(q)
    pivot = next((i for i, v in enumerate(direction) if v != 0), None)
    if pivot is None:
        raise ParameterError("Direction vector must be nonzero", context={"direction": tuple(direction)})
    scale = field.inv(direction[pivot])
    monic = tuple(field.mul(scale, v) for v in direction)
    shift = through[pivot]
    base = tuple(field.sub(u, field.mul(shift, v)) for u, v in zip(through, monic, strict=True))
    return _line(field, make_point(base, field.q), Direction(coords=monic, pivot=pivot))


def enumerate_lines(q: int | FieldSpec, m: int) -> list[Line]:
    """All ``q**(m-1) * (q**m - 1) / (q - 1)`` lines, each exactly once.

    For each pivot i, every monic direction with pivot i is paired with every
    base point having ``p_i = 0``.
    """
    field = _as_field(q)
    lines = []
    for direction in monic_directions(field, m):
        pivot = direction.pivot
        for rest in itertools.product(field.elements, repeat=m - 1):
            # rest holds p_0..p_{m-1} without p_pivot; product varies the last entry fastest,
            # so reverse it to walk bases in little-endian index order.
            coords = list(reversed(rest))
            coords.insert(pivot, 0)
            lines.append(_line(field, make_point(coords, field.q), direction))
    return lines


def lines_through_point(q: int | FieldSpec, m: int, u: Point) -> list[Line]:
    """The ``(q**m - 1) / (q - 1)`` canonical lines containing ``u``, one per monic direction."""
    field = _as_field(q)
    if len(u.coords) != m or u.index != point_index(u.coords, field.q):
        raise ParameterError("Point does not belong to F_q^m", context={"q": field.q, "m": m, "point": u.coords})
    return [canonical_line(field, u.coords, direction.coords) for direction in monic_directions(field, m)]


def line_count(q: int, m: int) -> int:
    return q ** (m - 1) * (q**m - 1) // (q - 1)


def lines_per_point(q: int, m: int) -> int:
    return (q**m - 1) // (q - 1)


def brute_force_line_count(q: int | FieldSpec, m: int) -> int:
    """Count lines by grouping every unordered pair of distinct points into its point set.

    Independent of the canonical form; used as the oracle for the line-count formula.
    """
    field = _as_field(q)
    points = enumerate_points(field, m)
    add, mul, sub = field.add_lut, field.mul_lut, field.sub_lut
    seen: set[frozenset[int]] = set()
    for a, b in itertools.combinations(points, 2):
        step = [sub[y][x] for x, y in zip(a.coords, b.coords, strict=True)]
        members = frozenset(
            point_index([add[x][mul[gamma][s]] for x, s in zip(a.coords, step, strict=True)], field.q)
            for gamma in field.elements
        )
        seen.add(members)
    return len(seen)


@dataclass(frozen=True, eq=False)
class LineIndex:
    """Precomputed line geometry of one code: line point lists and point -> line incidence.

    Attributes:
        lines: Canonical lines in enumeration order.
        line_points: ``(line_count, q)`` array of point indices.
        incidence: ``(n, lines_per_point)`` array of line ids through each point, ascending.
    """

    lines: tuple[Line, ...]
    line_points: IntArray
    incidence: IntArray

    @cached_property
    def point_lists(self) -> list[list[int]]:
        return self.line_points.tolist()  # type: ignore[no-any-return]

    @cached_property
    def incidence_lists(self) -> list[list[int]]:
        return self.incidence.tolist()  # type: ignore[no-any-return]


def build_line_index(q: int | FieldSpec, m: int) -> LineIndex:
    field = _as_field(q)
    lines = enumerate_lines(field, m)
    line_points = np.array([line.points for line in lines], dtype=np.int64)
    n = field.q**m
    through: list[list[int]] = [[] for _ in range(n)]
    for line_id, line in enumerate(lines):
        for point in line.points:
            through[point].append(line_id)
    incidence = np.array(through, dtype=np.int64)
    line_points.flags.writeable = False
    incidence.flags.writeable = False
    return LineIndex(lines=tuple(lines), line_points=line_points, incidence=incidence)
