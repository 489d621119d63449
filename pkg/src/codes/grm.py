"""Generalized Reed-Muller codes: parameters, evaluation encoding and systematic matrices.

A codeword is the list of evaluations of an m-variate polynomial of degree at
most r at every point of F_q^m, position i holding the value at point index i.
Systematic encoding picks an information set (the lexicographically first k
independent columns of the evaluation matrix) so that the message symbols
appear verbatim at those positions. ``generator_systematic`` and
``parity_check`` are stored in permuted coordinates (information set first);
``permutation`` maps them back to point indices.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

import numpy as np
import numpy.typing as npt

from src.codes import geometry
from src.codes.exceptions import ParameterError
from src.codes.geometry import LineIndex, Point
from src.codes.gf import FieldElement, FieldSpec, IntArray, field_new
from src.codes.linalg import rref, vecmat

logger = logging.getLogger(__name__)

# Every code holds dense (n-k) x n parity checks; 4096 keeps each under 128 MiB.
MAX_LENGTH = 1 << 12


@dataclass(frozen=True)
class CodeParams:
    """GRM parameters ``(r, m, q)`` and the quantities derived from them."""

    r: int
    m: int
    q: int

    def __post_init__(self) -> None:
        field_new(self.q)  # validates q
        if self.m < 1:
            raise ParameterError(f"m must be at least 1, got {self.m}", context=self.as_dict())
        if not 1 <= self.r <= self.q - 2:
            raise ParameterError(
                f"Degree r={self.r} must satisfy 1 <= r <= q-2 = {self.q - 2}",
                context=self.as_dict(),
            )
        if self.q**self.m > MAX_LENGTH:
            raise ParameterError(f"Code length q^m={self.q ** self.m} exceeds {MAX_LENGTH}", context=self.as_dict())

    def as_dict(self) -> dict[str, int]:
        return {"r": self.r, "m": self.m, "q": self.q}

    @property
    def n(self) -> int:
        return self.q**self.m

    @property
    def k(self) -> int:
        return comb(self.m + self.r, self.r)

    @property
    def d(self) -> int:
        return (self.q - self.r) * self.q ** (self.m - 1)

    @property
    def locality(self) -> int:
        return self.r + 1

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def line_count(self) -> int:
        return geometry.line_count(self.q, self.m)

    @property
    def lines_per_point(self) -> int:
        return geometry.lines_per_point(self.q, self.m)

    def header(self) -> str:
        return f"{self.r} {self.m} {self.q}"


def _exponent_vectors(m: int, budget: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _exponent_vectors(m - 1, budget - first):
            yield (first, *rest)


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent vectors ``(a_1..a_m)`` with total degree <= r, graded then lexicographic."""

    exponents: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, m: int, r: int) -> MonomialBasis:
        exponents = sorted(_exponent_vectors(m, r), key=lambda a: (sum(a), a))
        return cls(exponents=tuple(exponents))

    def __len__(self) -> int:
        return len(self.exponents)

    def index_of(self, exponent: Sequence[int]) -> int:
        """Position of a monomial; ``X_1`` is ``(1, 0, ..., 0)`` and acts on coordinate p_0."""
        return self.exponents.index(tuple(exponent))

    def as_array(self) -> IntArray:
        return np.array(self.exponents, dtype=np.int64).reshape(len(self.exponents), -1)


def _freeze(values: npt.ArrayLike) -> IntArray:
    array = np.array(values, dtype=np.int64)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class GrmCode:
    """An (r, m, q) Generalized Reed-Muller code with its matrices and line geometry.

    Attributes:
        params: Code parameters.
        field: The field F_q.
        basis: Coefficient indexing of the message polynomial.
        points: ``(n, m)`` point coordinates in index order.
        generator: ``(k, n)`` evaluation matrix; row j evaluates monomial j.
        info_set: Information-set positions, ascending.
        permutation: ``info_set`` followed by the remaining positions ascending.
        generator_systematic: ``[I_k | P]`` in permuted coordinates.
        parity_check: ``[-P^T | I_{n-k}]`` in permuted coordinates.
        lines: Canonical line geometry shared by the local decoders.
    """

    params: CodeParams
    field: FieldSpec
    basis: MonomialBasis
    points: IntArray
    generator: IntArray
    info_set: tuple[int, ...]
    permutation: tuple[int, ...]
    generator_systematic: IntArray
    parity_check: IntArray
    lines: LineIndex

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def r(self) -> int:
        return self.params.r

    @property
    def q(self) -> int:
        return self.params.q

    @cached_property
    def systematic_natural(self) -> IntArray:
        """The systematic generator with columns back in point order."""
        matrix = np.zeros_like(self.generator_systematic)
        matrix[:, list(self.permutation)] = self.generator_systematic
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def parity_natural(self) -> IntArray:
        """The parity-check matrix with columns back in point order."""
        matrix = np.zeros_like(self.parity_check)
        matrix[:, list(self.permutation)] = self.parity_check
        matrix.flags.writeable = False
        return matrix

    def _check_length(self, values: Sequence[int] | IntArray, expected: int, what: str) -> IntArray:
        array = np.asarray(values, dtype=np.int64)
        if array.shape != (expected,):
            raise ParameterError(
                f"{what} must hold {expected} symbols, got {array.shape[0] if array.ndim else 0}",
                context={"expected": expected, **self.params.as_dict()},
            )
        if array.size and (array.min() < 0 or array.max() >= self.q):
            raise ParameterError(f"{what} holds values outside F_{self.q}", context=self.params.as_dict())
        return array

    def encode(self, message: Sequence[FieldElement] | IntArray) -> IntArray:
        """Systematic encoding: ``codeword[info_set[j]] == message[j]``."""
        msg = self._check_length(message, self.k, "Message")
        return vecmat(self.field, msg, self.systematic_natural)

    def encode_polynomial(self, coeffs: Sequence[FieldElement] | IntArray) -> IntArray:
        """Evaluate the polynomial with the given basis coefficients at every point."""
        c = self._check_length(coeffs, self.k, "Coefficient vector")
        return vecmat(self.field, c, self.generator)

    def eval_poly(self, coeffs: Sequence[FieldElement], pt: Point) -> FieldElement:
        """``sum_j coeffs[j] * prod_i pt_i ** a_{j,i}``."""
        self._check_length(coeffs, self.k, "Coefficient vector")
        f = self.field
        total = 0
        for c, exponent in zip(coeffs, self.basis.exponents, strict=True):
            term = c
            for x, a in zip(pt.coords, exponent, strict=True):
                term = f.mul(term, f.pow(x, a))
            total = f.add(total, term)
        return total

    def extract_message(self, codeword: Sequence[FieldElement] | IntArray) -> IntArray:
        """Read the message back from the information-set positions."""
        word = self._check_length(codeword, self.n, "Codeword")
        return word[list(self.info_set)]

    def syndrome(self, word: Sequence[FieldElement] | IntArray) -> IntArray:
        w = self._check_length(word, self.n, "Word")
        return vecmat(self.field, w, self.parity_natural.T)

    def is_codeword(self, word: Sequence[FieldElement] | IntArray) -> bool:
        return not bool(self.syndrome(word).any())


def evaluation_matrix(field: FieldSpec, basis: MonomialBasis, points: IntArray, r: int) -> IntArray:
    """``(k, n)`` matrix of monomial evaluations: entry ``[j, i] = prod_t p_{i,t} ** a_{j,t}``."""
    powers = field.power_table(r)
    exponents = basis.as_array()
    values = powers[points[None, :, :], exponents[:, None, :]]  # (k, n, m)
    acc = np.ones(values.shape[:2], dtype=np.int64)
    for t in range(values.shape[2]):
        acc = field.mul_table[acc, values[:, :, t]]
    return acc


@lru_cache(maxsize=16)
def code_new(r: int, m: int, q: int) -> GrmCode:
    """Construct the (r, m, q) GRM code.

    Raises:
        ParameterError: If q is not a prime power, m < 1 or r is outside 1..q-2.
    """
    params = CodeParams(r=r, m=m, q=q)
    field = field_new(q)
    basis = MonomialBasis.build(m, r)
    points = geometry.point_array(q, m)
    generator = evaluation_matrix(field, basis, points, r)

    reduced, pivots = rref(field, generator.tolist())
    if len(pivots) != params.k:
        raise ParameterError(
            f"Evaluation matrix has rank {len(pivots)}, expected {params.k}",
            context=params.as_dict(),
        )  # pragma: no cover
    info_set = tuple(pivots)
    chosen = set(info_set)
    permutation = info_set + tuple(i for i in range(params.n) if i not in chosen)

    systematic = np.array(reduced, dtype=np.int64)[:, list(permutation)]
    redundancy = systematic[:, params.k :]
    parity = np.concatenate(
        [field.neg_table[redundancy.T], np.eye(params.n - params.k, dtype=np.int64)],
        axis=1,
    )

    code = GrmCode(
        params=params,
        field=field,
        basis=basis,
        points=_freeze(points),
        generator=_freeze(generator),
        info_set=info_set,
        permutation=permutation,
        generator_systematic=_freeze(systematic),
        parity_check=_freeze(parity),
        lines=geometry.build_line_index(field, m),
    )
    logger.info(
        "Built GRM code r=%d m=%d q=%d: n=%d k=%d d=%d, %d lines",
        r, m, q, params.n, params.k, params.d, params.line_count,
    )
    return code
