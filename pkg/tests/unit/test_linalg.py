"""Unit tests for linear algebra over F_q."""

from __future__ import annotations

import numpy as np
import pytest

from src.codes.exceptions import ParameterError
from src.codes.gf import FieldSpec, field_new
from src.codes.linalg import format_matrix, matmul, matvec, rank, rref, vecmat


def _naive_matmul(f: FieldSpec, a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    out = []
    for row in a:
        out_row = []
        for col in zip(*b, strict=True):
            acc = 0
            for x, y in zip(row, col, strict=True):
                acc = f.add(acc, f.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


class TestRref:
    def test_identity_is_fixed(self, f4: FieldSpec):
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        reduced, pivots = rref(f4, eye)
        assert reduced == eye
        assert pivots == [0, 1, 2]

    def test_pivots_normalized_and_columns_cleared(self, rng: np.random.Generator):
        f = field_new(8)
        rows = rng.integers(0, 8, size=(5, 9)).tolist()
        reduced, pivots = rref(f, rows)
        for r, col in enumerate(pivots):
            assert reduced[r][col] == 1
            for other in range(len(reduced)):
                if other != r:
                    assert reduced[other][col] == 0
        for row in reduced[len(pivots) :]:
            assert not any(row)

    def test_input_not_modified(self, f4: FieldSpec):
        rows = [[2, 3], [1, 1]]
        rref(f4, rows)
        assert rows == [[2, 3], [1, 1]]

    def test_dependent_rows(self, f4: FieldSpec):
        rows = [[1, 2, 3], [2, f4.mul(2, 2), f4.mul(2, 3)]]
        assert rank(f4, rows) == 1

    def test_ncols_limits_pivots(self, f4: FieldSpec):
        # zero coefficient row with a nonzero constant stays below the pivots
        rows = [[1, 0, 2], [0, 0, 3]]
        reduced, pivots = rref(f4, rows, ncols=2)
        assert pivots == [0]
        assert reduced[1] == [0, 0, 3]

    def test_empty(self, f4: FieldSpec):
        assert rref(f4, []) == ([], [])

    def test_first_nonzero_column_pivoting(self, f4: FieldSpec):
        rows = [[0, 1, 1], [0, 2, 0], [0, 0, 0]]
        _, pivots = rref(f4, rows)
        assert pivots == [1, 2]


class TestProducts:
    @pytest.mark.parametrize("q", [3, 4, 8, 9])
    def test_matmul_matches_naive(self, q: int, rng: np.random.Generator):
        f = field_new(q)
        a = rng.integers(0, q, size=(3, 4)).tolist()
        b = rng.integers(0, q, size=(4, 5)).tolist()
        assert matmul(f, a, b).tolist() == _naive_matmul(f, a, b)

    def test_matvec_and_vecmat(self, rng: np.random.Generator):
        f = field_new(8)
        a = rng.integers(0, 8, size=(3, 4))
        x = rng.integers(0, 8, size=4)
        y = rng.integers(0, 8, size=3)
        assert matvec(f, a, x).tolist() == [row[0] for row in _naive_matmul(f, a.tolist(), [[v] for v in x.tolist()])]
        assert vecmat(f, y, a).tolist() == _naive_matmul(f, [y.tolist()], a.tolist())[0]

    def test_empty_inner_dimension(self, f4: FieldSpec):
        a = np.zeros((2, 0), dtype=np.int64)
        assert matvec(f4, a, []).tolist() == [0, 0]

    def test_shape_mismatch(self, f4: FieldSpec):
        with pytest.raises(ParameterError):
            matmul(f4, [[1, 2]], [[1, 2]])


class TestFormatting:
    def test_format_matrix(self):
        assert format_matrix([[1, 10], [3, 4]]) == " 1 10\n 3  4"
        assert format_matrix(np.zeros((0, 0))) == ""
