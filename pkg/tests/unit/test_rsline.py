"""Unit tests for Reed-Solomon decoding along a line."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from src.codes.exceptions import InsufficientSymbolsError, IntegrityError, ParameterError
from src.codes.gf import FieldSpec, field_new
from src.codes.rsline import ERASED, LineView, interpolate_line, parity_sum_decode


def _evaluate(f: FieldSpec, coeffs: list[int]) -> list[int]:
    return [f.poly_eval_uni(coeffs, x) for x in f.elements]


def _erase(values: list[int], positions: tuple[int, ...]) -> LineView:
    return LineView(tuple(ERASED if i in positions else v for i, v in enumerate(values)))


class TestLineView:
    def test_of_maps_none(self):
        view = LineView.of([1, None, 2])
        assert view.values == (1, ERASED, 2)
        assert view.known_count == 2
        assert view.known_positions == [0, 2]
        assert list(view.gamma) == [0, 1, 2]


class TestInterpolateLine:
    def test_constant(self, f8: FieldSpec):
        view = LineView.of([None, None, 5, None, None, None, None, None])
        assert interpolate_line(f8, view, 0) == [5] * 8

    def test_identity_polynomial_over_f3(self):
        f3 = field_new(3)
        assert interpolate_line(f3, LineView.of([None, 1, 2]), 1) == [0, 1, 2]

    @pytest.mark.parametrize(("q", "r"), [(3, 1), (4, 1), (4, 2), (5, 2), (7, 3), (8, 2), (8, 6)])
    def test_exhaustive_erasure_patterns(self, q: int, r: int, rng: np.random.Generator):
        f = field_new(q)
        for _ in range(3):
            values = _evaluate(f, rng.integers(0, q, size=r + 1).tolist())
            for size in range(q - r):
                for erased in itertools.combinations(range(q), size):
                    assert interpolate_line(f, _erase(values, erased), r) == values

    def test_sampled_q16(self, rng: np.random.Generator):
        f = field_new(16)
        for _ in range(200):
            r = int(rng.integers(1, 15))
            values = _evaluate(f, rng.integers(0, 16, size=r + 1).tolist())
            erased = tuple(rng.permutation(16)[: 16 - r - 1].tolist())
            assert interpolate_line(f, _erase(values, erased), r) == values

    def test_known_values_unchanged(self, f4: FieldSpec):
        values = _evaluate(f4, [1, 2])
        view = _erase(values, (3,))
        out = interpolate_line(f4, view, 1)
        assert out[:3] == values[:3]

    def test_insufficient(self, f8: FieldSpec):
        view = LineView.of([1, 2, None, None, None, None, None, None])
        with pytest.raises(InsufficientSymbolsError):
            interpolate_line(f8, view, 2)

    def test_inconsistent(self, f4: FieldSpec):
        values = _evaluate(f4, [1, 1])
        values[3] = f4.add(values[3], 1)
        with pytest.raises(IntegrityError):
            interpolate_line(f4, LineView(tuple(values)), 1)

    def test_wrong_length(self, f4: FieldSpec):
        with pytest.raises(ParameterError):
            interpolate_line(f4, LineView.of([1, 2, 3]), 1)


class TestParitySumDecode:
    def test_q8_xor_fold(self, f8: FieldSpec):
        values = _evaluate(f8, [3, 1, 4, 1, 5, 2, 6])
        out = parity_sum_decode(f8, _erase(values, (4,)), 6)
        assert out == values
        # characteristic 2: the missing value is the xor of the additive representations
        acc = 0
        for i, v in enumerate(values):
            if i != 4:
                acc ^= int(f8.to_repr[v])
        assert int(f8.to_repr[out[4]]) == acc

    def test_all_zero_knowns(self, f4: FieldSpec):
        assert parity_sum_decode(f4, LineView.of([0, None, 0, 0]), 2) == [0, 0, 0, 0]

    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
    def test_agrees_with_interpolation(self, q: int, rng: np.random.Generator):
        f = field_new(q)
        r = q - 2
        for _ in range(200):
            values = _evaluate(f, rng.integers(0, q, size=r + 1).tolist())
            view = _erase(values, (int(rng.integers(0, q)),))
            assert parity_sum_decode(f, view, r) == interpolate_line(f, view, r)

    def test_requires_r_q_minus_2(self, f8: FieldSpec):
        with pytest.raises(ParameterError):
            parity_sum_decode(f8, LineView.of([0, None, 0, 0, 0, 0, 0, 0]), 5)

    def test_requires_single_erasure(self, f8: FieldSpec):
        with pytest.raises(ParameterError):
            parity_sum_decode(f8, LineView.of([0, None, None, 0, 0, 0, 0, 0]), 6)
