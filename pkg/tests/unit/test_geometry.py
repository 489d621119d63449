"""Unit tests for affine points and canonical lines."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from src.codes import geometry
from src.codes.exceptions import ParameterError
from src.codes.gf import field_new

SMALL_SPACES = [(2, 1), (2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)]


class TestPoints:
    def test_q3_m1(self):
        assert [p.index for p in geometry.enumerate_points(3, 1)] == [0, 1, 2]

    def test_q2_m2_little_endian(self):
        points = geometry.enumerate_points(2, 2)
        assert [p.coords for p in points] == [(0, 0), (1, 0), (0, 1), (1, 1)]

    def test_q8_m2_count(self):
        assert len(geometry.enumerate_points(8, 2)) == 64

    def test_index_roundtrip(self):
        for i in range(27):
            coords = geometry.point_coords(i, 3, 3)
            assert geometry.point_index(coords, 3) == i

    def test_point_array_matches_enumeration(self):
        array = geometry.point_array(4, 2)
        assert array.tolist() == [list(p.coords) for p in geometry.enumerate_points(4, 2)]

    def test_invalid_dimension(self):
        with pytest.raises(ParameterError):
            geometry.enumerate_points(3, 0)


class TestLineCounts:
    @pytest.mark.parametrize(("q", "m", "expected"), [(3, 2, 12), (8, 2, 72), (2, 1, 1), (4, 3, 336), (2, 2, 6)])
    def test_enumeration_count(self, q: int, m: int, expected: int):
        assert len(geometry.enumerate_lines(q, m)) == expected
        assert geometry.line_count(q, m) == expected

    @pytest.mark.parametrize(("q", "m"), [(2, 2), (3, 2), (4, 2), (3, 3)])
    def test_brute_force_agrees(self, q: int, m: int):
        assert geometry.brute_force_line_count(q, m) == geometry.line_count(q, m)

    @pytest.mark.parametrize(("q", "m", "expected"), [(3, 2, 4), (8, 2, 9), (2, 1, 1), (4, 3, 21)])
    def test_lines_per_point(self, q: int, m: int, expected: int):
        assert geometry.lines_per_point(q, m) == expected


class TestLineInvariants:
    @pytest.mark.parametrize(("q", "m"), SMALL_SPACES)
    def test_points_distinct_and_base_first(self, q: int, m: int):
        for line in geometry.enumerate_lines(q, m):
            assert len(set(line.points)) == q
            assert line.points[0] == line.base.index
            assert line.base.coords[line.pivot] == 0
            assert line.direction.coords[line.pivot] == 1
            assert all(v == 0 for v in line.direction.coords[: line.pivot])

    @pytest.mark.parametrize(("q", "m"), SMALL_SPACES)
    def test_pivot_coordinate_walks_the_field(self, q: int, m: int):
        for line in geometry.enumerate_lines(q, m):
            pivots = [geometry.point_coords(p, q, m)[line.pivot] for p in line.points]
            assert pivots == list(range(q))

    @pytest.mark.parametrize(("q", "m"), SMALL_SPACES)
    def test_no_duplicate_point_sets(self, q: int, m: int):
        lines = geometry.enumerate_lines(q, m)
        assert len({frozenset(line.points) for line in lines}) == len(lines)

    @pytest.mark.parametrize(("q", "m"), SMALL_SPACES)
    def test_every_pair_on_exactly_one_line(self, q: int, m: int):
        counts: dict[tuple[int, int], int] = {}
        for line in geometry.enumerate_lines(q, m):
            for a, b in itertools.combinations(sorted(line.points), 2):
                counts[(a, b)] = counts.get((a, b), 0) + 1
        n = q**m
        assert len(counts) == n * (n - 1) // 2
        assert set(counts.values()) == {1}

    def test_enumeration_order_pivot_then_direction_then_base(self):
        lines = geometry.enumerate_lines(3, 2)
        keys = [(line.pivot, line.direction.index(3), line.base.index) for line in lines]
        assert keys == sorted(keys)
        assert lines[0].render(3) == "0/0/0"


class TestLinesThroughPoint:
    @pytest.mark.parametrize(("q", "m"), [(3, 2), (4, 2), (2, 3)])
    def test_matches_filtered_enumeration(self, q: int, m: int):
        lines = geometry.enumerate_lines(q, m)
        for u in geometry.enumerate_points(q, m):
            through = geometry.lines_through_point(q, m, u)
            expected = {frozenset(line.points) for line in lines if u.index in line.points}
            assert {frozenset(line.points) for line in through} == expected
            assert len(through) == geometry.lines_per_point(q, m)

    def test_returned_lines_are_canonical(self):
        lines = {(line.base, line.direction) for line in geometry.enumerate_lines(4, 2)}
        for u in geometry.enumerate_points(4, 2):
            for line in geometry.lines_through_point(4, 2, u):
                assert (line.base, line.direction) in lines

    def test_q2_m1(self):
        u = geometry.make_point((0,), 2)
        assert len(geometry.lines_through_point(2, 1, u)) == 1

    def test_rejects_foreign_point(self):
        with pytest.raises(ParameterError):
            geometry.lines_through_point(3, 2, geometry.make_point((0, 0, 0), 3))

    def test_canonical_line_rejects_zero_direction(self):
        with pytest.raises(ParameterError):
            geometry.canonical_line(3, (1, 1), (0, 0))


class TestLineIndex:
    def test_shapes_and_incidence(self):
        index = geometry.build_line_index(field_new(4), 2)
        assert index.line_points.shape == (20, 4)
        assert index.incidence.shape == (16, 5)
        for point, line_ids in enumerate(index.incidence_lists):
            for line_id in line_ids:
                assert point in index.point_lists[line_id]

    def test_incidence_total(self):
        index = geometry.build_line_index(3, 2)
        assert int(np.bincount(index.line_points.ravel()).min()) == 4
        assert index.line_points.size == 12 * 3
