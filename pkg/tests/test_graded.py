import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilie.exact import RatMatrix, ShapeError
from trilie.graded import (
    GradedMap,
    GradedSpace,
    TriangularityError,
    degree_components,
    is_homogeneous,
    is_triangular,
    nilpotency_index,
    positive_degree_part,
    triangular_closure_check,
)

from helpers import mask_triangular, seeded_triangular_map

F = Fraction


def gmap(dims, rows):
    return GradedMap(GradedSpace(dims), RatMatrix.from_rows(rows))


class TestGradedSpace:
    def test_offsets_and_ranges(self):
        s = GradedSpace((2, 0, 3))
        assert s.total_dim == 5
        assert s.offsets == (0, 2, 2)
        assert list(s.component_range(0)) == [0, 1]
        assert list(s.component_range(1)) == []
        assert list(s.component_range(2)) == [2, 3, 4]

    def test_degree_of_index(self):
        s = GradedSpace((1, 0, 2))
        assert [s.degree_of_index(i) for i in range(3)] == [0, 2, 2]

    def test_rejects_negative_dims(self):
        with pytest.raises(ValueError):
            GradedSpace((1, -1))

    def test_matrix_shape_enforced(self):
        with pytest.raises(ShapeError):
            GradedMap(GradedSpace((1, 1)), RatMatrix.zeros(3, 3))


class TestTriangularity:
    def test_lower_block_is_triangular(self):
        f = gmap((1, 1), [[5, 0], [7, 3]])
        assert is_triangular(f) == (True, None)

    def test_degree_lowering_leak_with_witness(self):
        f = gmap((1, 1), [[5, 1], [0, 3]])
        assert is_triangular(f) == (False, (1, 0))

    def test_identity_is_triangular(self):
        f = GradedMap.identity(GradedSpace((2, 1, 3)))
        assert is_triangular(f) == (True, None)

    def test_zero_dim_components_are_skipped(self):
        f = gmap((0, 1, 0, 1), [[1, 0], [4, 2]])
        assert is_triangular(f) == (True, None)
        g = gmap((0, 1, 0, 1), [[1, 8], [4, 2]])
        assert is_triangular(g) == (False, (3, 1))


class TestDegreeComponents:
    def test_three_stripes(self):
        f = gmap((1, 1, 1), [[1, 0, 0], [2, 3, 0], [4, 5, 6]])
        comps = degree_components(f)
        assert comps[0].matrix == RatMatrix.from_rows(
            [[1, 0, 0], [0, 3, 0], [0, 0, 6]]
        )
        assert comps[1].matrix == RatMatrix.from_rows(
            [[0, 0, 0], [2, 0, 0], [0, 5, 0]]
        )
        assert comps[2].matrix == RatMatrix.from_rows(
            [[0, 0, 0], [0, 0, 0], [4, 0, 0]]
        )

    def test_degree_zero_input(self):
        f = gmap((1, 2), [[7, 0, 0], [0, 1, 2], [0, 3, 4]])
        comps = degree_components(f)
        assert comps[0] == f
        assert comps[1].is_zero()

    def test_zero_map(self):
        f = GradedMap.zero(GradedSpace((1, 1, 1)))
        assert all(c.is_zero() for c in degree_components(f).values())

    def test_reconstruction(self):
        f = gmap((2, 1), [[1, 2, 0], [3, 4, 0], [5, 6, 7]])
        comps = degree_components(f)
        total = GradedMap.zero(f.space)
        for c in comps.values():
            total = total + c
        assert total == f

    def test_non_triangular_rejected(self):
        f = gmap((1, 1), [[0, 1], [0, 0]])
        with pytest.raises(TriangularityError):
            degree_components(f)

    def test_each_stripe_is_homogeneous(self):
        f = gmap((1, 1, 1), [[1, 0, 0], [2, 3, 0], [4, 5, 6]])
        for j, c in degree_components(f).items():
            assert is_homogeneous(c, j)


class TestNilpotency:
    def test_strictly_triangular_2x2(self):
        f = gmap((1, 1), [[0, 0], [5, 0]])
        assert nilpotency_index(f) == 2

    def test_identity_not_nilpotent(self):
        assert nilpotency_index(GradedMap.identity(GradedSpace((2,)))) is None

    def test_zero_map_index_one(self):
        assert nilpotency_index(GradedMap.zero(GradedSpace((3,)))) == 1

    def test_positive_degree_cube_vanishes_on_three_components(self):
        f = gmap((1, 1, 1), [[0, 0, 0], [2, 0, 0], [4, 5, 0]])
        assert nilpotency_index(f) <= 3

    def test_positive_degree_power_bound(self):
        # degree-0 blocks removed => f^(number of nonzero components) = 0
        rng = random.Random(1234)
        for _ in range(20):
            f = seeded_triangular_map(rng)
            g = positive_degree_part(f)
            c = sum(1 for d in f.space.component_dims if d > 0)
            idx = nilpotency_index(g)
            assert idx is not None and idx <= max(c, 1)


class TestClosure:
    def test_homogeneous_composition_adds_degrees(self):
        f = gmap((1, 1, 1), [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        comps = degree_components(f)
        square = comps[1].compose(comps[1])
        assert is_homogeneous(square, 2)
        assert not square.is_zero()

    def test_degree_zero_commutator_stays_degree_zero(self):
        f = gmap((1, 1), [[1, 0], [0, 2]])
        g = gmap((1, 1), [[0, 0], [0, 5]])
        assert is_homogeneous(f.bracket(g), 0)

    def test_report_on_random_pairs(self):
        rng = random.Random(99)
        for _ in range(15):
            f = seeded_triangular_map(rng)
            g = mask_triangular(
                f.space,
                RatMatrix(
                    f.space.total_dim,
                    f.space.total_dim,
                    [F(rng.randint(-3, 3)) for _ in range(f.space.total_dim ** 2)],
                ),
            )
            report = triangular_closure_check(f, g)
            assert report["all_pass"], report


@st.composite
def triangular_pairs(draw):
    dims = draw(st.lists(st.integers(0, 2), min_size=1, max_size=4))
    space = GradedSpace(dims)
    n = space.total_dim
    ratval = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    d1 = draw(st.lists(ratval, min_size=n * n, max_size=n * n))
    d2 = draw(st.lists(ratval, min_size=n * n, max_size=n * n))
    return (
        mask_triangular(space, RatMatrix(n, n, d1)),
        mask_triangular(space, RatMatrix(n, n, d2)),
    )


class TestClosureProperties:
    @given(triangular_pairs())
    @settings(max_examples=40)
    def test_closure_holds(self, pair):
        f, g = pair
        assert triangular_closure_check(f, g)["all_pass"]

    @given(triangular_pairs())
    @settings(max_examples=40)
    def test_stripe_decomposition_reconstructs(self, pair):
        f, _ = pair
        comps = degree_components(f)
        total = GradedMap.zero(f.space)
        for c in comps.values():
            total = total + c
        assert total == f
