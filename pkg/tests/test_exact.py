from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilie.exact import (
    ONE,
    ZERO,
    RatMatrix,
    ShapeError,
    binomial,
    commutator,
    exp_nilpotent,
    factorial,
    invert,
    mat_power,
    nullspace_basis,
    rank,
    rat,
    rat_str,
    rref,
    solve,
    vector,
)

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=6
)


def matrices(rows, cols):
    return st.lists(
        rationals, min_size=rows * cols, max_size=rows * cols
    ).map(lambda d: RatMatrix(rows, cols, d))


def square(n):
    return matrices(n, n)


F = Fraction


class TestScalars:
    def test_rat_coercions(self):
        assert rat(3) == F(3)
        assert rat("2/4") == F(1, 2)
        assert rat(F(-3, 6)) == F(-1, 2)

    def test_rat_rejects_float(self):
        with pytest.raises(TypeError):
            rat(0.5)

    def test_rat_str_canonical(self):
        assert rat_str(F(1, 2)) == "1/2"
        assert rat_str(F(-2, 4)) == "-1/2"
        assert rat_str(F(4, 2)) == "2"
        assert rat_str(0) == "0"

    def test_fraction_arithmetic_is_exact(self):
        assert F(1, 2) + F(1, 3) == F(5, 6)

    def test_factorial(self):
        assert factorial(0) == 1
        assert factorial(5) == 120
        with pytest.raises(ValueError):
            factorial(-1)

    def test_binomial_with_zero_extension(self):
        assert binomial(4, 2) == 6
        assert binomial(0, 0) == 1
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0


class TestMatrixOps:
    def test_add_sub_scale(self):
        a = RatMatrix.from_rows([[1, 2], [3, 4]])
        b = RatMatrix.from_rows([[F(1, 2), 0], [0, F(1, 2)]])
        assert (a + b)[0, 0] == F(3, 2)
        assert (a - b)[1, 1] == F(7, 2)
        assert RatMatrix.identity(2).scale(F(3, 2))[1, 1] == F(3, 2)

    def test_matmul(self):
        a = RatMatrix.from_rows([[1, 2], [3, 4]])
        b = RatMatrix.from_rows([[0, 1], [1, 0]])
        assert a @ b == RatMatrix.from_rows([[2, 1], [4, 3]])

    def test_shape_errors(self):
        a = RatMatrix.zeros(2, 3)
        b = RatMatrix.zeros(2, 3)
        with pytest.raises(ShapeError):
            a @ b
        with pytest.raises(ShapeError):
            a + RatMatrix.zeros(3, 2)

    def test_commutator_on_sl2_pair(self):
        e = RatMatrix.from_rows([[0, 1], [0, 0]])
        f = RatMatrix.from_rows([[0, 0], [1, 0]])
        h = RatMatrix.from_rows([[1, 0], [0, -1]])
        assert commutator(e, f) == h
        assert commutator(h, e) == e.scale(2)
        assert commutator(h, f) == f.scale(-2)

    def test_apply(self):
        a = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert a.apply(vector([1, 0])) == (F(1), F(3))

    def test_zero_dimensional_shapes(self):
        z = RatMatrix.zeros(0, 3)
        assert z.rows == 0
        assert (z @ RatMatrix.zeros(3, 2)).cols == 2
        assert RatMatrix.identity(0).is_zero()


class TestElimination:
    def test_rref_pivot_normalization(self):
        a = RatMatrix.from_rows([[2, 4], [1, 3]])
        r, pivots = rref(a)
        assert r == RatMatrix.identity(2)
        assert pivots == (0, 1)

    def test_rank(self):
        assert rank(RatMatrix.identity(4)) == 4
        assert rank(RatMatrix.zeros(3, 5)) == 0
        assert rank(RatMatrix.from_rows([[1, 1], [2, 2]])) == 1

    def test_nullspace_of_zero_matrix(self):
        basis = nullspace_basis(RatMatrix.zeros(2, 2))
        assert basis == [(ONE, ZERO), (ZERO, ONE)]

    def test_nullspace_rank_one(self):
        basis = nullspace_basis(RatMatrix.from_rows([[1, 1], [2, 2]]))
        assert basis == [(-ONE, ONE)]

    def test_nullspace_of_full_rank_is_empty(self):
        assert nullspace_basis(RatMatrix.identity(3)) == []

    def test_solve_unique(self):
        a = RatMatrix.from_rows([[2, 0], [0, 4]])
        assert solve(a, [1, 1]) == (F(1, 2), F(1, 4))

    def test_solve_underdetermined_sets_free_to_zero(self):
        a = RatMatrix.from_rows([[1, 1]])
        assert solve(a, [3]) == (F(3), F(0))

    def test_solve_inconsistent(self):
        a = RatMatrix.from_rows([[1, 1], [1, 1]])
        assert solve(a, [0, 1]) is None

    def test_invert(self):
        a = RatMatrix.from_rows([[2, 1], [1, 1]])
        assert invert(a) @ a == RatMatrix.identity(2)
        with pytest.raises(ValueError):
            invert(RatMatrix.from_rows([[1, 1], [2, 2]]))


class TestNilpotentExp:
    def test_exp_strictly_upper(self):
        a = RatMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        expa = exp_nilpotent(a)
        assert expa == RatMatrix.from_rows(
            [[1, 1, F(1, 2)], [0, 1, 1], [0, 0, 1]]
        )

    def test_exp_zero_is_identity(self):
        assert exp_nilpotent(RatMatrix.zeros(2, 2)) == RatMatrix.identity(2)

    def test_exp_rejects_non_nilpotent(self):
        with pytest.raises(ValueError):
            exp_nilpotent(RatMatrix.identity(2))

    def test_exp_inverse_is_exp_of_negation(self):
        a = RatMatrix.from_rows([[0, F(1, 3), 5], [0, 0, -2], [0, 0, 0]])
        assert exp_nilpotent(a) @ exp_nilpotent(-a) == RatMatrix.identity(3)


class TestProperties:
    @given(square(3), square(3))
    def test_commutator_antisymmetry(self, a, b):
        assert commutator(a, b) == -commutator(b, a)

    @given(square(3), square(3), square(3))
    @settings(max_examples=30)
    def test_matmul_associativity(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @given(matrices(3, 4))
    def test_rank_plus_nullity(self, a):
        assert rank(a) + len(nullspace_basis(a)) == a.cols

    @given(matrices(3, 4))
    def test_rref_is_idempotent(self, a):
        r1, p1 = rref(a)
        r2, p2 = rref(r1)
        assert r1 == r2 and p1 == p2

    @given(matrices(3, 4))
    def test_nullspace_vectors_annihilate(self, a):
        for v in nullspace_basis(a):
            assert all(x == 0 for x in a.apply(v))

    @given(matrices(2, 3))
    def test_add_then_sub_roundtrip(self, a):
        b = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert (a + b) - b == a

    @given(square(3))
    def test_solve_consistent_system(self, a):
        b = a.apply(vector([1, 2, 3]))
        x = solve(a, b)
        assert x is not None
        assert a.apply(x) == b

    @given(square(2), st.integers(min_value=0, max_value=4))
    @settings(max_examples=30)
    def test_mat_power_matches_repeated_product(self, a, k):
        expected = RatMatrix.identity(2)
        for _ in range(k):
            expected = expected @ a
        assert mat_power(a, k) == expected
