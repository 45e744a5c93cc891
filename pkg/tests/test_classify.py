from fractions import Fraction

import pytest

from trilie.classify import (
    ExtensionProblem,
    ModuleParams,
    assemble_representation,
    classification_report,
    match_family,
    solve_extensions,
    valid_sn_tuples,
    z_tower,
)
from trilie.exact import RatMatrix
from trilie.family import build_family_module
from trilie.rep import is_k_irreducible, verify_representation
from trilie.sl2theory import tensor_multiplicity

from helpers import clebsch_gordan_count

F = Fraction


class TestSolutionSpaces:
    def test_lambda1_n1_m2_is_a_line(self):
        assert solve_extensions(ExtensionProblem(1, 1, 2)).dimension == 1

    def test_parity_obstruction(self):
        assert solve_extensions(ExtensionProblem(1, 0, 0)).dimension == 0

    def test_lambda2_n1_m1(self):
        assert solve_extensions(ExtensionProblem(2, 1, 1)).dimension == 1

    def test_basis_elements_satisfy_constraints(self):
        space = solve_extensions(ExtensionProblem(2, 2, 2))
        from trilie.classify import _residual

        for b in space.basis:
            r1, r2 = _residual(space.problem, b)
            assert r1.is_zero() and r2.is_zero()

    @pytest.mark.parametrize("lam", (1, 2, 3, 4))
    def test_dimension_matches_character_count(self, lam):
        for n in range(5):
            for m in range(5):
                dim = solve_extensions(ExtensionProblem(lam, n, m)).dimension
                assert dim == tensor_multiplicity(lam, n, m)
                assert dim == clebsch_gordan_count(lam, n, m)

    def test_dimension_never_exceeds_one(self):
        for n in range(4):
            for m in range(4):
                assert solve_extensions(ExtensionProblem(1, n, m)).dimension <= 1


class TestTower:
    def test_terminates_exactly_at_lambda_plus_one(self):
        problem = ExtensionProblem(1, 1, 2)
        space = solve_extensions(problem)
        tower = z_tower(problem, space.basis[0])
        assert len(tower) == problem.lam + 2
        assert not tower[1].is_zero()
        assert tower[2].is_zero()


class TestAssembly:
    def test_generator_assembles_to_full_representation(self):
        problem = ExtensionProblem(1, 1, 2)
        space = solve_extensions(problem)
        rho = assemble_representation(problem, space.basis[0])
        assert rho.algebra.dim == 5  # f, h, e, z0, z1
        assert rho.space.total_dim == 5  # (n+1) + (m+1)
        report = verify_representation(rho)
        assert report["homomorphism"]
        assert report["condition_i"] and report["condition_ii"]
        assert report["irreducible_components"] == [True, True]

    def test_zero_block_is_always_valid(self):
        problem = ExtensionProblem(1, 1, 2)
        rho = assemble_representation(problem, RatMatrix.zeros(3, 2))
        assert all(rho.images[3 + j].is_zero() for j in range(2))

    def test_scaled_generator_is_valid(self):
        problem = ExtensionProblem(2, 1, 1)
        space = solve_extensions(problem)
        rho = assemble_representation(problem, space.basis[0].scale(F(-7, 3)))
        assert verify_representation(rho)["homomorphism"]

    def test_invalid_block_rejected(self):
        problem = ExtensionProblem(1, 0, 0)
        ones = RatMatrix.from_rows([[1]])
        with pytest.raises(ValueError):
            assemble_representation(problem, ones)

    @pytest.mark.parametrize("lam,n,m", [(1, 1, 2), (2, 1, 1), (2, 2, 2), (3, 0, 3)])
    def test_assembled_is_2_irreducible(self, lam, n, m):
        problem = ExtensionProblem(lam, n, m)
        space = solve_extensions(problem)
        if not space.basis:
            pytest.skip("empty solution space")
        rho = assemble_representation(problem, space.basis[0])
        assert is_k_irreducible(rho) == [True, True]


class TestFamilyMatching:
    def test_straight_module_is_the_generator_up_to_scale(self):
        problem = ExtensionProblem(2, 0, 2)
        space = solve_extensions(problem)
        params = ModuleParams(2, 2, 0, 0, 0)
        verdict = match_family(problem, space, params)
        assert verdict["member"]
        assert verdict["scalar"] is not None and verdict["scalar"] != 0

    def test_family_with_unit_scalar_lands_in_space(self):
        problem = ExtensionProblem(1, 1, 2)
        space = solve_extensions(problem)
        params = ModuleParams(1, 2, 1, 0, 0, (F(1),))
        verdict = match_family(problem, space, params)
        assert verdict["member"]

    def test_broken_tuple_falls_outside(self):
        # (s, N) = (1, 1) carries the bracket violation: its block
        # cannot be a constraint solution
        problem = ExtensionProblem(1, 1, 2)
        space = solve_extensions(problem)
        params = ModuleParams(1, 2, 1, 1, 1)
        verdict = match_family(problem, space, params)
        assert not verdict["member"]

    def test_mismatched_shape_rejected(self):
        problem = ExtensionProblem(1, 1, 2)
        space = solve_extensions(problem)
        with pytest.raises(ValueError):
            match_family(problem, space, ModuleParams(1, 1, 0, 0, 0))


class TestReport:
    def test_lambda1_grid(self):
        report = classification_report(1, 2, 3)
        assert len(report["cells"]) == 3 * 4
        for cell in report["cells"]:
            assert cell["dim"] in (0, 1)
            assert cell["agree"], cell
            if cell["m"] > 1 + cell["n"]:
                assert cell["dim"] == 0
            if (cell["m"] + cell["n"]) % 2 == 0:  # m = lam + n + 1 parity
                assert cell["dim"] == 0

    def test_sn_tuples_match_enumeration(self):
        from trilie.family import enumerate_params

        lam, box = 2, 4
        from_cells = set()
        for n in range(box + 1):
            for m in range(box + 1):
                for s, big_n in valid_sn_tuples(lam, n, m):
                    from_cells.add((m, n, s, big_n))
        assert from_cells == set(enumerate_params(lam, box, box))

    def test_notes_flag_free_scalars(self):
        report = classification_report(1, 1, 1)
        assert any("free scalars" in note for note in report["notes"])
