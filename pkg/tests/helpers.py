"""Shared test utilities and independent oracles.

Oracles here are deliberately written against plain lists and Fractions
(not the package's own types) wherever feasible, so a bug in the library
cannot silently agree with itself.
"""

from __future__ import annotations

import random
from fractions import Fraction

from trilie.exact import RatMatrix
from trilie.graded import GradedMap, GradedSpace


def clebsch_gordan_count(a: int, b: int, c: int) -> int:
    """Multiplicity of the (c+1)-dimensional irreducible inside the
    tensor product of the (a+1)- and (b+1)-dimensional ones: 1 exactly
    when |a-b| <= c <= a+b with c = a+b (mod 2), else 0."""
    if abs(a - b) <= c <= a + b and (a + b - c) % 2 == 0:
        return 1
    return 0


def mask_triangular(space: GradedSpace, matrix: RatMatrix) -> GradedMap:
    """Zero out every degree-lowering block of `matrix`."""
    n = space.total_dim
    data = list(matrix.data)
    for k_from in range(space.num_components):
        for k_to in range(k_from):
            for i in space.component_range(k_to):
                for c in space.component_range(k_from):
                    data[i * n + c] = Fraction(0)
    return GradedMap(space, RatMatrix(n, n, data))


def seeded_rational_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    data = [
        Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        for _ in range(rows * cols)
    ]
    return RatMatrix(rows, cols, data)


def seeded_triangular_map(rng: random.Random, max_components: int = 5,
                          max_total: int = 12) -> GradedMap:
    """Deterministic random triangular map on a random graded space."""
    while True:
        ncomp = rng.randint(1, max_components)
        dims = [rng.randint(0, 4) for _ in range(ncomp)]
        if 0 < sum(dims) <= max_total:
            break
    space = GradedSpace(dims)
    raw = seeded_rational_matrix(rng, space.total_dim, space.total_dim)
    return mask_triangular(space, raw)


def brute_matrix_bracket(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """Plain-list commutator, used to cross-check RatMatrix arithmetic."""
    n = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]
