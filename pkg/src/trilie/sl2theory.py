"""Standard sl2 machinery over exact rationals.

Irreducible modules in the lowering-operator basis convention
(f walks down the weight string, e walks back up with integer
coefficients), exact weight decompositions, the multiplicity-free
irreducibility test, and Clebsch-Gordan multiplicities by character
counting. The latter serves as an oracle that is independent of any
matrix construction elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import RatMatrix, ZERO, commutator, nullspace_basis, rank


@dataclass(frozen=True)
class Sl2Module:
    highest_weight: int
    f_mat: RatMatrix
    h_mat: RatMatrix
    e_mat: RatMatrix

    @property
    def dim(self) -> int:
        return self.highest_weight + 1


def build_irreducible(d: int) -> Sl2Module:
    """The (d+1)-dimensional irreducible on basis (x_0 … x_d):
    h·x_i = (d-2i)x_i, f·x_i = x_{i+1}, e·x_i = i(d-i+1)x_{i-1}."""
    if d < 0:
        raise ValueError(f"highest weight must be nonnegative, got {d}")
    n = d + 1
    h = RatMatrix.diagonal([d - 2 * i for i in range(n)])
    f_data = [ZERO] * (n * n)
    e_data = [ZERO] * (n * n)
    for i in range(n):
        if i + 1 < n:
            f_data[(i + 1) * n + i] = ZERO + 1
        if i >= 1:
            e_data[(i - 1) * n + i] = ZERO + i * (d - i + 1)
    f = RatMatrix(n, n, f_data)
    e = RatMatrix(n, n, e_data)
    _require_sl2_relations(f, h, e)
    return Sl2Module(d, f, h, e)


def _require_sl2_relations(f: RatMatrix, h: RatMatrix, e: RatMatrix) -> None:
    if commutator(h, e) != e.scale(2):
        raise ValueError("[h, e] = 2e violated")
    if commutator(h, f) != f.scale(-2):
        raise ValueError("[h, f] = -2f violated")
    if commutator(e, f) != h:
        raise ValueError("[e, f] = h violated")


def weight_decomposition(h: RatMatrix) -> dict[int, int]:
    """Integer eigenvalue → eigenspace dimension for a diagonalizable
    h-action; rejects non-integer or defective actions.

    Candidate weights are scanned inside the Gershgorin bound; the
    decomposition is accepted only if eigenspace dimensions sum to the
    full dimension.
    """
    if h.rows != h.cols:
        raise ValueError("h-action matrix must be square")
    n = h.rows
    if n == 0:
        return {}
    bound = 0
    for i in range(n):
        s = sum(abs(h[i, j]) for j in range(n))
        if s > bound:
            bound = s
    bound = int(bound) + 1
    out: dict[int, int] = {}
    total = 0
    for w in range(-bound, bound + 1):
        shifted = h - RatMatrix.identity(n).scale(w)
        mult = n - rank(shifted)
        if mult > 0:
            out[w] = mult
            total += mult
    if total != n:
        raise ValueError(
            "h-action is not diagonalizable with integer eigenvalues "
            f"(eigenspace dims sum to {total} of {n})"
        )
    return out


def is_irreducible(f: RatMatrix, h: RatMatrix, e: RatMatrix) -> bool:
    """Multiplicity-free weight string {d, d-2, …, -d} plus a single
    highest-weight line (1-dimensional e-kernel)."""
    _require_sl2_relations(f, h, e)
    n = h.rows
    if n == 0:
        return False
    weights = weight_decomposition(h)
    d = n - 1
    expected = {d - 2 * i: 1 for i in range(n)}
    if weights != expected:
        return False
    return len(nullspace_basis(e)) == 1


def tensor_multiplicity(a: int, b: int, c: int) -> int:
    """Multiplicity of V_c inside V_a ⊗ V_b by weight counting:
    (# tensor weights equal to c) - (# equal to c + 2)."""
    if min(a, b, c) < 0:
        raise ValueError("highest weights must be nonnegative")
    counts: dict[int, int] = {}
    for i in range(a + 1):
        for j in range(b + 1):
            w = (a - 2 * i) + (b - 2 * j)
            counts[w] = counts.get(w, 0) + 1
    return counts.get(c, 0) - counts.get(c + 2, 0)
