"""Representations as matrix assignments on a graded space.

A representation pairs an algebra (with declared Levi data) with one
graded map per basis element. Verification is split into independent
checks: the homomorphism property, triangularity of every image, the
two structural conditions (Levi images homogeneous of degree 0,
nilradical images of strictly positive degree), faithfulness via an
exact kernel computation, and per-component irreducibility under the
Levi action. A separate conjugation check re-runs the structural
conditions after moving both the Levi factor and the grading by the
exponential of a nilpotent element, confirming that the triangular
structure does not depend on the particular Levi factor chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import (
    RatMatrix,
    Vector,
    ZERO,
    exp_nilpotent,
    nullspace_basis,
    unit_vector,
    vector,
)
from .graded import (
    GradedMap,
    GradedSpace,
    degree_components,
    is_homogeneous,
    is_triangular,
)
from .liealg import LeviData, LieAlgebra, ad_matrix, bracket
from .sl2theory import weight_decomposition


class UnsupportedLeviError(ValueError):
    """Levi factor outside the recognized sl2 shape."""


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    levi: LeviData
    space: GradedSpace
    images: tuple[GradedMap, ...]

    def __post_init__(self):
        if len(self.images) != self.algebra.dim:
            raise ValueError("one image per basis element required")
        wrapped = tuple(
            im if isinstance(im, GradedMap) else GradedMap(self.space, im)
            for im in self.images
        )
        for im in wrapped:
            if im.space != self.space:
                raise ValueError("image lives on the wrong graded space")
        object.__setattr__(self, "images", wrapped)

    def image_of(self, x: Sequence) -> GradedMap:
        """Image of an arbitrary algebra element (coordinate vector)."""
        x = vector(x)
        if len(x) != self.algebra.dim:
            raise ValueError("coordinate length does not match algebra dim")
        total = RatMatrix.zeros(self.space.total_dim, self.space.total_dim)
        for i, c in enumerate(x):
            if c != 0:
                total = total + self.images[i].matrix.scale(c)
        return GradedMap(self.space, total)


def verify_homomorphism(rho: Representation) -> tuple[bool, tuple[int, int] | None]:
    """rho([b_i, b_j]) = [rho(b_i), rho(b_j)] over all pairs i < j."""
    L = rho.algebra
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            expected = rho.image_of(L.bracket_basis(i, j))
            actual = rho.images[i].bracket(rho.images[j])
            if expected != actual:
                return False, (i, j)
    return True, None


def verify_triangular_conditions(rho: Representation) -> dict:
    """Triangularity of all images plus the two structural conditions."""
    witnesses: dict = {}

    triangular_all = True
    for i, im in enumerate(rho.images):
        ok, w = is_triangular(im)
        if not ok:
            triangular_all = False
            witnesses["triangular_all"] = {"basis_index": i, "block": w}
            break

    condition_i = True
    for s in rho.levi.levi_indices:
        im = rho.images[s]
        if not (is_triangular(im)[0] and is_homogeneous(im, 0)):
            condition_i = False
            witnesses["condition_i"] = {"levi_index": s}
            break

    condition_ii = True
    for z in rho.levi.nilrad_indices:
        im = rho.images[z]
        ok, w = is_triangular(im)
        if not ok:
            condition_ii = False
            witnesses["condition_ii"] = {"nilrad_index": z, "block": w}
            break
        if not degree_components(im)[0].is_zero():
            condition_ii = False
            witnesses["condition_ii"] = {
                "nilrad_index": z,
                "block": "nonzero degree-0 stripe",
            }
            break

    report = {
        "triangular_all": triangular_all,
        "condition_i": condition_i,
        "condition_ii": condition_ii,
    }
    report["all_pass"] = all(report.values())
    report["witnesses"] = witnesses
    return report


def kernel(rho: Representation) -> list[Vector]:
    """Basis of {x : sum_i x_i rho(b_i) = 0}; faithful iff empty."""
    n = rho.space.total_dim
    dim = rho.algebra.dim
    data = []
    for r in range(n * n):
        i, j = divmod(r, n)
        data.extend(rho.images[k].matrix[i, j] for k in range(dim))
    stacked = RatMatrix(n * n, dim, data)
    return nullspace_basis(stacked)


def recognize_sl2(L: LieAlgebra, levi_indices: Sequence[int]) -> tuple[Vector, Vector, Vector]:
    """Normalize a 3-dimensional Levi factor to an (F, H, E) triple with
    [H,E] = 2E, [H,F] = -2F, [E,F] = H; raises UnsupportedLeviError when
    no basis element acts with eigenvalues {2, 0, -2}."""
    idx = list(levi_indices)
    if len(idx) != 3:
        raise UnsupportedLeviError(
            f"irreducibility test supports only 3-dimensional Levi factors, got {len(idx)}"
        )
    pos = {g: p for p, g in enumerate(idx)}
    ads = {}
    for g in idx:
        data = [ZERO] * 9
        for q, g2 in enumerate(idx):
            br = L.bracket_basis(g, g2)
            for k, c in enumerate(br):
                if c != 0:
                    if k not in pos:
                        raise UnsupportedLeviError("Levi span not closed")
                    data[pos[k] * 3 + q] = c
        ads[g] = RatMatrix(3, 3, data)

    ident = RatMatrix.identity(3)
    for g in idx:
        m = ads[g]
        if m.is_zero():
            continue
        annihilator = m @ (m - ident.scale(2)) @ (m + ident.scale(2))
        if not annihilator.is_zero():
            continue
        plus = nullspace_basis(m - ident.scale(2))
        minus = nullspace_basis(m + ident.scale(2))
        if len(plus) != 1 or len(minus) != 1:
            continue
        h_local = unit_vector(3, pos[g])
        e_local, f_local = plus[0], minus[0]

        def to_ambient(v: Vector) -> Vector:
            out = [ZERO] * L.dim
            for p, c in enumerate(v):
                out[idx[p]] += c
            return tuple(out)

        h_amb = to_ambient(h_local)
        e_amb = to_ambient(e_local)
        f_amb = to_ambient(f_local)
        ef = bracket(L, e_amb, f_amb)
        scal = None
        for k, c in enumerate(h_amb):
            if c != 0:
                scal = ef[k] / c
                break
        if scal is None or scal == 0:
            continue
        e_amb = tuple(c / scal for c in e_amb)
        if bracket(L, e_amb, f_amb) != h_amb:
            continue
        if bracket(L, h_amb, e_amb) != tuple(2 * c for c in e_amb):
            continue
        if bracket(L, h_amb, f_amb) != tuple(-2 * c for c in f_amb):
            continue
        return f_amb, h_amb, e_amb
    raise UnsupportedLeviError(
        "no Levi basis element acts with eigenvalues {2, 0, -2}"
    )


def is_k_irreducible(rho: Representation) -> list[bool]:
    """Per grading component: is it an irreducible module under the
    Levi action? Zero-dimensional components are vacuously fine."""
    f_amb, h_amb, e_amb = recognize_sl2(rho.algebra, rho.levi.levi_indices)
    h_map = rho.image_of(h_amb)
    e_map = rho.image_of(e_amb)
    out = []
    for k, d in enumerate(rho.space.component_dims):
        if d == 0:
            out.append(True)
            continue
        h_block = h_map.block(k, k)
        e_block = e_map.block(k, k)
        try:
            weights = weight_decomposition(h_block)
        except ValueError:
            out.append(False)
            continue
        top = d - 1
        expected = {top - 2 * i: 1 for i in range(d)}
        ok = weights == expected and len(nullspace_basis(e_block)) == 1
        out.append(ok)
    return out


def verify_representation(rho: Representation, irreducibility: bool = True) -> dict:
    """Full report: homomorphism, triangular conditions, faithfulness,
    and (optionally) per-component irreducibility."""
    hom_ok, hom_witness = verify_homomorphism(rho)
    tri = verify_triangular_conditions(rho)
    ker = kernel(rho)
    report = {
        "homomorphism": hom_ok,
        "triangular_all": tri["triangular_all"],
        "condition_i": tri["condition_i"],
        "condition_ii": tri["condition_ii"],
        "faithful": not ker,
        "witnesses": dict(tri["witnesses"]),
    }
    if hom_witness is not None:
        report["witnesses"]["homomorphism"] = hom_witness
    if ker:
        report["witnesses"]["faithful"] = ker[0]
    if irreducibility:
        try:
            report["irreducible_components"] = is_k_irreducible(rho)
        except UnsupportedLeviError as exc:
            report["irreducible_components"] = None
            report["witnesses"]["irreducibility"] = str(exc)
    return report


def conjugate_levi_check(rho: Representation, z: Sequence) -> dict:
    """Re-verify the triangular-representation conditions after moving
    the Levi factor by exp(ad z) and the grading by exp(rho(z)).

    The regraded component V'_k = exp(rho(z))(V_k) turns every check
    into a conjugated-matrix check: an image is degree-j homogeneous in
    the new grading iff P^{-1} (image) P is in the old one, with
    P = exp(rho(z)).
    """
    L = rho.algebra
    z = vector(z)
    ad_z = ad_matrix(L, z)
    try:
        exp_ad = exp_nilpotent(ad_z)
    except ValueError:
        raise ValueError("ad(z) is not nilpotent; conjugation undefined")
    p = exp_nilpotent(rho.image_of(z).matrix)
    p_inv = exp_nilpotent(rho.image_of(tuple(-c for c in z)).matrix)
    assert p @ p_inv == RatMatrix.identity(rho.space.total_dim)

    conjugated = [
        GradedMap(rho.space, p_inv @ im.matrix @ p) for im in rho.images
    ]

    triangular_all = True
    witness = None
    for i, im in enumerate(conjugated):
        ok, w = is_triangular(im)
        if not ok:
            triangular_all = False
            witness = {"basis_index": i, "block": w}
            break

    new_levi_vectors = [
        exp_ad.apply(unit_vector(L.dim, s)) for s in rho.levi.levi_indices
    ]
    condition_i = True
    for s_vec in new_levi_vectors:
        im_mat = p_inv @ rho.image_of(s_vec).matrix @ p
        im = GradedMap(rho.space, im_mat)
        if not (is_triangular(im)[0] and is_homogeneous(im, 0)):
            condition_i = False
            break

    condition_ii = True
    for zi in rho.levi.nilrad_indices:
        im = conjugated[zi]
        ok, _ = is_triangular(im)
        if not ok or not degree_components(im)[0].is_zero():
            condition_ii = False
            break

    report = {
        "triangular_all": triangular_all,
        "condition_i": condition_i,
        "condition_ii": condition_ii,
        "conjugated_levi_basis": tuple(new_levi_vectors),
    }
    report["all_pass"] = triangular_all and condition_i and condition_ii
    if witness:
        report["witness"] = witness
    return report
