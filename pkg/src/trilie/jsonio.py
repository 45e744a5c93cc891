"""Canonical JSON serialization for all artifact types.

Rationals serialize as strings "p/q" (or "p" when the denominator is
1); matrices as row-major arrays of such strings; dictionaries are
built in a fixed key order and never re-sorted, so identical inputs
produce byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .exact import RatMatrix, rat, rat_str
from .graded import GradedMap, GradedSpace
from .liealg import LeviData, LieAlgebra
from .rep import Representation


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def matrix_to_json(m: RatMatrix) -> list[list[str]]:
    return [[rat_str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def matrix_from_json(rows: list[list[str]], shape: tuple[int, int] | None = None) -> RatMatrix:
    if not rows and shape is not None and shape[0] == 0:
        # a 0-row listing carries no column count; only `shape` does
        return RatMatrix.zeros(*shape)
    m = RatMatrix.from_rows([[rat(x) for x in r] for r in rows])
    if shape is not None and (m.rows, m.cols) != shape:
        raise ValueError(f"matrix shape {m.rows}x{m.cols}, expected {shape}")
    return m


def algebra_to_json(L: LieAlgebra, D: LeviData) -> dict:
    brackets = []
    for (i, j) in sorted(L.structure):
        coeffs = L.structure[(i, j)]
        brackets.append(
            [i, j, [[k, rat_str(coeffs[k])] for k in sorted(coeffs)]]
        )
    return {
        "dim": L.dim,
        "labels": list(L.basis_labels),
        "brackets": brackets,
        "levi": list(D.levi_indices),
        "radical": list(D.radical_indices),
        "nilradical": list(D.nilrad_indices),
    }


def algebra_from_json(doc: dict) -> tuple[LieAlgebra, LeviData]:
    structure = {}
    for entry in doc["brackets"]:
        i, j, coeffs = entry
        structure[(int(i), int(j))] = {int(k): rat(c) for k, c in coeffs}
    L = LieAlgebra(int(doc["dim"]), [str(x) for x in doc["labels"]], structure)
    D = LeviData(
        tuple(int(x) for x in doc["levi"]),
        tuple(int(x) for x in doc["radical"]),
        tuple(int(x) for x in doc["nilradical"]),
    )
    return L, D


def graded_map_to_json(g: GradedMap) -> dict:
    return {
        "dims": list(g.space.component_dims),
        "matrix": matrix_to_json(g.matrix),
    }


def graded_map_from_json(doc: dict) -> GradedMap:
    space = GradedSpace(tuple(int(d) for d in doc["dims"]))
    m = matrix_from_json(doc["matrix"], (space.total_dim, space.total_dim))
    return GradedMap(space, m)


def representation_to_json(rho: Representation, extra: dict | None = None) -> dict:
    doc = {
        "algebra": algebra_to_json(rho.algebra, rho.levi),
        "dims": list(rho.space.component_dims),
        "images": {
            rho.algebra.basis_labels[i]: matrix_to_json(rho.images[i].matrix)
            for i in range(rho.algebra.dim)
        },
    }
    if extra:
        doc.update(extra)
    return doc


def representation_from_json(doc: dict) -> Representation:
    algebra_doc = doc["algebra"]
    if isinstance(algebra_doc, str):
        with open(algebra_doc) as fh:
            algebra_doc = json.load(fh)
    L, D = algebra_from_json(algebra_doc)
    space = GradedSpace(tuple(int(d) for d in doc["dims"]))
    images = []
    seen = set(doc["images"])
    expected = set(L.basis_labels)
    if seen != expected:
        raise ValueError(
            f"images keyed by {sorted(seen)}, algebra has {sorted(expected)}"
        )
    for label in L.basis_labels:
        images.append(
            matrix_from_json(
                doc["images"][label], (space.total_dim, space.total_dim)
            )
        )
    return Representation(L, D, space, tuple(images))


def jsonable(value: Any) -> Any:
    """Recursively convert report structures (Fractions, tuples, dict
    keys) into plain JSON-serializable values, preserving key order."""
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, RatMatrix):
        return matrix_to_json(value)
    if isinstance(value, GradedMap):
        return graded_map_to_json(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value
