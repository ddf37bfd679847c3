"""Seeded random generation of modules and triples.

Random action matrices almost never satisfy module axioms, so modules
are produced from constructions that are valid by construction:
submodules and quotients of small free modules, duals, and direct
sums.  Triple maps are random elements of the computed hom space, i.e.
action-compatible matrices found by solving the intertwining system.
Everything is driven by a caller-supplied ``random.Random`` so a fixed
seed reproduces the campaign byte for byte.
"""

from __future__ import annotations

import random

import numpy as np

from .algcore import Algebra
from .homalg import free_module
from .linfield import FMatrix, Subspace
from .modrep import (
    Bimodule,
    FdModule,
    direct_sum,
    dual_module,
    hom_space,
    quotient_module,
    submodule_from_subspace,
    tensor_from_bimodule,
    tensor_into_bimodule,
    zero_module,
)
from .trimat import LeftTriple, ModuleMorphism, RightTriple, TriMatRing, validate_triple


def _generated_submodule(m: FdModule, vectors: list[np.ndarray]) -> Subspace:
    rows = []
    for v in vectors:
        for k in range(m.alg.dim):
            rows.append((m.action[k].data @ (np.asarray(v) % m.field.p)) % m.field.p)
    if not rows:
        return Subspace.zero(m.field, m.dim)
    return Subspace.from_rows(m.field, np.array(rows, dtype=np.int64), ambient_dim=m.dim)


def random_module(rng: random.Random, alg: Algebra, side: str, max_dim: int, allow_zero: bool = True) -> FdModule:
    """A random module of dimension at most max_dim (valid by construction)."""
    p = alg.field.p
    free1 = free_module(alg, side, 1)
    for _ in range(24):
        recipe = rng.randrange(4)
        if recipe == 0:
            # Quotient of the rank-1 free module by a generated submodule.
            count = rng.randrange(1, 3)
            vecs = [np.array([rng.randrange(p) for _ in range(free1.dim)], dtype=np.int64) for _ in range(count)]
            sub = _generated_submodule(free1, vecs)
            cand, _ = quotient_module(free1, sub)
        elif recipe == 1:
            # Submodule generated by one random vector.
            v = np.array([rng.randrange(p) for _ in range(free1.dim)], dtype=np.int64)
            cand, _ = submodule_from_subspace(free1, _generated_submodule(free1, [v]))
        elif recipe == 2:
            # Dual of a random quotient from the other side.
            other = "right" if side == "left" else "left"
            cand = dual_module(random_module(rng, alg, other, max_dim, allow_zero=True))
        else:
            # Direct sum of two generated submodules.
            v1 = np.array([rng.randrange(p) for _ in range(free1.dim)], dtype=np.int64)
            v2 = np.array([rng.randrange(p) for _ in range(free1.dim)], dtype=np.int64)
            a, _ = submodule_from_subspace(free1, _generated_submodule(free1, [v1]))
            b, _ = submodule_from_subspace(free1, _generated_submodule(free1, [v2]))
            cand, _, _ = direct_sum([a, b])
        if cand.dim > max_dim:
            continue
        if cand.dim == 0 and not allow_zero:
            continue
        return cand
    return zero_module(alg, side) if allow_zero else free1


def random_hom_element(rng: random.Random, src: FdModule, tgt: FdModule) -> FMatrix:
    """A random intertwining matrix src -> tgt (possibly zero)."""
    sp = hom_space(src, tgt)
    p = src.field.p
    vec = np.zeros(tgt.dim * src.dim, dtype=np.int64)
    for i in range(sp.dim):
        c = rng.randrange(p)
        if c:
            vec = (vec + c * sp.basis.data[i]) % p
    return FMatrix(src.field, vec.reshape(tgt.dim, src.dim))


def random_left_triple(rng: random.Random, ring: TriMatRing, max_dim: int, name: str = "") -> LeftTriple:
    m1 = random_module(rng, ring.a, "left", max_dim)
    m2 = random_module(rng, ring.b, "left", max_dim)
    tensor = tensor_from_bimodule(ring.u, m1)
    phi_mat = random_hom_element(rng, tensor.module, m2)
    tr = LeftTriple(ring, m1, m2, ModuleMorphism(tensor.module, m2, phi_mat), tensor, name=name)
    issue = validate_triple(tr)
    if issue:
        raise ValueError(f"generated triple invalid: {issue}")
    return tr


def random_right_triple(rng: random.Random, ring: TriMatRing, max_dim: int, name: str = "") -> RightTriple:
    w1 = random_module(rng, ring.a, "right", max_dim)
    w2 = random_module(rng, ring.b, "right", max_dim)
    tensor = tensor_into_bimodule(w2, ring.u)
    phi_mat = random_hom_element(rng, tensor.module, w1)
    tr = RightTriple(ring, w1, w2, ModuleMorphism(tensor.module, w1, phi_mat), tensor, name=name)
    issue = validate_triple(tr)
    if issue:
        raise ValueError(f"generated triple invalid: {issue}")
    return tr


def random_matrix(rng: random.Random, field, rows: int, cols: int) -> FMatrix:
    return FMatrix(field, np.array(
        [[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)], dtype=np.int64
    ).reshape(rows, cols))
