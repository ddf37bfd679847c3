"""Finite-dimensional modules, morphisms, bimodules and the two
bimodule functors (tensor and hom) everything triangular reduces to.

Conventions fixed here and relied on everywhere else:

* A module is a list of action matrices, one per algebra basis element.
  For a left module ``act[k]`` is ``v -> e_k * v``; for a right module
  it is ``v -> v * e_k``.  A right A-module carries exactly the
  matrices of the corresponding left module over the opposite algebra,
  so all matrix-level algorithms are side-agnostic.
* Morphisms are target.dim x source.dim matrices intertwining every
  action matrix.
* Hom spaces are canonical subspaces of row-major flattened matrices.
* Tensor products over the algebra are quotients of the plain vector
  space tensor product by the balancing relations; the quotient comes
  with its projection/section pair so induced maps stay explicit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algcore import Algebra, _wide
from .linfield import (
    FMatrix,
    Subspace,
    kernel,
    quotient_basis,
    rank,
    rref,
)


@dataclass(eq=False)
class FdModule:
    alg: Algebra
    side: str  # "left" | "right"
    dim: int
    action: list  # list[FMatrix], one per algebra basis element
    free_rank: int | None = None  # set for modules built as Lambda^r
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"bad side {self.side!r}")
        if len(self.action) != self.alg.dim:
            raise ValueError("one action matrix per algebra basis element required")
        for a in self.action:
            if a.shape != (self.dim, self.dim):
                raise ValueError("action matrix shape mismatch")

    @property
    def field(self):
        return self.alg.field

    def act_of(self, coeffs: np.ndarray) -> FMatrix:
        """Action of the element with the given coordinate vector."""
        p = self.field.p
        acc = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k, c in enumerate(np.asarray(coeffs) % p):
            if c:
                acc = (acc + int(c) * self.action[k].data) % p
        return FMatrix(self.field, acc)

    def is_zero(self) -> bool:
        return self.dim == 0


def validate_module(m: FdModule) -> str | None:
    """Module axioms: act(one) = id and structure-constant compatibility."""
    n = m.alg.dim
    p = m.field.p
    ident = FMatrix.identity(m.field, m.dim)
    if m.act_of(m.alg.one) != ident:
        return "identity does not act as the identity matrix"
    c = m.alg.structure
    for i in range(n):
        for j in range(n):
            # left: e_i(e_j v) = (e_i e_j) v; right: (v e_i) e_j = v (e_i e_j)
            lhs = m.action[i] @ m.action[j] if m.side == "left" else m.action[j] @ m.action[i]
            acc = np.zeros((m.dim, m.dim), dtype=np.int64)
            for k in range(n):
                if c[i, j, k]:
                    acc = (acc + int(c[i, j, k]) * m.action[k].data) % p
            if lhs != FMatrix(m.field, acc):
                return f"structure constants violated at basis pair ({i}, {j})"
    return None


def zero_module(alg: Algebra, side: str) -> FdModule:
    z = FMatrix.zeros(alg.field, 0, 0)
    return FdModule(alg, side, 0, [z] * alg.dim)


@dataclass(eq=False)
class ModuleMorphism:
    source: FdModule
    target: FdModule
    matrix: FMatrix  # target.dim x source.dim

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError("morphism matrix shape mismatch")

    def __call__(self, v: np.ndarray) -> np.ndarray:
        p = self.source.field.p
        col = FMatrix(self.source.field, np.asarray(v, dtype=np.int64).reshape(-1, 1))
        return (self.matrix @ col).data[:, 0] % p


def check_morphism(f: ModuleMorphism) -> int | None:
    """None when f intertwines every action matrix, else the first bad index."""
    if f.source.alg is not f.target.alg and f.source.alg.content_key() != f.target.alg.content_key():
        raise ValueError("morphism across different algebras")
    if f.source.side != f.target.side:
        raise ValueError("morphism across different sides")
    for k in range(f.source.alg.dim):
        if f.target.action[k] @ f.matrix != f.matrix @ f.source.action[k]:
            return k
    return None


def identity_morphism(m: FdModule) -> ModuleMorphism:
    return ModuleMorphism(m, m, FMatrix.identity(m.field, m.dim))


def zero_morphism(m: FdModule, n: FdModule) -> ModuleMorphism:
    return ModuleMorphism(m, n, FMatrix.zeros(m.field, n.dim, m.dim))


def compose(g: ModuleMorphism, f: ModuleMorphism) -> ModuleMorphism:
    """g after f."""
    return ModuleMorphism(f.source, g.target, g.matrix @ f.matrix)


# -- sub/quotient structure ------------------------------------------


def submodule_from_subspace(m: FdModule, sub: Subspace) -> tuple[FdModule, ModuleMorphism]:
    """Module structure on an action-invariant subspace.

    The canonical RREF basis of ``sub`` becomes the basis of the new
    module; the inclusion morphism carries it back into ``m``.
    """
    if sub.ambient_dim != m.dim:
        raise ValueError("subspace ambient mismatch")
    incl = sub.basis.transpose()  # m.dim x sub.dim
    action = []
    for k in range(m.alg.dim):
        cols = m.action[k] @ incl
        coords = sub.coords_matrix(cols)
        if coords is None:
            raise ValueError(f"subspace not invariant under action matrix {k}")
        action.append(coords)
    s = FdModule(m.alg, m.side, sub.dim, action)
    return s, ModuleMorphism(s, m, incl)


def quotient_module(m: FdModule, sub: Subspace) -> tuple[FdModule, ModuleMorphism]:
    """Quotient of m by an action-invariant subspace, with projection."""
    proj, sec = quotient_basis(m.dim, sub)
    action = []
    for k in range(m.alg.dim):
        action.append(proj @ m.action[k] @ sec)
    q = FdModule(m.alg, m.side, proj.rows, action)
    return q, ModuleMorphism(m, q, proj)


def kernel_module(f: ModuleMorphism) -> tuple[FdModule, ModuleMorphism]:
    return submodule_from_subspace(f.source, kernel(f.matrix))


def image_module(f: ModuleMorphism) -> tuple[FdModule, ModuleMorphism]:
    sub = Subspace.from_rows(f.source.field, f.matrix.transpose())
    return submodule_from_subspace(f.target, sub)


def cokernel_module(f: ModuleMorphism) -> tuple[FdModule, ModuleMorphism]:
    sub = Subspace.from_rows(f.source.field, f.matrix.transpose())
    return quotient_module(f.target, sub)


def direct_sum(ms: list[FdModule], alg: Algebra | None = None, side: str = "left"):
    """Block-diagonal sum with injections and projections.

    The empty sum needs the algebra and side spelled out.
    """
    if not ms:
        if alg is None:
            raise ValueError("empty direct sum needs an algebra")
        z = zero_module(alg, side)
        return z, [], []
    alg = ms[0].alg
    side = ms[0].side
    for m in ms[1:]:
        if m.alg is not alg or m.side != side:
            raise ValueError("direct sum needs a common algebra and side")
    total = sum(m.dim for m in ms)
    field = alg.field
    action = []
    for k in range(alg.dim):
        block = np.zeros((total, total), dtype=np.int64)
        off = 0
        for m in ms:
            block[off : off + m.dim, off : off + m.dim] = m.action[k].data
            off += m.dim
        action.append(FMatrix(field, block))
    s = FdModule(alg, side, total, action)
    injections, projections = [], []
    off = 0
    for m in ms:
        inj = np.zeros((total, m.dim), dtype=np.int64)
        prj = np.zeros((m.dim, total), dtype=np.int64)
        for i in range(m.dim):
            inj[off + i, i] = 1
            prj[i, off + i] = 1
        injections.append(ModuleMorphism(m, s, FMatrix(field, inj)))
        projections.append(ModuleMorphism(s, m, FMatrix(field, prj)))
        off += m.dim
    return s, injections, projections


# -- hom spaces ------------------------------------------------------


def intertwiner_space(
    acts_tgt: list[FMatrix], acts_src: list[FMatrix], dim_tgt: int, dim_src: int
) -> Subspace:
    """Canonical basis of {X : acts_tgt[k] X = X acts_src[k] for all k}.

    Flattening is row-major over (dim_tgt, dim_src).  Computed by
    iteratively intersecting with the kernel of each constraint, which
    keeps intermediate systems no larger than the surviving space.
    """
    if not acts_tgt and not acts_src:
        raise ValueError("no constraints given")
    field = (acts_tgt[0] if acts_tgt else acts_src[0]).field
    p = field.p
    amb = dim_tgt * dim_src
    if amb == 0:
        return Subspace.zero(field, 0)
    cur = np.eye(amb, dtype=np.int64)
    for at, asrc in zip(acts_tgt, acts_src):
        h = cur.shape[0]
        if h == 0:
            break
        batch = cur.reshape(h, dim_tgt, dim_src)
        lhs = np.matmul(_wide(at.data, p), _wide(batch, p)) % p
        rhs = np.matmul(_wide(batch, p), _wide(asrc.data, p)) % p
        constraint = np.asarray((lhs - rhs) % p, dtype=np.int64).reshape(h, amb)
        coeff = kernel(FMatrix(field, constraint.T))
        if coeff.dim == 0:
            cur = np.zeros((0, amb), dtype=np.int64)
            break
        cur = np.asarray(
            (_wide(coeff.basis.data, p) @ _wide(cur, p)) % p, dtype=np.int64
        )
    return Subspace.from_rows(field, cur, ambient_dim=amb)


def hom_space(m: FdModule, n: FdModule) -> Subspace:
    """All intertwining matrices m -> n as a canonical subspace."""
    if m.alg is not n.alg and m.alg.content_key() != n.alg.content_key():
        raise ValueError("hom across different algebras")
    if m.side != n.side:
        raise ValueError("hom across different sides")
    return intertwiner_space(n.action, m.action, n.dim, m.dim)


def hom_basis_matrices(m: FdModule, n: FdModule) -> list[FMatrix]:
    sp = hom_space(m, n)
    return [
        FMatrix(m.field, sp.basis.data[i].reshape(n.dim, m.dim))
        for i in range(sp.dim)
    ]


# -- duality ---------------------------------------------------------


def dual_module(m: FdModule) -> FdModule:
    """Field dual: same algebra, flipped side, transposed actions."""
    key = "dual"
    if key not in m._cache:
        side = "right" if m.side == "left" else "left"
        d = FdModule(m.alg, side, m.dim, [a.transpose() for a in m.action])
        d._cache[key] = m
        m._cache[key] = d
    return m._cache[key]


def dual_morphism(f: ModuleMorphism) -> ModuleMorphism:
    return ModuleMorphism(dual_module(f.target), dual_module(f.source), f.matrix.transpose())


# -- bimodules -------------------------------------------------------


@dataclass(eq=False)
class Bimodule:
    """(B, A)-bimodule: commuting left B-action and right A-action."""

    left_alg: Algebra  # B
    right_alg: Algebra  # A
    dim: int
    left_action: list  # per B basis element
    right_action: list  # per A basis element
    name: str = ""

    def __post_init__(self):
        if self.left_alg.field.p != self.right_alg.field.p:
            raise ValueError("bimodule algebras over different fields")

    @property
    def field(self):
        return self.left_alg.field

    def as_left_module(self) -> FdModule:
        return FdModule(self.left_alg, "left", self.dim, list(self.left_action))

    def as_right_module(self) -> FdModule:
        return FdModule(self.right_alg, "right", self.dim, list(self.right_action))

    def is_zero(self) -> bool:
        return self.dim == 0


def validate_bimodule(u: Bimodule) -> str | None:
    issue = validate_module(u.as_left_module())
    if issue:
        return f"left action: {issue}"
    issue = validate_module(u.as_right_module())
    if issue:
        return f"right action: {issue}"
    for i, lb in enumerate(u.left_action):
        for j, ra in enumerate(u.right_action):
            if lb @ ra != ra @ lb:
                return f"actions do not commute at (b{i}, a{j})"
    return None


# -- tensor functors -------------------------------------------------


@dataclass(eq=False)
class TensorProduct:
    """A tensor product over the algebra, kept with its ambient maps.

    ``from_ambient`` projects the plain vector-space tensor product
    onto the canonical quotient basis; ``to_ambient`` is its section.
    """

    module: FdModule
    from_ambient: FMatrix
    to_ambient: FMatrix
    ambient_dim: int


def _relation_rows(ops1: list[np.ndarray], ops2: list[np.ndarray], p: int) -> np.ndarray:
    rows = [np.asarray((a - b) % p, dtype=np.int64).T for a, b in zip(ops1, ops2)]
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.vstack(rows)


def tensor_from_bimodule(u: Bimodule, m: FdModule) -> TensorProduct:
    """U tensor_A M for a left A-module M; result is a left B-module.

    Ambient basis is u_j tensor x_i at index j * dim(M) + i.  The
    balancing relations (u.a) tensor x - u tensor (a.x) are spanned by
    the columns of kron(R_a, I) - kron(I, M_a) over the A-basis.
    """
    if u.right_alg is not m.alg and u.right_alg.content_key() != m.alg.content_key():
        raise ValueError("tensor: bimodule right algebra must match module algebra")
    if m.side != "left":
        raise ValueError("tensor_from_bimodule takes a left module")
    field = u.field
    p = field.p
    amb = u.dim * m.dim
    eye_u = np.eye(u.dim, dtype=np.int64)
    eye_m = np.eye(m.dim, dtype=np.int64)
    ops1 = [np.kron(u.right_action[k].data, eye_m) % p for k in range(m.alg.dim)]
    ops2 = [np.kron(eye_u, m.action[k].data) % p for k in range(m.alg.dim)]
    sub = Subspace.from_rows(field, _relation_rows(ops1, ops2, p), ambient_dim=amb)
    proj, sec = quotient_basis(amb, sub)
    action = []
    for k in range(u.left_alg.dim):
        op = FMatrix(field, np.kron(u.left_action[k].data, eye_m) % p)
        action.append(proj @ op @ sec)
    mod = FdModule(u.left_alg, "left", proj.rows, action)
    return TensorProduct(mod, proj, sec, amb)


def tensor_into_bimodule(w: FdModule, u: Bimodule) -> TensorProduct:
    """W tensor_B U for a right B-module W; result is a right A-module.

    Ambient basis is w_i tensor u_j at index i * dim(U) + j.
    """
    if u.left_alg is not w.alg and u.left_alg.content_key() != w.alg.content_key():
        raise ValueError("tensor: bimodule left algebra must match module algebra")
    if w.side != "right":
        raise ValueError("tensor_into_bimodule takes a right module")
    field = u.field
    p = field.p
    amb = w.dim * u.dim
    eye_u = np.eye(u.dim, dtype=np.int64)
    eye_w = np.eye(w.dim, dtype=np.int64)
    ops1 = [np.kron(w.action[k].data, eye_u) % p for k in range(w.alg.dim)]
    ops2 = [np.kron(eye_w, u.left_action[k].data) % p for k in range(w.alg.dim)]
    sub = Subspace.from_rows(field, _relation_rows(ops1, ops2, p), ambient_dim=amb)
    proj, sec = quotient_basis(amb, sub)
    action = []
    for k in range(u.right_alg.dim):
        op = FMatrix(field, np.kron(eye_w, u.right_action[k].data) % p)
        action.append(proj @ op @ sec)
    mod = FdModule(u.right_alg, "right", proj.rows, action)
    return TensorProduct(mod, proj, sec, amb)


# -- hom functors ----------------------------------------------------


@dataclass(eq=False)
class HomModule:
    """Hom over the algebra out of a bimodule, with its basis of maps."""

    module: FdModule
    basis_maps: list  # list[FMatrix], each target.dim x u.dim
    space: Subspace  # flattened canonical subspace


def hom_from_bimodule_right(u: Bimodule, w: FdModule) -> HomModule:
    """Hom_A(U, W) for a right A-module W; result is a right B-module.

    Elements are k-linear f: U -> W with f(u.a) = f(u).a; the right
    B-action is (f.b)(u) = f(b.u).
    """
    if u.right_alg is not w.alg and u.right_alg.content_key() != w.alg.content_key():
        raise ValueError("hom: bimodule right algebra must match module algebra")
    if w.side != "right":
        raise ValueError("hom_from_bimodule_right takes a right module")
    field = u.field
    sp = intertwiner_space(w.action, u.right_action, w.dim, u.dim)
    mats = [
        FMatrix(field, sp.basis.data[i].reshape(w.dim, u.dim)) for i in range(sp.dim)
    ]
    action = _hom_action(sp, mats, u.left_action, field)
    mod = FdModule(u.left_alg, "right", sp.dim, action)
    return HomModule(mod, mats, sp)


def hom_from_bimodule_left(u: Bimodule, n: FdModule) -> HomModule:
    """Hom_B(U, N) for a left B-module N; result is a left A-module.

    Elements are f: U -> N with f(b.u) = b.f(u); the left A-action is
    (a.f)(u) = f(u.a).
    """
    if u.left_alg is not n.alg and u.left_alg.content_key() != n.alg.content_key():
        raise ValueError("hom: bimodule left algebra must match module algebra")
    if n.side != "left":
        raise ValueError("hom_from_bimodule_left takes a left module")
    field = u.field
    sp = intertwiner_space(n.action, u.left_action, n.dim, u.dim)
    mats = [
        FMatrix(field, sp.basis.data[i].reshape(n.dim, u.dim)) for i in range(sp.dim)
    ]
    action = _hom_action(sp, mats, u.right_action, field)
    mod = FdModule(u.right_alg, "left", sp.dim, action)
    return HomModule(mod, mats, sp)


def _hom_action(sp: Subspace, mats: list[FMatrix], precompose_with: list[FMatrix], field) -> list[FMatrix]:
    """Action matrices of f -> f o g on hom coordinates, per basis g."""
    action = []
    for g in precompose_with:
        cols = np.zeros((sp.dim, sp.dim), dtype=np.int64)
        for i, f in enumerate(mats):
            moved = (f @ g).data.reshape(-1)
            coords = sp.coords(moved)
            if coords is None:
                raise ValueError("hom space not closed under the module action")
            cols[:, i] = coords
        action.append(FMatrix(field, cols))
    return action


# -- isomorphism search ----------------------------------------------


@dataclass
class IsoResult:
    status: str  # "yes" | "no" | "inconclusive"
    witness: ModuleMorphism | None = None


def is_isomorphic(m: FdModule, n: FdModule, enum_budget: int = 4096, trials: int = 200) -> IsoResult:
    """Search hom_space(m, n) for an invertible element.

    "no" is only returned when it is certain: distinct dimensions, an
    empty hom space, or exhaustive enumeration within the budget.
    """
    if m.dim != n.dim:
        return IsoResult("no")
    if m.dim == 0:
        return IsoResult("yes", zero_morphism(m, n))
    sp = hom_space(m, n)
    h = sp.dim
    if h == 0:
        return IsoResult("no")
    p = m.field.p
    d = m.dim

    def candidate(coeffs) -> ModuleMorphism | None:
        vec = (np.asarray(coeffs, dtype=np.int64) @ sp.basis.data) % p
        mat = FMatrix(m.field, vec.reshape(d, d))
        if rank(mat) == d:
            return ModuleMorphism(m, n, mat)
        return None

    total = p**h if h * np.log2(p) < 40 else None
    if total is not None and total <= enum_budget:
        coeffs = np.zeros(h, dtype=np.int64)
        for _ in range(total - 1):
            i = 0
            while True:
                coeffs[i] += 1
                if coeffs[i] < p:
                    break
                coeffs[i] = 0
                i += 1
            w = candidate(coeffs)
            if w is not None:
                return IsoResult("yes", w)
        return IsoResult("no")

    # Deterministic probes, then seeded random combinations.
    for i in range(h):
        coeffs = [0] * h
        coeffs[i] = 1
        w = candidate(coeffs)
        if w is not None:
            return IsoResult("yes", w)
    for i in range(2, h + 1):
        w = candidate([1] * i + [0] * (h - i))
        if w is not None:
            return IsoResult("yes", w)
    rng = random.Random(0x5EED)
    for _ in range(trials):
        w = candidate([rng.randrange(p) for _ in range(h)])
        if w is not None:
            return IsoResult("yes", w)
    return IsoResult("inconclusive")
