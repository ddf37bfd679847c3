"""Resolution engine: free covers, syzygies, projectivity/injectivity,
Ext, and the classical dimensions pd / id (fd = pd and FP-id = id over
the finite-dimensional algebras handled here), plus Iwanaga-Gorenstein
detection.

Two cover strategies coexist.  ``free_cover`` is the canonical
surjection Lambda^{dim m} -> m sending generator i to basis vector i;
it is the contract other code may rely on.  Dimension computations
iterate a reduced cover instead (a greedy generating set, with free
direct summands stripped from each syzygy): by Schanuel's lemma the
syzygies differ from the canonical ones only by projective summands,
which the projectivity test absorbs, and Ext is blind to such summands
in positive degrees.  Without the reduction, syzygy dimensions over a
non-self-injective algebra grow geometrically and a cutoff-32 run
would be infeasible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .algcore import Algebra, regular_module
from .linfield import FMatrix, Subspace, kernel, rank, solve
from .modrep import (
    FdModule,
    ModuleMorphism,
    dual_module,
    hom_space,
    is_isomorphic,
    kernel_module,
    zero_module,
)

# Syzygy iteration aborts honestly (ExceedsCutoff with a note) past
# this dimension rather than thrashing; bundled instances stay far
# below it.
DIMENSION_BUDGET = 4000


@dataclass(frozen=True)
class HomDim:
    """A homological dimension: NegInfinity | Finite(n) | ExceedsCutoff(c).

    NegInfinity is reserved for the zero module.  ExceedsCutoff claims
    nothing beyond the cutoff unless ``provably_infinite`` is set by
    the syzygy periodicity detector.
    """

    kind: str  # "neg_infinity" | "finite" | "exceeds"
    n: int = 0
    provably_infinite: bool = False
    note: str = ""

    @staticmethod
    def neg_infinity() -> "HomDim":
        return HomDim("neg_infinity")

    @staticmethod
    def finite(n: int) -> "HomDim":
        if n < 0:
            raise ValueError("finite dimension must be >= 0")
        return HomDim("finite", n)

    @staticmethod
    def exceeds(cutoff: int, provably_infinite: bool = False, note: str = "") -> "HomDim":
        return HomDim("exceeds", cutoff, provably_infinite, note)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def plus(self, k: int) -> "HomDim":
        if self.kind == "finite":
            return HomDim.finite(self.n + k)
        return self

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "finite":
            out["n"] = self.n
        elif self.kind == "exceeds":
            out["cutoff"] = self.n
            if self.provably_infinite:
                out["provably_infinite"] = True
            if self.note:
                out["note"] = self.note
        return out

    def __str__(self):
        if self.kind == "neg_infinity":
            return "-inf"
        if self.kind == "finite":
            return str(self.n)
        tag = "periodic, provably infinite" if self.provably_infinite else "unknown beyond cutoff"
        return f">{self.n} ({tag})"


def homdim_max(*dims: HomDim) -> HomDim:
    """Max with NegInfinity as the identity element; exceeds dominates."""
    out = HomDim.neg_infinity()
    for d in dims:
        if d.kind == "exceeds":
            return d
        if d.kind == "finite" and (out.kind != "finite" or d.n > out.n):
            out = d
    return out


def homdim_le(a: HomDim, b: HomDim) -> bool | None:
    """a <= b when decidable; None when either side exceeds its cutoff."""
    if a.kind == "neg_infinity":
        return True
    if b.kind == "neg_infinity":
        return False
    if a.kind == "exceeds" or b.kind == "exceeds":
        return None
    return a.n <= b.n


# -- free modules and covers -----------------------------------------


def free_module(alg: Algebra, side: str, r: int) -> FdModule:
    """Lambda^r; basis element (i, k) = e_k in copy i at index i*dim+k."""
    reg = regular_module(alg, side)
    n = alg.dim
    field = alg.field
    action = []
    eye = np.eye(r, dtype=np.int64)
    for k in range(n):
        action.append(FMatrix(field, np.kron(eye, reg.action[k].data)))
    m = FdModule(alg, side, n * r, action, free_rank=r)
    return m


def cover_from_generators(m: FdModule, gens: list[np.ndarray]) -> ModuleMorphism:
    """Surjection Lambda^g -> m sending generator i to gens[i]."""
    n = m.alg.dim
    g = len(gens)
    F = free_module(m.alg, m.side, g)
    cols = np.zeros((m.dim, n * g), dtype=np.int64)
    for i, v in enumerate(gens):
        for k in range(n):
            cols[:, i * n + k] = (m.action[k].data @ (np.asarray(v) % m.field.p)) % m.field.p
    return ModuleMorphism(F, m, FMatrix(m.field, cols))


def free_cover(m: FdModule) -> ModuleMorphism:
    """Canonical cover Lambda^{dim m} -> m, generator i to basis vector i."""
    basis = np.eye(m.dim, dtype=np.int64)
    return cover_from_generators(m, [basis[i] for i in range(m.dim)])


def doubled_cover(m: FdModule) -> ModuleMorphism:
    """Redundant cover Lambda^{2 dim m} -> m used by Schanuel tests."""
    basis = np.eye(m.dim, dtype=np.int64)
    gens = [basis[i] for i in range(m.dim)] + [basis[i] for i in range(m.dim)]
    return cover_from_generators(m, gens)


def _generated_subspace(m: FdModule, gens: list[np.ndarray]) -> Subspace:
    """Span of the submodule generated by gens: all act_k(g) at once."""
    if not gens:
        return Subspace.zero(m.field, m.dim)
    rows = []
    for v in gens:
        for k in range(m.alg.dim):
            rows.append((m.action[k].data @ (np.asarray(v) % m.field.p)) % m.field.p)
    return Subspace.from_rows(m.field, np.array(rows, dtype=np.int64), ambient_dim=m.dim)


def greedy_generators(m: FdModule) -> list[np.ndarray]:
    """A small generating set: sweep basis vectors, then prune.

    Not guaranteed minimal, but close enough to keep syzygy ranks flat;
    correctness never depends on minimality.
    """
    if m.dim == 0:
        return []
    basis = np.eye(m.dim, dtype=np.int64)
    gens: list[np.ndarray] = []
    covered = Subspace.zero(m.field, m.dim)
    for i in range(m.dim):
        if not covered.contains(basis[i]):
            gens.append(basis[i])
            covered = _generated_subspace(m, gens)
            if covered.dim == m.dim:
                break
    # Backward prune.
    for i in range(len(gens) - 1, -1, -1):
        if len(gens) == 1:
            break
        trial = gens[:i] + gens[i + 1 :]
        if _generated_subspace(m, trial).dim == m.dim:
            gens = trial
    # A single combined generator often works (e.g. the identity of the
    # regular module is the sum of block idempotents).
    if len(gens) > 1:
        s = np.sum(gens, axis=0) % m.field.p
        if _generated_subspace(m, [s]).dim == m.dim:
            gens = [s]
    return gens


def reduced_cover(m: FdModule) -> ModuleMorphism:
    key = "reduced_cover"
    if key not in m._cache:
        m._cache[key] = cover_from_generators(m, greedy_generators(m))
    return m._cache[key]


_COVERS = {"canonical": free_cover, "reduced": reduced_cover, "doubled": doubled_cover}


def syzygy(m: FdModule, cover: str = "canonical") -> FdModule:
    """Kernel module of the chosen cover; syzygy(0) = 0."""
    if m.dim == 0:
        return m
    c = _COVERS[cover](m)
    k, _ = kernel_module(c)
    return k


# -- free-source hom bases -------------------------------------------


def _free_hom_restricted(F: FdModule, target: FdModule, restrict: FMatrix) -> list[FMatrix]:
    """Basis of Hom(Lambda^g, target) composed with a map into Lambda^g.

    Hom(Lambda^g, N) has the explicit basis f_{i,w}(e_k gen_i) =
    act_k(w) over generator slots i and basis vectors w of N; no linear
    solving is needed.  ``restrict`` is a (dim F x d) matrix and the
    result lists each f_{i,w} @ restrict.
    """
    n = F.alg.dim
    g = F.free_rank
    if g is None:
        raise ValueError("free-source hom needs a free module")
    p = F.field.p
    out = []
    d = restrict.cols
    for i in range(g):
        block = restrict.data[i * n : (i + 1) * n, :]  # n x d slice
        for w in range(target.dim):
            acc = np.zeros((target.dim, d), dtype=np.int64)
            for k in range(n):
                row = block[k]
                if row.any():
                    acc = (acc + np.outer(target.action[k].data[:, w], row)) % p
            out.append(FMatrix(F.field, acc))
    return out


# -- projectivity and injectivity ------------------------------------


def is_projective(m: FdModule) -> bool:
    """True iff a projective cover splits.

    Uses the retraction form: 0 -> K -> F -> m -> 0 splits iff some
    r in Hom(F, K) restricts to the identity on K.  Hom out of the
    free F has an explicit basis, so this is a single linear solve.
    """
    if "projective" in m._cache:
        return m._cache["projective"]
    result = _is_projective_impl(m)
    m._cache["projective"] = result
    return result


def _is_projective_impl(m: FdModule) -> bool:
    if m.dim == 0:
        return True
    c = reduced_cover(m)
    K, incl = kernel_module(c)
    if K.dim == 0:
        return True
    candidates = _free_hom_restricted(c.source, K, incl.matrix)
    cols = np.stack([f.data.reshape(-1) for f in candidates], axis=1)
    target = np.eye(K.dim, dtype=np.int64).reshape(-1, 1)
    sol = solve(FMatrix(m.field, cols), FMatrix(m.field, target))
    return sol is not None


def is_injective(m: FdModule) -> bool:
    """True iff the field dual is projective on the other side."""
    if "injective" not in m._cache:
        m._cache["injective"] = is_projective(dual_module(m))
    return m._cache["injective"]


# -- free-summand stripping ------------------------------------------


def strip_free_summands(m: FdModule) -> FdModule:
    """Split off copies of the regular module while a surjection onto it
    can be found.

    Any surjective module map onto the free rank-1 module splits, so
    its kernel is a direct complement.  The search is heuristic (basis
    elements, prefix sums, seeded random combinations); a miss only
    costs syzygy size, never correctness.
    """
    reg = regular_module(m.alg, m.side)
    n = m.alg.dim
    p = m.field.p
    while m.dim >= n:
        sp = hom_space(m, reg)
        if sp.dim == 0:
            break
        found = None
        probes = []
        for i in range(sp.dim):
            e = np.zeros(sp.dim, dtype=np.int64)
            e[i] = 1
            probes.append(e)
        for i in range(2, sp.dim + 1):
            probes.append(np.array([1] * i + [0] * (sp.dim - i), dtype=np.int64))
        rng = random.Random(0x57121)
        for _ in range(60):
            probes.append(np.array([rng.randrange(p) for _ in range(sp.dim)], dtype=np.int64))
        for coeffs in probes:
            vec = (coeffs @ sp.basis.data) % p
            f = FMatrix(m.field, vec.reshape(n, m.dim))
            if rank(f) == n:
                found = ModuleMorphism(m, reg, f)
                break
        if found is None:
            break
        m, _ = kernel_module(found)
    return m


def reduced_syzygy_step(m: FdModule) -> FdModule:
    """Stripped kernel of the reduced cover; the pd/Ext workhorse."""
    c = reduced_cover(m)
    K, _ = kernel_module(c)
    return strip_free_summands(K)


_syzygy_step = reduced_syzygy_step


# -- dimensions ------------------------------------------------------


def pd(m: FdModule, cutoff: int, cover: str = "reduced") -> HomDim:
    """Projective dimension up to the cutoff.

    Smallest n with the n-th syzygy projective; ExceedsCutoff past the
    cutoff, flagged provably infinite when two non-projective syzygies
    are isomorphic.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if m.dim == 0:
        return HomDim.neg_infinity()
    memo_key = ("pd", cutoff, cover)
    if memo_key in m._cache:
        return m._cache[memo_key]
    result = _pd_impl(m, cutoff, cover)
    m._cache[memo_key] = result
    return result


def _pd_impl(m: FdModule, cutoff: int, cover: str) -> HomDim:
    cover_fn = _COVERS[cover]
    seen: list[FdModule] = []
    cur = m
    for step in range(cutoff + 1):
        if is_projective(cur):
            return HomDim.finite(step)
        if step == cutoff:
            break
        # Optional early exit: isomorphic non-projective syzygies prove
        # infinite dimension.  The probe is skipped on large modules
        # where the isomorphism search would dominate the runtime.
        if cur.dim <= 48:
            for prev in seen:
                if prev.dim == cur.dim and is_isomorphic(prev, cur).status == "yes":
                    return HomDim.exceeds(cutoff, provably_infinite=True, note="periodic syzygy")
        seen.append(cur)
        if cover == "reduced":
            nxt = _syzygy_step(cur)
        else:
            c = cover_fn(cur)
            nxt, _ = kernel_module(c)
        if nxt.dim > DIMENSION_BUDGET:
            return HomDim.exceeds(cutoff, note=f"dimension budget exhausted at syzygy {step + 1}")
        cur = nxt
    return HomDim.exceeds(cutoff)


def id_dim(m: FdModule, cutoff: int) -> HomDim:
    """Injective dimension: pd of the field dual on the other side."""
    return pd(dual_module(m), cutoff)


def fd(m: FdModule, cutoff: int) -> HomDim:
    """Flat dimension; equals pd over a finite-dimensional (perfect) algebra."""
    return pd(m, cutoff)


def fp_id(m: FdModule, cutoff: int) -> HomDim:
    """FP-injective dimension; equals id over a Noetherian algebra."""
    return id_dim(m, cutoff)


# -- Ext -------------------------------------------------------------


def ext_dim(m: FdModule, n: FdModule, i: int) -> int:
    """dim_k Ext^i(m, n).

    Degree 0 is the hom space.  Higher degrees shift along stripped
    syzygies (Ext is blind to projective summands in positive degree)
    and finish with Ext^1(W, N) = Hom(K, N) / restriction of Hom(F, N)
    for the cover 0 -> K -> F -> W -> 0.
    """
    if i < 0:
        raise ValueError("ext degree must be >= 0")
    if m.alg is not n.alg and m.alg.content_key() != n.alg.content_key():
        raise ValueError("ext across different algebras")
    if m.side != n.side:
        raise ValueError("ext across different sides")
    if i == 0:
        return hom_space(m, n).dim
    w = m
    for _ in range(i - 1):
        if w.dim == 0:
            return 0
        w = _syzygy_step(w)
    if w.dim == 0:
        return 0
    c = reduced_cover(w)
    K, incl = kernel_module(c)
    if K.dim == 0:
        return 0
    hom_kn = hom_space(K, n)
    if hom_kn.dim == 0:
        return 0
    restricted = _free_hom_restricted(c.source, n, incl.matrix)
    rows = np.stack([f.data.reshape(-1) for f in restricted], axis=0)
    image_rank = rank(FMatrix(m.field, rows))
    return hom_kn.dim - image_rank


# -- resolutions (explicit, for verification) -------------------------


@dataclass(eq=False)
class Resolution:
    """A finite free resolution F_len -> ... -> F_0 -> target."""

    target: FdModule
    frees: list  # list[FdModule]
    diffs: list  # diffs[0]: F_0 -> target; diffs[k]: F_k -> F_{k-1}

    @property
    def length(self) -> int:
        return len(self.frees) - 1


def free_resolution(m: FdModule, length: int, cover: str = "reduced") -> Resolution:
    cover_fn = _COVERS[cover]
    frees: list[FdModule] = []
    diffs: list[ModuleMorphism] = []
    cur = m
    incl_mat = None
    for _ in range(length + 1):
        c = cover_fn(cur) if cur.dim > 0 else cover_from_generators(cur, [])
        if incl_mat is None:
            diffs.append(c)
        else:
            diffs.append(ModuleMorphism(c.source, frees[-1], incl_mat @ c.matrix))
        frees.append(c.source)
        K, incl = kernel_module(c)
        cur = K
        incl_mat = incl.matrix
    return Resolution(m, frees, diffs)


def check_resolution(res: Resolution) -> bool:
    """Composites vanish and the complex is exact at every joint."""
    for k in range(1, len(res.diffs)):
        if not (res.diffs[k - 1].matrix @ res.diffs[k].matrix).is_zero():
            return False
    for k in range(1, len(res.diffs)):
        dk = res.diffs[k]
        prev = res.diffs[k - 1]
        ker_dim = prev.source.dim - rank(prev.matrix)
        if rank(dk.matrix) != ker_dim:
            return False
    if rank(res.diffs[0].matrix) != res.target.dim:
        return False
    return True


# -- Iwanaga-Gorenstein gate ------------------------------------------


def iwanaga_gorenstein_bound(alg: Algebra, cutoff: int) -> tuple[HomDim, dict]:
    """Common self-injective dimension of both regular modules.

    Finite(d) when id of the left and right regular modules agree and
    are finite; ExceedsCutoff otherwise.  This gates every finite Ding
    test downstream.
    """
    key = ("ig", cutoff)
    if key in alg._cache:
        return alg._cache[key]
    left = id_dim(regular_module(alg, "left"), cutoff)
    right = id_dim(regular_module(alg, "right"), cutoff)
    evidence = {"id_left_regular": left.to_json(), "id_right_regular": right.to_json()}
    if left.is_finite and right.is_finite and left.n == right.n:
        result = (HomDim.finite(left.n), evidence)
    else:
        note = "self-injective dimensions unequal" if left.is_finite and right.is_finite else ""
        result = (HomDim.exceeds(cutoff, note=note), evidence)
    alg._cache[key] = result
    return result
