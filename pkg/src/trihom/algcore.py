"""Finite-dimensional associative unital algebras by structure constants.

An algebra is a tensor c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k
plus the coordinate vector of the identity element.  Validation checks
all n**3 associativity identities and the 2n identity identities; the
finiteness hypotheses that matter downstream (Noetherian, coherent,
perfect) hold automatically for such algebras and are recorded in
reports rather than tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .linfield import FieldPrime, FMatrix, _SMALL_PRIME_LIMIT


def _wide(arr: np.ndarray, p: int) -> np.ndarray:
    """Promote to exact Python ints when int64 accumulation could overflow."""
    return arr.astype(object) if p > _SMALL_PRIME_LIMIT else arr


@dataclass(eq=False)
class Algebra:
    field: FieldPrime
    dim: int
    structure: np.ndarray  # (n, n, n) int64, reduced mod p
    one: np.ndarray  # (n,) int64
    name: str = ""
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.structure = np.asarray(self.structure, dtype=np.int64) % self.field.p
        self.one = np.asarray(self.one, dtype=np.int64) % self.field.p
        n = self.dim
        if self.structure.shape != (n, n, n) or self.one.shape != (n,):
            raise ValueError("structure tensor / identity shape mismatch")

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of coordinate vectors."""
        p = self.field.p
        # (x_i e_i)(y_j e_j) = x_i y_j c[i][j][:]
        acc = np.einsum("i,j,ijk->k", _wide(x % p, p), _wide(y % p, p), _wide(self.structure, p))
        return np.asarray(acc % p, dtype=np.int64)

    def left_mult_matrix(self, k: int) -> FMatrix:
        """Matrix of v -> e_k * v on coordinates."""
        return FMatrix(self.field, self.structure[k].T)

    def right_mult_matrix(self, k: int) -> FMatrix:
        """Matrix of v -> v * e_k on coordinates."""
        return FMatrix(self.field, self.structure[:, k, :].T)

    def content_key(self) -> bytes:
        return self.structure.tobytes() + self.one.tobytes()


@dataclass
class AlgebraViolation:
    kind: str  # "associativity" | "identity"
    indices: tuple
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices), "detail": self.detail}


def validate(alg: Algebra) -> AlgebraViolation | None:
    """First violated axiom, or None when the tensor is a unital algebra."""
    n = alg.dim
    p = alg.field.p
    c = _wide(alg.structure, p)
    # (e_i e_j) e_l vs e_i (e_j e_l), all coefficients at once per (i, j, l).
    left = np.einsum("ijm,mlk->ijlk", c, c) % p
    right = np.einsum("jlm,imk->ijlk", c, c) % p
    diff = (left - right) % p
    bad = np.argwhere(diff)
    if bad.size:
        i, j, l, _ = bad[0]
        return AlgebraViolation(
            "associativity",
            (int(i), int(j), int(l)),
            f"(e{i}*e{j})*e{l} != e{i}*(e{j}*e{l})",
        )
    basis = np.eye(n, dtype=np.int64)
    for i in range(n):
        if not np.array_equal(alg.multiply(alg.one, basis[i]), basis[i]):
            return AlgebraViolation("identity", (i,), f"one*e{i} != e{i}")
        if not np.array_equal(alg.multiply(basis[i], alg.one), basis[i]):
            return AlgebraViolation("identity", (i,), f"e{i}*one != e{i}")
    return None


def make_algebra(field: FieldPrime, structure, one, name: str = "") -> Algebra:
    """Validating constructor; raises on a broken tensor."""
    alg = Algebra(field, len(one), np.asarray(structure), np.asarray(one), name=name)
    issue = validate(alg)
    if issue is not None:
        raise ValueError(f"invalid algebra {name!r}: {issue.detail}")
    return alg


def opposite(alg: Algebra) -> Algebra:
    """Structure constants transposed in (i, j); an involution."""
    if "opposite" not in alg._cache:
        op = Algebra(
            alg.field,
            alg.dim,
            alg.structure.transpose(1, 0, 2).copy(),
            alg.one.copy(),
            name=alg.name + "^op" if alg.name else "",
        )
        op._cache["opposite"] = alg
        alg._cache["opposite"] = op
    return alg._cache["opposite"]


def regular_module(alg: Algebra, side: str):
    """The algebra acting on itself; left/right multiplication operators."""
    from .modrep import FdModule

    key = ("regular", side)
    if key not in alg._cache:
        if side == "left":
            action = [alg.left_mult_matrix(k) for k in range(alg.dim)]
        elif side == "right":
            action = [alg.right_mult_matrix(k) for k in range(alg.dim)]
        else:
            raise ValueError(f"side must be left or right, got {side!r}")
        alg._cache[key] = FdModule(alg, side, alg.dim, action)
    return alg._cache[key]
