"""Exact dense linear algebra over prime fields GF(p).

Everything downstream (algebras, modules, resolutions) reduces to the
operations here: reduced row echelon form with first-nonzero pivoting,
rank, solve, kernel and quotient bases.  All results are canonical, so
two computations of the same subspace yield bit-identical bases.

Matrices are numpy int64 arrays with entries reduced into [0, p).  A
single product of two reduced entries stays below 2**62, so row
operations never overflow; matrix products accumulate sums and fall
back to exact Python integers when p is large enough to make int64
accumulation unsafe.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

# Largest p for which n * (p-1)**2 fits comfortably in int64 for any
# desk-scale inner dimension n (p**2 <= 2**31 leaves 2**32 summands).
_SMALL_PRIME_LIMIT = 46337

# Deterministic work counter surfaced in CLI reports in place of wall
# times (wall times would break byte-identical reruns).
work_counter = {"rref": 0}


def reset_work_counter() -> None:
    work_counter["rref"] = 0


def is_prime(p: int) -> bool:
    """Trial division; sufficient and exact for p < 2**31."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldPrime:
    """The prime field GF(p), 2 <= p < 2**31."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2**31):
            raise ValueError(f"prime out of range: {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"not prime: {self.p}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)


class FMatrix:
    """Dense matrix over GF(p); entries live in a read-only int64 array.

    0-row and 0-column matrices are legal and arise constantly (zero
    modules, empty covers).
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldPrime, data: np.ndarray):
        arr = np.asarray(data, dtype=np.int64) % field.p
        if arr.ndim != 2:
            raise ValueError("FMatrix needs a 2-d array")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self.field = field
        self.rows, self.cols = arr.shape
        self.data = arr

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rows(field: FieldPrime, rows: list, cols: int | None = None) -> "FMatrix":
        if len(rows) == 0:
            return FMatrix(field, np.zeros((0, 0 if cols is None else cols), dtype=np.int64))
        return FMatrix(field, np.array(rows, dtype=np.int64))

    @staticmethod
    def zeros(field: FieldPrime, rows: int, cols: int) -> "FMatrix":
        return FMatrix(field, np.zeros((rows, cols), dtype=np.int64))

    @staticmethod
    def identity(field: FieldPrime, n: int) -> "FMatrix":
        return FMatrix(field, np.eye(n, dtype=np.int64))

    # -- algebra ------------------------------------------------------

    def _check_field(self, other: "FMatrix"):
        if self.field.p != other.field.p:
            raise ValueError("field mismatch")

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        p = self.field.p
        if p <= _SMALL_PRIME_LIMIT:
            return FMatrix(self.field, (self.data @ other.data) % p)
        # Exact big-integer fallback for large p.
        prod = self.data.astype(object) @ other.data.astype(object)
        return FMatrix(self.field, np.asarray(prod % p, dtype=np.int64).reshape(self.rows, other.cols))

    def __add__(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        return FMatrix(self.field, (self.data + other.data) % self.field.p)

    def __sub__(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        return FMatrix(self.field, (self.data - other.data) % self.field.p)

    def __neg__(self) -> "FMatrix":
        return FMatrix(self.field, (-self.data) % self.field.p)

    def scale(self, c: int) -> "FMatrix":
        return FMatrix(self.field, (self.data * (c % self.field.p)) % self.field.p)

    def transpose(self) -> "FMatrix":
        return FMatrix(self.field, self.data.T)

    def kron(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        return FMatrix(self.field, np.kron(self.data, other.data) % self.field.p)

    def hstack(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        return FMatrix(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        return FMatrix(self.field, np.vstack([self.data, other.data]))

    # -- inspection ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FMatrix)
            and self.field.p == other.field.p
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.field.p, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"FMatrix(GF({self.field.p}), {self.rows}x{self.cols})"

    def tolist(self) -> list:
        return self.data.tolist()


def rref(m: FMatrix) -> tuple[FMatrix, tuple[int, ...]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns (R, pivots) where pivots are the pivot column indices in
    increasing order.  Fully reduced: pivot columns carry a single 1.
    The pivot choice (first nonzero entry scanning down) is what makes
    every derived basis canonical.
    """
    work_counter["rref"] += 1
    p = m.field.p
    a = m.data.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return FMatrix(m.field, a), tuple(pivots)


def rank(m: FMatrix) -> int:
    _, pivots = rref(m)
    return len(pivots)


def solve(a: FMatrix, b: FMatrix) -> FMatrix | None:
    """Solve a @ x = b; None when unsolvable.

    Deterministic: under the RREF of [a | b] all free variables are 0.
    """
    if a.rows != b.rows:
        raise ValueError("solve: row mismatch")
    aug = a.hstack(b)
    r, pivots = rref(aug)
    # A pivot in the b-block means inconsistency.
    if any(c >= a.cols for c in pivots):
        return None
    x = np.zeros((a.cols, b.cols), dtype=np.int64)
    for row_idx, c in enumerate(pivots):
        x[c] = r.data[row_idx, a.cols:]
    return FMatrix(a.field, x)


@dataclass
class Subspace:
    """Row span with a canonical RREF basis; equal spaces compare equal."""

    ambient_dim: int
    basis: FMatrix
    pivots: tuple[int, ...] = dc_field(default=())

    @staticmethod
    def from_rows(field: FieldPrime, rows: FMatrix | np.ndarray, ambient_dim: int | None = None) -> "Subspace":
        if isinstance(rows, np.ndarray):
            rows = FMatrix(field, rows)
        n = rows.cols if ambient_dim is None else ambient_dim
        r, pivots = rref(rows)
        basis = FMatrix(field, r.data[: len(pivots)])
        return Subspace(n, basis, pivots)

    @staticmethod
    def zero(field: FieldPrime, ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, FMatrix.zeros(field, 0, ambient_dim), ())

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def field(self) -> FieldPrime:
        return self.basis.field

    def contains(self, v: np.ndarray) -> bool:
        res = self._reduce(np.asarray(v, dtype=np.int64) % self.field.p)
        return not res.any()

    def _reduce(self, v: np.ndarray) -> np.ndarray:
        p = self.field.p
        out = v.copy()
        for row_idx, c in enumerate(self.pivots):
            if out[c]:
                out = (out - out[c] * self.basis.data[row_idx]) % p
        return out

    def coords(self, v: np.ndarray) -> np.ndarray | None:
        """Coordinates in the RREF basis; None when v is outside the span."""
        v = np.asarray(v, dtype=np.int64) % self.field.p
        if self._reduce(v).any():
            return None
        return v[list(self.pivots)].astype(np.int64)

    def coords_matrix(self, cols: FMatrix) -> FMatrix | None:
        """Column-wise coords of a matrix whose columns live in the span."""
        p = self.field.p
        data = cols.data % p
        red = data.copy()
        for row_idx, c in enumerate(self.pivots):
            red = (red - np.outer(self.basis.data[row_idx], red[c])) % p
        if red.any():
            return None
        return FMatrix(self.field, data[list(self.pivots), :])

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )


def kernel(m: FMatrix) -> Subspace:
    """Canonical basis of the right null space {v : m v = 0}."""
    r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    if not free:
        return Subspace.zero(m.field, m.cols)
    p = m.field.p
    vecs = np.zeros((len(free), m.cols), dtype=np.int64)
    for k, c in enumerate(free):
        vecs[k, c] = 1
        for row_idx, pc in enumerate(pivots):
            vecs[k, pc] = (-int(r.data[row_idx, c])) % p
    return Subspace.from_rows(m.field, vecs)


def row_space(m: FMatrix) -> Subspace:
    return Subspace.from_rows(m.field, m)


def column_space(m: FMatrix) -> Subspace:
    return Subspace.from_rows(m.field, m.transpose())


def quotient_basis(ambient_dim: int, sub: Subspace) -> tuple[FMatrix, FMatrix]:
    """Projection/section pair realizing the quotient by ``sub``.

    projection: ambient -> ambient - dim(sub), kernel exactly sub;
    section: right inverse, landing on the non-pivot coordinates of the
    subspace basis.  projection @ section = identity.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("quotient_basis: ambient mismatch")
    field = sub.field
    p = field.p
    free = [c for c in range(ambient_dim) if c not in sub.pivots]
    proj = np.zeros((len(free), ambient_dim), dtype=np.int64)
    for k, c in enumerate(free):
        proj[k, c] = 1
    # Subtract the subspace reduction so that sub maps to 0: the image
    # of v is (v - reduce_by_basis(v)) read at the free coordinates.
    for row_idx, pc in enumerate(sub.pivots):
        row = sub.basis.data[row_idx]
        for k, c in enumerate(free):
            proj[k, pc] = (proj[k, pc] - row[c]) % p
    sec = np.zeros((ambient_dim, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        sec[c, k] = 1
    return FMatrix(field, proj), FMatrix(field, sec)
