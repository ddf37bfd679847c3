"""Canonical small algebras, bimodules and rings used by the bundled
instance files and the test suite.

The three stock grounds:

* the dual numbers k[x]/(x^2): local, self-injective, every module
  Ding projective, simple module of infinite projective dimension;
* the 2x2 triangular ring over k: hereditary, Gorenstein of dimension 1;
* T(R) = [[R,0],[R,R]] over the dual numbers: the self-paired case,
  Gorenstein of dimension 1 with Ding dimensions strictly between
  projective and zero.
"""

from __future__ import annotations

import numpy as np

from .algcore import Algebra, make_algebra, regular_module
from .linfield import FieldPrime, FMatrix
from .modrep import Bimodule, FdModule, dual_module, validate_module
from .trimat import TriMatRing, build_ring


def dual_numbers(p: int = 2) -> Algebra:
    """k[x]/(x^2) over GF(p), basis {1, x}."""
    field = FieldPrime(p)
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0] = [1, 0]
    c[0, 1] = [0, 1]
    c[1, 0] = [0, 1]
    c[1, 1] = [0, 0]
    return make_algebra(field, c, [1, 0], name="R")


def field_algebra(p: int = 2) -> Algebra:
    field = FieldPrime(p)
    return make_algebra(field, np.ones((1, 1, 1), dtype=np.int64), [1], name="k")


def upper_triangular_2x2(p: int = 2) -> Algebra:
    """T2(k) presented directly by matrix units {e11, e22, e12}."""
    field = FieldPrime(p)
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 0] = [1, 0, 0]
    c[1, 1] = [0, 1, 0]
    c[0, 2] = [0, 0, 1]
    c[2, 1] = [0, 0, 1]
    return make_algebra(field, c, [1, 1, 0], name="T2")


def socle_simple(alg: Algebra, side: str = "left") -> FdModule:
    """The simple module of the dual numbers (x acts by zero)."""
    field = alg.field
    m = FdModule(alg, side, 1, [FMatrix.identity(field, 1), FMatrix.zeros(field, 1, 1)])
    assert validate_module(m) is None
    return m


def one_dim_module(alg: Algebra, side: str, values: list[int], name_hint: str = "") -> FdModule:
    """A 1-dimensional module where basis element k acts by values[k]."""
    field = alg.field
    m = FdModule(alg, side, 1, [FMatrix(field, np.array([[v]], dtype=np.int64)) for v in values])
    issue = validate_module(m)
    if issue:
        raise ValueError(f"one_dim_module {name_hint}: {issue}")
    return m


def regular_bimodule(alg: Algebra) -> Bimodule:
    """The algebra as a bimodule over itself."""
    left = regular_module(alg, "left")
    right = regular_module(alg, "right")
    return Bimodule(alg, alg, alg.dim, list(left.action), list(right.action), name=f"{alg.name}_bimod")


def self_paired_ring(alg: Algebra, name: str = "") -> TriMatRing:
    """T(R) = [[R,0],[R,R]]."""
    return build_ring(alg, alg, regular_bimodule(alg), name=name or f"T({alg.name})")


def triangular_field_ring(p: int = 2) -> TriMatRing:
    """[[k,0],[k,k]]: the 2x2 triangular ring assembled as a TriMatRing."""
    k = field_algebra(p)
    u = regular_bimodule(k)
    return build_ring(k, k, u, name="T2ring")


def mixed_ring(p: int = 2) -> TriMatRing:
    """[[T2(k),0],[U,R]] with R the dual numbers and U = R tensor k_corner.

    U is R as a left R-module; the right T2-action factors through the
    algebra map T2 -> k projecting onto the e11 corner.  Both flat
    dimension hypotheses are finite: U is projective over R and has
    projective dimension <= 1 over the hereditary T2.
    """
    a = upper_triangular_2x2(p)
    b = dual_numbers(p)
    field = b.field
    reg_left = regular_module(b, "left")
    # right action of T2 basis {e11, e22, e12}: scalar by corner projection
    lam = [1, 0, 0]
    right = [FMatrix(field, lam[k] * np.eye(2, dtype=np.int64)) for k in range(3)]
    u = Bimodule(b, a, 2, list(reg_left.action), right, name="U_mixed")
    return build_ring(a, b, u, name="Mixed")
