"""Structure-constant algebra validation, opposites, regular modules.

The associativity oracle below multiplies basis elements through the
raw tensor by hand, independent of Algebra.multiply.
"""

import numpy as np
import pytest

from trihom.algcore import Algebra, make_algebra, opposite, regular_module, validate
from trihom.linfield import FieldPrime
from trihom.modrep import validate_module


def brute_mult(c, p, x, y):
    n = len(c)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] = (out[k] + x[i] * y[j] * c[i][j][k]) % p
    return out


def brute_associative(c, p):
    n = len(c)
    basis = np.eye(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                left = brute_mult(c, p, brute_mult(c, p, basis[i], basis[j]), basis[l])
                right = brute_mult(c, p, basis[i], brute_mult(c, p, basis[j], basis[l]))
                if left != right:
                    return False
    return True


def test_dual_numbers_valid(R):
    assert validate(R) is None
    assert brute_associative(R.structure.tolist(), 2)


def test_matrix_units_valid(T2):
    assert validate(T2) is None
    assert brute_associative(T2.structure.tolist(), 2)


def test_broken_identity_reported(F2):
    c = np.zeros((1, 1, 1), dtype=np.int64)
    c[0, 0, 0] = 1
    alg = Algebra(F2, 1, c, np.array([0]))  # "one" is the zero vector
    issue = validate(alg)
    assert issue is not None and issue.kind == "identity"


def test_broken_associativity_reported(F2):
    # e1*e1 = e0 with e0 acting as zero on the right breaks (e1 e1) e1 = e1 (e1 e1)
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0] = [1, 0]
    c[0, 1] = [0, 1]
    c[1, 0] = [0, 0]  # deliberately not matching c[0][1]
    c[1, 1] = [1, 0]
    alg = Algebra(F2, 2, c, np.array([1, 0]))
    issue = validate(alg)
    assert issue is not None
    assert not brute_associative(c.tolist(), 2) or issue.kind == "identity"


def test_make_algebra_raises_on_invalid(F2):
    c = np.zeros((1, 1, 1), dtype=np.int64)
    with pytest.raises(ValueError):
        make_algebra(F2, c, [1])  # 0*0 = 0 but one=e0 doesn't act as identity


def test_opposite_commutative_fixed_point(R):
    assert np.array_equal(opposite(R).structure, R.structure)


def test_opposite_transposes(T2):
    op = opposite(T2)
    assert validate(op) is None
    # e11 * e12 = e12 in T2, so in the opposite e12 *op e11 = e12
    assert np.array_equal(op.structure[2, 0], T2.structure[0, 2])


def test_opposite_involution(R, T2):
    for alg in (R, T2):
        assert np.array_equal(opposite(opposite(alg)).structure, alg.structure)


def test_regular_module_nilpotent_action(R):
    reg = regular_module(R, "left")
    assert validate_module(reg) is None
    assert reg.action[1].tolist() == [[0, 0], [1, 0]]


def test_identity_acts_as_identity(R, T2):
    for alg in (R, T2):
        for side in ("left", "right"):
            reg = regular_module(alg, side)
            assert reg.act_of(alg.one).tolist() == np.eye(alg.dim, dtype=int).tolist()


def test_t2_left_regular_dim(T2):
    assert regular_module(T2, "left").dim == 3


def test_left_regular_over_opposite_is_right_regular(R, T2):
    for alg in (R, T2):
        op = opposite(alg)
        left_over_op = regular_module(op, "left")
        right = regular_module(alg, "right")
        assert all(
            left_over_op.action[k] == right.action[k] for k in range(alg.dim)
        )
