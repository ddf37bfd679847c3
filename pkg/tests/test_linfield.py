"""Kernel-level tests: expected values come from independent brute
force (span enumeration / solution counting), never from the code
under test."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from trihom.linfield import (
    FieldPrime,
    FMatrix,
    Subspace,
    is_prime,
    kernel,
    quotient_basis,
    rank,
    rref,
    solve,
)


def brute_rank(data, p):
    """log_p of the number of points in the row span."""
    rows = [tuple(int(x) % p for x in r) for r in data]
    if not rows or not rows[0]:
        return 0
    span = {tuple([0] * len(rows[0]))}
    for r in rows:
        new = set(span)
        for c in range(1, p):
            for v in span:
                new.add(tuple((a + c * b) % p for a, b in zip(v, r)))
        while new != span:
            span = new
            new = set(span)
            for r2 in list(span):
                for v in list(span):
                    new.add(tuple((a + b) % p for a, b in zip(v, r2)))
    n = len(span)
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def brute_nullity(data, p, cols):
    count = 0
    for v in itertools.product(range(p), repeat=cols):
        if all(sum(row[j] * v[j] for j in range(cols)) % p == 0 for row in data):
            count += 1
    k = 0
    while count > 1:
        count //= p
        k += 1
    return k


def fm(p, rows, cols=None):
    f = FieldPrime(p)
    if not rows:
        return FMatrix.zeros(f, 0, cols or 0)
    return FMatrix.from_rows(f, rows)


class TestPrimeField:
    def test_rejects_composites(self):
        for bad in (1, 4, 6, 9, 2**31):
            with pytest.raises(ValueError):
                FieldPrime(bad)

    def test_accepts_primes(self):
        for p in (2, 3, 5, 46337, 46349, 2**31 - 1):
            assert FieldPrime(p).p == p

    def test_is_prime_small(self):
        primes = {2, 3, 5, 7, 11, 13}
        for n in range(2, 14):
            assert is_prime(n) == (n in primes)

    def test_inverse(self):
        f = FieldPrime(7)
        for a in range(1, 7):
            assert (a * f.inv(a)) % 7 == 1


class TestRank:
    def test_identity_gf2(self):
        assert rank(FMatrix.identity(FieldPrime(2), 2)) == 2

    def test_empty(self):
        assert rank(fm(2, [], cols=3)) == 0

    def test_all_ones_gf2(self):
        m = fm(2, [[1, 1], [1, 1]])
        assert brute_rank(m.data, 2) == 1
        assert rank(m) == 1

    def test_against_brute_force(self):
        rng = np.random.RandomState(11)
        for p in (2, 3, 5):
            for _ in range(40):
                r, c = rng.randint(0, 4), rng.randint(0, 4)
                data = rng.randint(0, p, size=(r, c))
                m = FMatrix(FieldPrime(p), data)
                assert rank(m) == brute_rank(data, p)


class TestSolve:
    def test_identity(self):
        f = FieldPrime(5)
        b = FMatrix.from_rows(f, [[3], [2]])
        x = solve(FMatrix.identity(f, 2), b)
        assert x == b

    def test_free_variable_convention(self):
        x = solve(fm(2, [[1, 1]]), fm(2, [[1]]))
        assert x.tolist() == [[1], [0]]

    def test_unsolvable(self):
        assert solve(fm(2, [[0]]), fm(2, [[1]])) is None

    def test_row_mismatch(self):
        with pytest.raises(ValueError):
            solve(fm(2, [[1, 0]]), fm(2, [[1], [0]]))

    def test_solutions_verify(self):
        rng = np.random.RandomState(5)
        for p in (2, 3):
            f = FieldPrime(p)
            for _ in range(50):
                a = FMatrix(f, rng.randint(0, p, size=(rng.randint(1, 4), rng.randint(1, 4))))
                b = FMatrix(f, rng.randint(0, p, size=(a.rows, 1)))
                x = solve(a, b)
                if x is not None:
                    assert a @ x == b


class TestKernel:
    def test_identity(self):
        assert kernel(FMatrix.identity(FieldPrime(2), 3)).dim == 0

    def test_zero_matrix(self):
        assert kernel(fm(2, [[0, 0], [0, 0]])).dim == 2

    def test_one_one(self):
        k = kernel(fm(2, [[1, 1]]))
        assert k.basis.tolist() == [[1, 1]]

    def test_against_brute_force(self):
        rng = np.random.RandomState(7)
        for p in (2, 3):
            f = FieldPrime(p)
            for _ in range(30):
                r, c = rng.randint(1, 4), rng.randint(1, 4)
                data = rng.randint(0, p, size=(r, c))
                k = kernel(FMatrix(f, data))
                assert k.dim == brute_nullity(data.tolist(), p, c)
                # every basis vector is an actual solution
                m = FMatrix(f, data)
                assert (m @ k.basis.transpose()).is_zero()


class TestQuotient:
    def test_zero_subspace(self):
        f = FieldPrime(2)
        proj, sec = quotient_basis(2, Subspace.zero(f, 2))
        assert proj == FMatrix.identity(f, 2)
        assert sec == FMatrix.identity(f, 2)

    def test_full_subspace(self):
        f = FieldPrime(2)
        sub = Subspace.from_rows(f, FMatrix.identity(f, 2))
        proj, _ = quotient_basis(2, sub)
        assert proj.rows == 0

    def test_diagonal_line_gf2(self):
        # kernel of the projection is exactly the subspace (the
        # dividing contract; representatives sit at non-pivot columns)
        f = FieldPrime(2)
        sub = Subspace.from_rows(f, fm(2, [[1, 1]]))
        proj, sec = quotient_basis(2, sub)
        assert (proj @ sec) == FMatrix.identity(f, 1)
        assert (proj @ sub.basis.transpose()).is_zero()
        assert kernel(proj) == sub


small_matrix = st.integers(2, 5).flatmap(
    lambda p: st.tuples(
        st.just(p),
        st.integers(0, 4),
        st.integers(0, 4),
    ).flatmap(
        lambda t: st.lists(
            st.lists(st.integers(0, t[0] - 1), min_size=t[2], max_size=t[2]),
            min_size=t[1],
            max_size=t[1],
        ).map(lambda rows: (t[0], t[1], t[2], rows))
    )
)


@settings(deadline=None, max_examples=80)
@given(small_matrix)
def test_rank_transpose(case):
    p, r, c, rows = case
    if p == 4:  # not prime; strategy domain includes it, skip
        return
    f = FieldPrime(p)
    m = FMatrix(f, np.array(rows, dtype=np.int64).reshape(r, c))
    assert rank(m) == rank(m.transpose())


@settings(deadline=None, max_examples=80)
@given(small_matrix)
def test_rank_nullity(case):
    p, r, c, rows = case
    if p == 4:
        return
    f = FieldPrime(p)
    m = FMatrix(f, np.array(rows, dtype=np.int64).reshape(r, c))
    assert kernel(m).dim + rank(m) == c


@settings(deadline=None, max_examples=80)
@given(small_matrix)
def test_quotient_projection_section(case):
    p, r, c, rows = case
    if p == 4:
        return
    f = FieldPrime(p)
    m = FMatrix(f, np.array(rows, dtype=np.int64).reshape(r, c))
    sub = Subspace.from_rows(f, m)
    proj, sec = quotient_basis(c, sub)
    assert proj @ sec == FMatrix.identity(f, c - sub.dim)
    if sub.dim:
        assert (proj @ sub.basis.transpose()).is_zero()


@settings(deadline=None, max_examples=60)
@given(small_matrix, st.randoms(use_true_random=False))
def test_subspace_canonical(case, rnd):
    """Row-shuffled and rescaled spanning sets give bit-identical bases."""
    p, r, c, rows = case
    if p == 4 or r == 0:
        return
    f = FieldPrime(p)
    a = np.array(rows, dtype=np.int64).reshape(r, c)
    s1 = Subspace.from_rows(f, FMatrix(f, a))
    shuffled = list(a)
    rnd.shuffle(shuffled)
    scaled = [((rnd.randrange(1, p)) * row) % p for row in shuffled]
    # also mix in a random sum of two rows
    if len(scaled) >= 2:
        scaled.append((scaled[0] + scaled[1]) % p)
    s2 = Subspace.from_rows(f, FMatrix(f, np.array(scaled, dtype=np.int64)))
    assert s1 == s2
    assert s1.basis.data.tobytes() == s2.basis.data.tobytes()


def test_large_prime_matmul_exact():
    # near the 2**31 boundary the big-integer fallback must stay exact
    p = 2**31 - 1
    f = FieldPrime(p)
    a = FMatrix(f, np.full((3, 3), p - 1, dtype=np.int64))
    prod = a @ a
    expect = (3 * (p - 1) * (p - 1)) % p
    assert prod.data[0, 0] == expect
