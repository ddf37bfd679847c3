"""Random generation: validity by construction and seed determinism."""

import random

from trihom.generate import random_left_triple, random_module, random_right_triple
from trihom.modrep import validate_module
from trihom.trimat import validate_triple


def test_random_modules_are_valid(R, T2):
    rng = random.Random(1)
    for alg in (R, T2):
        for side in ("left", "right"):
            for _ in range(10):
                m = random_module(rng, alg, side, 4)
                assert m.dim <= 4
                assert validate_module(m) is None


def test_allow_zero_flag(R):
    rng = random.Random(2)
    for _ in range(10):
        m = random_module(rng, R, "left", 3, allow_zero=False)
        assert m.dim > 0


def test_random_triples_are_valid(TR, MIX):
    rng = random.Random(3)
    for ring in (TR, MIX):
        for _ in range(8):
            tr = random_left_triple(rng, ring, 3)
            assert validate_triple(tr) is None
            wr = random_right_triple(rng, ring, 3)
            assert validate_triple(wr) is None


def test_seed_determinism(TR):
    def stream(seed):
        rng = random.Random(seed)
        out = []
        for _ in range(6):
            tr = random_left_triple(rng, TR, 3)
            out.append((tr.m1.dim, tr.m2.dim, tr.phi.matrix.tolist()))
        return out

    assert stream(42) == stream(42)
    assert stream(42) != stream(43)
