"""Acceptance criteria, one test per criterion, each printing a
PASS/FAIL line.  Expected values are exact; the random campaigns are
seeded and deterministic.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import itertools
import json
import random
import subprocess
import sys

import numpy as np
import pytest

from trihom.algcore import regular_module
from trihom.dinghom import (
    dpd,
    dpd_triple,
    is_ding_projective,
    verify_did_bound_law,
    verify_dpd_bound_law,
    verify_global_dpd_bound_law,
    verify_injective_structure_law,
    verify_projective_structure_law,
)
from trihom.generate import random_left_triple, random_module
from trihom.homalg import HomDim, ext_dim, is_injective, is_projective, pd
from trihom.linfield import FMatrix, FieldPrime, kernel, rank
from trihom.modrep import (
    dual_module,
    hom_from_bimodule_right,
    is_isomorphic,
    tensor_from_bimodule,
)
from trihom.trimat import (
    adjunction_check,
    dual_triple,
    is_injective_triple,
    is_projective_triple,
    triple_to_module,
)

CUTOFF = 16
CAMPAIGN_SIZE = 200


def report(num, ok, detail):
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def campaign(TR, tr_suite):
    """The shared seed-1 campaign over T(R): bundled suite plus 200
    random triples with component dimensions at most 3."""
    rng = random.Random(1)
    triples = list(tr_suite.values())
    for i in range(CAMPAIGN_SIZE):
        triples.append(random_left_triple(rng, TR, 3, name=f"fuzz{i}"))
    records = []
    for tr in triples:
        wr = dual_triple(tr)
        records.append(
            {
                "name": tr.name,
                "p34": verify_projective_structure_law(tr, CUTOFF),
                "p44": verify_injective_structure_law(wr, CUTOFF),
                "p38": verify_dpd_bound_law(tr, CUTOFF),
                "p48": verify_did_bound_law(wr, CUTOFF),
                "triple": tr,
                "dual": wr,
            }
        )
    return records


def test_criterion_1_projective_structure_equivalence(campaign):
    bad = [r["name"] for r in campaign if r["p34"]["verdict"] != "pass"]
    report(
        1,
        not bad,
        f"projective structure law agrees with the direct test over t on "
        f"{len(campaign)} instances (suite + seed-1 campaign); disagreements: {bad}",
    )


def test_criterion_2_injective_structure_equivalence(campaign):
    bad = [r["name"] for r in campaign if r["p44"]["verdict"] != "pass"]
    report(
        2,
        not bad,
        f"injective structure law agrees on the dual campaign of "
        f"{len(campaign)} right triples; disagreements: {bad}",
    )


def test_criterion_3_derived_dimension_values(tr_suite, TR):
    expected = {"S_0": 1, "S_S_id": 0, "R_0": 1}
    results = {}
    ok = True
    for name, tr in tr_suite.items():
        v, ev = dpd_triple(tr, CUTOFF)
        brute, _ = dpd(triple_to_module(tr), CUTOFF)
        results[name] = (str(v), str(brute))
        ok = ok and v == HomDim.finite(expected[name]) == brute
        ok = ok and all(ev.get("structure_agreements", [True]))
    report(3, ok, f"dpd values (triple route, brute-force route) = {results}; expected {expected}")


def test_criterion_4_global_pinch(TR, tr_suite, S, Rl):
    fam = [("S", S), ("R_reg", Rl)]
    rec = verify_global_dpd_bound_law(TR, fam, fam, list(tr_suite.items()), CUTOFF)
    lower = rec["evidence"]["lower"]
    upper = rec["evidence"]["upper"]
    est = rec["evidence"]["estimate_T"]["lower_bound"]
    ok = (
        rec["verdict"] == "pass"
        and lower == {"kind": "finite", "n": 1}
        and upper == {"kind": "finite", "n": 1}
        and est == {"kind": "finite", "n": 1}
        and rec["evidence"]["lower_realized_by_family"]
    )
    report(4, ok, f"1 <= lDPD(T(R)) <= 1 with the family realizing 1 (lower={lower}, upper={upper}, est={est})")


def test_criterion_5_bound_sandwich(campaign, T2ring, MIX):
    fails = []
    inconclusive = 0
    total = 0
    for r in campaign:
        for key in ("p38", "p48"):
            total += 1
            if r[key]["verdict"] == "fail":
                fails.append(r["name"])
            elif r[key]["verdict"] == "inconclusive":
                inconclusive += 1
    # smaller campaigns over the other bundled rings
    for ring, seed in ((T2ring, 2), (MIX, 3)):
        rng = random.Random(seed)
        for i in range(30):
            tr = random_left_triple(rng, ring, 3)
            wr = dual_triple(tr)
            for rec in (verify_dpd_bound_law(tr, CUTOFF), verify_did_bound_law(wr, CUTOFF)):
                total += 1
                if rec["verdict"] == "fail":
                    fails.append(f"{ring.name}[{i}]")
                elif rec["verdict"] == "inconclusive":
                    inconclusive += 1
    rate = inconclusive / total
    ok = not fails and rate < 0.05
    report(
        5,
        ok,
        f"bound sandwich: 0 violations required, got {len(fails)}; "
        f"inconclusive rate {inconclusive}/{total} = {rate:.3f} (< 0.05 required)",
    )


def test_criterion_6_kernel_properties(R, T2):
    rng = random.Random(60)
    np_rng = np.random.RandomState(60)
    # rank-nullity on 500 random matrices over assorted primes
    for _ in range(500):
        p = rng.choice([2, 3, 5])
        f = FieldPrime(p)
        m = FMatrix(f, np_rng.randint(0, p, size=(rng.randrange(5), rng.randrange(5))))
        assert kernel(m).dim + rank(m) == m.cols
    # Schanuel independence of pd on 500 random modules (cutoff 3 keeps
    # the doubled-cover route affordable; every finite pd here is <= 1)
    algs = (R, T2)
    for i in range(500):
        alg = algs[i % 2]
        m = random_module(rng, alg, "left", 3)
        a = pd(m, 3, cover="canonical")
        b = pd(m, 3, cover="doubled")
        c = pd(m, 3, cover="reduced")
        assert a.kind == b.kind == c.kind
        if a.kind == "finite":
            assert a.n == b.n == c.n
    # Ext duality on 500 random pairs
    for i in range(500):
        alg = algs[i % 2]
        m = random_module(rng, alg, "left", 3)
        n = random_module(rng, alg, "left", 3)
        deg = rng.randrange(3)
        assert ext_dim(m, n, deg) == ext_dim(dual_module(n), dual_module(m), deg)
    # hom/tensor duality isomorphism on 500 random modules
    from trihom.instances import regular_bimodule

    U = regular_bimodule(R)
    for _ in range(500):
        m = random_module(rng, R, "left", 3)
        h = hom_from_bimodule_right(U, dual_module(m)).module
        t = tensor_from_bimodule(U, m).module
        assert h.dim == t.dim
        assert is_isomorphic(h, dual_module(t)).status == "yes"
    report(6, True, "rank-nullity, Schanuel, Ext duality, hom/tensor duality: 500 randomized cases each")


def test_criterion_7_structure_tests_match_oracle(campaign):
    bad = []
    for r in campaign:
        tr, wr = r["triple"], r["dual"]
        if is_projective_triple(tr)[0] != is_projective(triple_to_module(tr)):
            bad.append(("left", r["name"]))
        if is_injective_triple(wr)[0] != is_injective(triple_to_module(wr)):
            bad.append(("right", r["name"]))
    report(7, not bad, f"componentwise projective/injective tests vs direct tests over t on "
                       f"{2 * len(campaign)} triples; disagreements: {bad}")


def test_criterion_8_adjunction_identities(TR, tr_suite, S, Rl, R):
    from trihom.modrep import zero_module

    Z = zero_module(R, "left")
    pairs = list(itertools.product([Z, S, Rl], repeat=2))
    violations = []
    for x1, x2 in pairs:
        for name, m in tr_suite.items():
            rep = adjunction_check(TR, x1, x2, m)
            if not (rep["p_adjunction_holds"] and rep["h_adjunction_holds"]):
                violations.append((x1.dim, x2.dim, name))
    report(8, not violations,
           f"p -| q -| h dimension identities on {len(pairs) * len(tr_suite)} pair/triple combinations; "
           f"violations: {violations}")


def test_criterion_9_determinism(instances_dir):
    cmds = [
        ["analyze", str(instances_dir / "t_dual_numbers.json")],
        ["analyze", str(instances_dir / "t2_field.json")],
        ["verify", str(instances_dir / "t_dual_numbers.json"), "--theorem", "3.4"],
        ["verify", str(instances_dir / "t_dual_numbers.json"), "--theorem", "3.9"],
    ]
    ok = True
    for cmd in cmds:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "trihom", *cmd], capture_output=True, text=True
            )
            for _ in range(2)
        ]
        if runs[0].stdout != runs[1].stdout or runs[0].returncode != runs[1].returncode:
            ok = False
    report(9, ok, "consecutive analyze/verify runs on the bundled files are byte-identical")
