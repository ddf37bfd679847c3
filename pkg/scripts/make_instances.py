#!/usr/bin/env python3
"""Regenerate the bundled instance files in instances/.

All phi matrices are written in the canonical tensor-quotient bases the
library computes, so the files can be loaded back verbatim.  Output is
deterministic; rerunning leaves committed files unchanged.
"""

import json
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from trihom.algcore import regular_module
from trihom.generate import random_left_triple
from trihom.instances import (
    dual_numbers,
    field_algebra,
    mixed_ring,
    one_dim_module,
    self_paired_ring,
    socle_simple,
    triangular_field_ring,
    upper_triangular_2x2,
)
from trihom.linfield import FMatrix
from trihom.modrep import dual_module, zero_module
from trihom.trimat import LeftTriple, dual_triple, make_left_triple

OUT = pathlib.Path(__file__).resolve().parents[1] / "instances"


def alg_json(a):
    return {"dim": a.dim, "structure": a.structure.tolist(), "one": a.one.tolist()}


def bimod_json(u, left_ref, right_ref):
    return {
        "left_alg": left_ref,
        "right_alg": right_ref,
        "dim": u.dim,
        "left_action": [m.tolist() for m in u.left_action],
        "right_action": [m.tolist() for m in u.right_action],
    }


def module_json(m, alg_ref):
    return {
        "algebra": alg_ref,
        "side": m.side,
        "dim": m.dim,
        "action": [a.tolist() for a in m.action],
    }


def triple_json(tr, ring_ref, ref1, ref2):
    keys = ("m1", "m2") if isinstance(tr, LeftTriple) else ("w1", "w2")
    return {
        "ring": ring_ref,
        "side": tr.side,
        keys[0]: ref1,
        keys[1]: ref2,
        "phi": tr.phi.matrix.tolist(),
    }


def write(name, doc):
    path = OUT / name
    path.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def make_dual_numbers():
    R = dual_numbers(2)
    S = socle_simple(R)
    doc = {
        "field": 2,
        "algebras": {"R": alg_json(R)},
        "modules": {
            "R_reg": module_json(regular_module(R, "left"), "R"),
            "S": module_json(S, "R"),
            "D_R": module_json(dual_module(regular_module(R, "left")), "R"),
            "D_S": module_json(dual_module(S), "R"),
        },
        "tasks": [{"command": "analyze"}],
    }
    write("dual_numbers.json", doc)


def make_t_dual_numbers():
    R = dual_numbers(2)
    T = self_paired_ring(R, name="T")
    S = socle_simple(R)
    Rl = regular_module(R, "left")
    ZL = zero_module(R, "left")
    f = R.field
    triples = {
        "S_0": make_left_triple(T, S, ZL, FMatrix.zeros(f, 0, 1), name="S_0"),
        "S_S_id": make_left_triple(T, S, S, FMatrix.identity(f, 1), name="S_S_id"),
        "R_0": make_left_triple(T, Rl, ZL, FMatrix.zeros(f, 0, 2), name="R_0"),
    }
    duals = {f"D_{k}": dual_triple(t) for k, t in triples.items()}
    modules = {
        "S": (S, "R"),
        "R_reg": (Rl, "R"),
        "zeroL": (ZL, "R"),
        "D_S": (dual_module(S), "R"),
        "D_R": (dual_module(Rl), "R"),
        "zeroR": (zero_module(R, "right"), "R"),
    }
    doc = {
        "field": 2,
        "algebras": {"R": alg_json(R)},
        "bimodules": {"U": bimod_json(T.u, "R", "R")},
        "rings": {"T": {"a": "R", "b": "R", "u": "U"}},
        "modules": {k: module_json(m, ref) for k, (m, ref) in modules.items()},
        "triples": {
            "S_0": triple_json(triples["S_0"], "T", "S", "zeroL"),
            "S_S_id": triple_json(triples["S_S_id"], "T", "S", "S"),
            "R_0": triple_json(triples["R_0"], "T", "R_reg", "zeroL"),
            "D_S_0": triple_json(duals["D_S_0"], "T", "D_S", "zeroR"),
            "D_S_S_id": triple_json(duals["D_S_S_id"], "T", "D_S", "D_S"),
            "D_R_0": triple_json(duals["D_R_0"], "T", "D_R", "zeroR"),
        },
        "families": {"suite": ["S_0", "S_S_id", "R_0", "D_S_0", "D_S_S_id", "D_R_0"]},
        "fuzz_ring": "T",
        "tasks": [
            {"command": "validate"},
            {"command": "analyze"},
            {"command": "verify", "theorem": "3.4"},
            {"command": "verify", "theorem": "4.4"},
            {"command": "verify", "theorem": "3.8"},
            {"command": "verify", "theorem": "4.8"},
            {"command": "verify", "theorem": "3.9"},
            {"command": "verify", "theorem": "4.9"},
            {"command": "verify", "theorem": "cor3.5"},
            {"command": "verify", "theorem": "cor4.5"},
            {"command": "fuzz", "seed": 1, "count": 200, "max_dim": 3},
        ],
    }
    write("t_dual_numbers.json", doc)


def make_t2_field():
    k = field_algebra(2)
    T2 = triangular_field_ring(2)
    kl = regular_module(k, "left")
    ZL = zero_module(k, "left")
    f = k.field
    s1 = make_left_triple(T2, kl, ZL, FMatrix.zeros(f, 0, 1), name="S1")
    p1 = make_left_triple(T2, kl, kl, FMatrix.identity(f, 1), name="P1")
    s2 = make_left_triple(T2, ZL, kl, FMatrix.zeros(f, 1, 0), name="S2")
    duals = {n: dual_triple(t) for n, t in (("S1", s1), ("P1", p1), ("S2", s2))}
    doc = {
        "field": 2,
        "algebras": {"k": alg_json(k)},
        "bimodules": {"u": bimod_json(T2.u, "k", "k")},
        "rings": {"T2": {"a": "k", "b": "k", "u": "u"}},
        "modules": {
            "k_left": module_json(kl, "k"),
            "zeroL": module_json(ZL, "k"),
            "k_right": module_json(regular_module(k, "right"), "k"),
            "zeroR": module_json(zero_module(k, "right"), "k"),
        },
        "triples": {
            "S1": triple_json(s1, "T2", "k_left", "zeroL"),
            "P1": triple_json(p1, "T2", "k_left", "k_left"),
            "S2": triple_json(s2, "T2", "zeroL", "k_left"),
            "D_S1": triple_json(duals["S1"], "T2", "k_right", "zeroR"),
            "D_P1": triple_json(duals["P1"], "T2", "k_right", "k_right"),
            "D_S2": triple_json(duals["S2"], "T2", "zeroR", "k_right"),
        },
        "fuzz_ring": "T2",
        "tasks": [
            {"command": "verify", "theorem": "3.4"},
            {"command": "verify", "theorem": "3.8"},
            {"command": "verify", "theorem": "4.4"},
            {"command": "verify", "theorem": "4.8"},
        ],
    }
    write("t2_field.json", doc)


def make_mixed():
    M = mixed_ring(2)
    a, b = M.a, M.b  # T2 and the dual numbers
    f = a.field
    # 1-dimensional left T2-modules: e11 or e22 acting by 1.
    s_top = one_dim_module(a, "left", [1, 0, 0], "s_top")
    s_bot = one_dim_module(a, "left", [0, 1, 0], "s_bot")
    a_reg = regular_module(a, "left")
    s_b = socle_simple(b)
    b_reg = regular_module(b, "left")
    ZB = zero_module(b, "left")
    rng = random.Random(7)
    t_rand = random_left_triple(rng, M, 3, name="rnd")
    triples = {
        "topline": make_left_triple(M, s_top, ZB, FMatrix.zeros(f, 0, 2), name="topline"),
        "botline": make_left_triple(M, s_bot, ZB, FMatrix.zeros(f, 0, 0), name="botline"),
        "bup": make_left_triple(M, zero_module(a, "left"), s_b, FMatrix.zeros(f, 1, 0), name="bup"),
        "rnd": t_rand,
    }
    duals = {f"D_{n}": dual_triple(t) for n, t in triples.items()}
    modules = {
        "s_top": (s_top, "A"),
        "s_bot": (s_bot, "A"),
        "A_reg": (a_reg, "A"),
        "s_B": (s_b, "B"),
        "B_reg": (b_reg, "B"),
        "zeroB": (ZB, "B"),
        "zeroA": (zero_module(a, "left"), "A"),
        "rnd_m1": (t_rand.m1, "A"),
        "rnd_m2": (t_rand.m2, "B"),
        "D_s_top": (dual_module(s_top), "A"),
        "D_A_reg": (dual_module(a_reg), "A"),
        "D_s_B": (dual_module(s_b), "B"),
        "D_B_reg": (dual_module(b_reg), "B"),
        "D_rnd_m1": (dual_module(t_rand.m1), "A"),
        "D_rnd_m2": (dual_module(t_rand.m2), "B"),
        "zeroA_r": (zero_module(a, "right"), "A"),
        "zeroB_r": (zero_module(b, "right"), "B"),
    }
    doc = {
        "field": 2,
        "algebras": {"A": alg_json(a), "B": alg_json(b)},
        "bimodules": {"U": bimod_json(M.u, "B", "A")},
        "rings": {"Mixed": {"a": "A", "b": "B", "u": "U"}},
        "modules": {k: module_json(m, ref) for k, (m, ref) in modules.items()},
        "triples": {
            "topline": triple_json(triples["topline"], "Mixed", "s_top", "zeroB"),
            "botline": triple_json(triples["botline"], "Mixed", "s_bot", "zeroB"),
            "bup": triple_json(triples["bup"], "Mixed", "zeroA", "s_B"),
            "rnd": triple_json(triples["rnd"], "Mixed", "rnd_m1", "rnd_m2"),
            "D_topline": triple_json(duals["D_topline"], "Mixed", "D_s_top", "zeroB_r"),
            "D_bup": triple_json(duals["D_bup"], "Mixed", "zeroA_r", "D_s_B"),
            "D_rnd": triple_json(duals["D_rnd"], "Mixed", "D_rnd_m1", "D_rnd_m2"),
        },
        "fuzz_ring": "Mixed",
        "tasks": [
            {"command": "verify", "theorem": "3.4"},
            {"command": "verify", "theorem": "3.8"},
            {"command": "verify", "theorem": "4.4"},
            {"command": "verify", "theorem": "4.8"},
            {"command": "fuzz", "seed": 3, "count": 50, "max_dim": 3},
        ],
    }
    write("mixed_ring.json", doc)


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    make_dual_numbers()
    make_t_dual_numbers()
    make_t2_field()
    make_mixed()
