#!/usr/bin/env python3
"""Drive the CLI over every bundled instance file: validate, analyze,
each applicable law verifier, and a fuzz campaign per ring.  One line
per step; exit status 0 only if nothing failed.

Usage: python scripts/run_suite.py [--cutoff N] [--fuzz-count K]
"""

import argparse
import io
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from trihom.cli import cmd_analyze, cmd_fuzz, cmd_validate, cmd_verify
from trihom.dinghom import LAWS

ROOT = pathlib.Path(__file__).resolve().parents[1]
FILES = ["dual_numbers.json", "t_dual_numbers.json", "t2_field.json", "mixed_ring.json"]


def run(label, fn, *args, **kwargs):
    out, err = io.StringIO(), io.StringIO()
    code = fn(*args, out=out, err=err, **kwargs)
    lines = out.getvalue().splitlines()
    verdicts = {}
    for line in lines:
        v = json.loads(line).get("verdict", "?")
        verdicts[v] = verdicts.get(v, 0) + 1
    note = err.getvalue().strip().splitlines()
    print(f"{'ok ' if code == 0 else 'EXIT ' + str(code):>7} {label:<46} {verdicts or ''} {note[0] if note else ''}")
    return code


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cutoff", type=int, default=16)
    ap.add_argument("--fuzz-count", type=int, default=50)
    args = ap.parse_args()

    worst = 0
    for name in FILES:
        path = str(ROOT / "instances" / name)
        worst = max(worst, run(f"validate {name}", cmd_validate, path))
        worst = max(worst, run(f"analyze {name}", cmd_analyze, path, cutoff=args.cutoff))
        for law in sorted(LAWS):
            out, err = io.StringIO(), io.StringIO()
            code = cmd_verify(path, theorem=law, cutoff=args.cutoff, out=out, err=err)
            if code == 4:
                continue  # file supplies no objects for this law
            verdicts = {}
            for line in out.getvalue().splitlines():
                v = json.loads(line)["verdict"]
                verdicts[v] = verdicts.get(v, 0) + 1
            print(f"{'ok ' if code == 0 else 'EXIT ' + str(code):>7} verify {law} {name:<36} {verdicts}")
            worst = max(worst, code if code != 5 else 0)
        try:
            worst = max(worst, run(f"fuzz {name} (seed 1)", cmd_fuzz, path,
                                   seed=1, count=args.fuzz_count, cutoff=args.cutoff))
        except SystemExit:
            pass
    print("suite:", "OK" if worst == 0 else f"worst exit {worst}")
    return 1 if worst else 0


if __name__ == "__main__":
    raise SystemExit(main())
