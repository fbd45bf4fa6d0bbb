"""Seeded random differential sweep over every construction; prints tallies.

usage: python3 scripts/differential_sweep.py [samples] [seed]
"""
import sys

from bfwalsh.gf2n import builtin_field
from bfwalsh.sweep import RunConfig, run_sweep, sweep_ok

RUNS = [
    ("kasami-triple", 8, {}),
    ("kasami-double", 8, {}),
    ("gold-triple", 8, {"k": 2}),
    ("gold-double", 8, {"k": 2}),
    ("niho-triple", 8, {"k": 3}),
    ("mm-linearized-triple", 4, {"pi_power": 1}),
    ("mm-linearized-double", 4, {"pi_power": 2}),
    ("mm-niho-power", 5, {"s": 5}),
]


def main(samples=200, seed=0):
    bad = 0
    for name, n, kw in RUNS:
        res = run_sweep(RunConfig(name, builtin_field(n), sweep=f"random:{samples}", seed=seed, **kw))
        bad += not sweep_ok(res)
        print(f"{name:22s} n={n:2d} total={res['total']:4d} mismatches={res['mismatch_count']} "
              f"classes={res['by_class']}")
    return 1 if bad else 0


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:]]
    sys.exit(main(*args))
