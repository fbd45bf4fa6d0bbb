"""Count (u, v) pairs giving semi-bent Kasami doubles and compare with 2^(n-1)(2^n-1).

usage: python3 scripts/semibent_pairs.py [n ...]   (default: 4 6 8)
"""
import sys
import time

from bfwalsh.constructions import semibent_pair_closed_form, semibent_pair_count
from bfwalsh.gf2n import builtin_field
from bfwalsh.sweep import RunConfig, run_sweep


def main(ns):
    for n in ns:
        f = builtin_field(n)
        t0 = time.perf_counter()
        counts = {f.format(int(l)): semibent_pair_count(f, int(l)) for l in f.subfield_elements(n // 2)[1:]}
        line = f"n={n}: closed form {semibent_pair_closed_form(n)}, per-lambda condition counts {set(counts.values())}"
        if n <= 6:
            res = run_sweep(RunConfig("kasami-double", f, lam=1))
            line += f", measured semi-bent (lambda=1) {res['semibent_pairs']['measured_semibent']}"
        print(f"{line}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [4, 6, 8])
