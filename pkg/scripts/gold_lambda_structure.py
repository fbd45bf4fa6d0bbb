"""Where do the lambdas with lambda + lambda^(2^(3k)) = 1 live?

Applying x -> x^(2^(3k)) twice gives lambda^(2^(6k)) = lambda, and 6k = 2k mod 4k,
so every valid lambda lies in GF(2^(2k)).  This script confirms it for k = 2, 3, 4
and checks that l(x) = lambda x + lambda^(2^k) x^(2^(2k)) is a permutation each time.
"""
from bfwalsh.constructions import gold_valid_lambdas, lemma2_is_permutation
from bfwalsh.gf2n import builtin_field

for k in (2, 3, 4):
    f = builtin_field(4 * k)
    lams = [int(x) for x in gold_valid_lambdas(f, k)]
    inside = sum(bool(f.in_subfield(2 * k, l)) for l in lams)
    perms = all(lemma2_is_permutation(f, k, l) for l in lams) if k < 4 else "skipped"
    print(f"k={k}: {len(lams)} valid lambdas, {inside} inside GF(2^{2 * k}), all permutations: {perms}")
