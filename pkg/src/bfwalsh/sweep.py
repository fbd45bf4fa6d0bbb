"""Construction registry and the parameter-sweep harness.

``evaluate`` turns one parameter set into a ConstructionReport; ``run_sweep``
enumerates parameter sets (exhaustively or by seeded sampling), evaluates them
over a worker pool and aggregates the results.  Aggregation only depends on
the set of results, never on completion order.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import constructions as C
from .errors import BfwalshError, TooLargeError
from .gf2n import Field, field_new
from .walsh import Tag

CONSTRUCTIONS = (
    "kasami-triple",
    "kasami-double",
    "gold-triple",
    "gold-double",
    "niho-triple",
    "mm-linearized-triple",
    "mm-linearized-double",
    "mm-niho-power",
)

MAX_SWEEP_ITEMS = 250_000
DEFAULT_MAX_N = 20


def max_n() -> int:
    return int(os.environ.get("BFWALSH_MAX_N", DEFAULT_MAX_N))


def function_vars(construction: str, field: Field) -> int:
    return 2 * field.n if construction.startswith("mm-") else field.n


@dataclass
class RunConfig:
    construction: str
    field: Field
    lam: int | None = None
    k: int | None = None
    s: int | None = None
    pi_power: int = 0
    elements: dict = dc_field(default_factory=dict)
    sweep: str | None = None
    seed: int = 0
    jobs: int | None = None
    triples_per_lambda: int = 4

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise BfwalshError(f"unknown construction {self.construction!r}")
        nv = function_vars(self.construction, self.field)
        if nv > max_n():
            raise TooLargeError(f"{nv} variables exceeds BFWALSH_MAX_N={max_n()}")


def default_lambda(cfg: RunConfig) -> int:
    if cfg.lam is not None:
        return cfg.lam
    if cfg.construction.startswith("gold"):
        lams = C.gold_valid_lambdas(cfg.field, cfg.k or cfg.field.n // 4)
        if lams.size == 0:
            raise BfwalshError("no valid lambda")
        return int(lams[0])
    return 1


def evaluate(construction: str, field: Field, p: dict) -> C.ConstructionReport:
    """One report for a parameter dict (elements as ints, pairs as tuples)."""
    if construction == "kasami-triple":
        return C.thm1_construct_and_predict(field, p["lambda"], p["u"], p["v"], p["r"])
    if construction == "kasami-double":
        return C.thm2_construct_and_predict(field, p["lambda"], p["u"], p["v"])
    if construction == "gold-triple":
        return C.thm3_construct_and_predict(field, p["k"], p["lambda"], p["u"], p["v"], p["r"])
    if construction == "gold-double":
        return C.thm4_construct_and_predict(field, p["k"], p["lambda"], p["u"], p["v"])
    if construction == "niho-triple":
        return C.thm5_construct(field, p["k"], p["u"], p["v"], p["r"])
    if construction == "mm-linearized-triple":
        pi = C.frobenius_permutation(field, p.get("pi_power", 0))
        return C.thm6_construct(field, pi, p["u"], p["v"], p["r"])
    if construction == "mm-linearized-double":
        pi = C.frobenius_permutation(field, p.get("pi_power", 0))
        return C.thm7_construct(field, pi, p["u"], p["v"])
    if construction == "mm-niho-power":
        return C.thm8_construct(field, p["s"], p["u"], p["v"])
    raise BfwalshError(f"unknown construction {construction!r}")


def config_params(cfg: RunConfig) -> dict:
    """Fixed (non-swept) parameters of a run."""
    p = {}
    name = cfg.construction
    if name.startswith("kasami") or name.startswith("gold"):
        p["lambda"] = default_lambda(cfg)
    if name.startswith("gold"):
        p["k"] = cfg.k or cfg.field.n // 4
    if name == "niho-triple":
        p["k"] = cfg.k if cfg.k is not None else 1
    if name.startswith("mm-linearized"):
        p["pi_power"] = cfg.pi_power
    if name == "mm-niho-power":
        p["s"] = cfg.s if cfg.s is not None else 1
    return p


# --- parameter enumeration -------------------------------------------------

def _nonzero(field: Field) -> list[int]:
    return list(range(1, field.order))


def _pairs(field: Field, sub: int | None = None) -> list[tuple[int, int]]:
    els = field.subfield_elements(sub).tolist() if sub else list(range(field.order))
    return [(a, b) for b in els for a in els if (a, b) != (0, 0)]


def _legal_triple(u, v, r) -> bool:
    try:
        C.common.check_triple(u, v, r)
    except BfwalshError:
        return False
    return True


def _domain(cfg: RunConfig, base: dict):
    """(kind, pool) for the swept elements: kind is 'triple' or 'pair'."""
    f = cfg.field
    name = cfg.construction
    if name in ("kasami-triple", "gold-triple"):
        return "triple", _nonzero(f)
    if name in ("kasami-double", "gold-double"):
        return "pair", _nonzero(f)
    if name == "niho-triple":
        return "triple", f.subfield_elements(f.n // 2)[1:].tolist()
    if name == "mm-linearized-triple":
        return "triple", _pairs(f)
    if name == "mm-linearized-double":
        return "pair", _pairs(f)
    if name == "mm-niho-power":
        s = base["s"]
        pool = _pairs(f, s)
        return "pair", pool
    raise BfwalshError(name)


def _cross_ok(field: Field, u, v) -> bool:
    return (field.mul(u[0], v[1]) ^ field.mul(v[0], u[1])) == 0


def enumerate_params(cfg: RunConfig) -> list[dict]:
    mode = cfg.sweep or "exhaustive"
    base = config_params(cfg)
    kind, pool = _domain(cfg, base)
    rng = np.random.default_rng(cfg.seed)
    f = cfg.field

    def accept(t):
        if kind == "triple":
            return _legal_triple(*t)
        u, v = t
        if u == v:
            return False
        if cfg.construction == "mm-niho-power":
            return _cross_ok(f, u, v)
        return True

    if cfg.construction == "gold-triple" and mode == "exhaustive":
        # lambda scan: every valid lambda with a few seeded triples each
        out = []
        for lam in C.gold_valid_lambdas(f, base["k"]).tolist():
            for t in _sample(pool, 3, cfg.triples_per_lambda, rng, accept):
                out.append({**base, "lambda": lam, "u": t[0], "v": t[1], "r": t[2]})
        return out

    size = len(pool)
    if mode == "exhaustive":
        if kind == "triple":
            total = size * (size - 1) * (size - 2) // 6
            it = itertools.combinations(pool, 3)
        else:
            total = size * size
            it = itertools.product(pool, repeat=2)
        if total > MAX_SWEEP_ITEMS:
            raise TooLargeError(f"exhaustive sweep of {total} items exceeds cap {MAX_SWEEP_ITEMS}")
        ts = [t for t in it if accept(t)]
    elif mode.startswith("random:"):
        count = int(mode.split(":", 1)[1])
        if count > MAX_SWEEP_ITEMS:
            raise TooLargeError(f"{count} samples exceeds cap {MAX_SWEEP_ITEMS}")
        ts = _sample(pool, 3 if kind == "triple" else 2, count, rng, accept)
    else:
        raise BfwalshError(f"bad sweep spec {mode!r}")
    names = ("u", "v", "r") if kind == "triple" else ("u", "v")
    return [{**base, **dict(zip(names, t))} for t in ts]


def _sample(pool, arity, count, rng, accept, max_tries=1000):
    out = []
    tries = 0
    while len(out) < count:
        t = tuple(pool[i] for i in rng.integers(0, len(pool), arity))
        tries += 1
        if accept(t):
            out.append(t)
        elif tries > max_tries * max(count, 1):
            raise BfwalshError("could not sample legal parameters")
    return out


# --- running ---------------------------------------------------------------

def _worker(args):
    construction, n, poly, p = args
    field = _field_cache(n, poly)
    r = evaluate(construction, field, p)
    return r.to_dict()


_FIELDS: dict = {}


def _field_cache(n, poly) -> Field:
    key = (n, poly)
    if key not in _FIELDS:
        _FIELDS[key] = field_new(n, poly)
    return _FIELDS[key]


def run_reports(cfg: RunConfig, params: list[dict]) -> list[dict]:
    _FIELDS[(cfg.field.n, cfg.field.poly)] = cfg.field
    tasks = [(cfg.construction, cfg.field.n, cfg.field.poly, p) for p in params]
    jobs = cfg.jobs or os.cpu_count() or 1
    if jobs <= 1 or len(tasks) < 64:
        return [_worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_worker, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))


def _key(conds) -> str:
    return "none" if conds is None else ",".join(str(c) for c in conds)


def aggregate(cfg: RunConfig, reports: list[dict]) -> dict:
    by_class = Counter(r["measured"]["class"] for r in reports)
    by_cond: dict[str, Counter] = {}
    for r in reports:
        by_cond.setdefault(_key(r["conditions"]), Counter())[r["measured"]["class"]] += 1
    mismatches = sorted(
        (r for r in reports if not r["match"]),
        key=lambda r: sorted(r["params"].items(), key=str),
    )
    out = {
        "construction": cfg.construction,
        "field": cfg.field.to_config(),
        "sweep": cfg.sweep or "exhaustive",
        "seed": cfg.seed,
        "total": len(reports),
        "matches": len(reports) - len(mismatches),
        "mismatch_count": len(mismatches),
        "mismatches": mismatches[:20],
        "by_class": dict(sorted(by_class.items())),
        "by_conditions": {k: dict(sorted(v.items())) for k, v in sorted(by_cond.items())},
    }
    return out


def semibent_pair_tally(cfg: RunConfig) -> dict:
    """All (u, v) in (F*)^2 for kasami-double: condition count vs measured semi-bent count.

    Diagonal pairs u = v never satisfy the condition (u^(2^m+1) lies in the
    subfield, whose absolute trace vanishes), so they are skipped.
    """
    f = cfg.field
    lam = default_lambda(cfg)
    nz = _nonzero(f)
    if len(nz) ** 2 > MAX_SWEEP_ITEMS:
        raise TooLargeError("semi-bent pair enumeration exceeds cap")
    params = [{"lambda": lam, "u": u, "v": v} for u in nz for v in nz if u != v]
    reports = run_reports(cfg, params)
    cond = sum(1 for r in reports if r["conditions"][0] == 1)
    semi = sum(1 for r in reports if r["measured"]["class"] == str(Tag.SEMI_BENT))
    return {
        "lambda": f.format(lam),
        "condition_count": cond,
        "measured_semibent": semi,
        "closed_form": C.semibent_pair_closed_form(f.n),
        "reports": reports,
    }


def lemma2_scan(cfg: RunConfig) -> dict:
    k = cfg.k or cfg.field.n // 4
    lams = C.gold_valid_lambdas(cfg.field, k).tolist()
    perms = {cfg.field.format(l): C.lemma2_is_permutation(cfg.field, k, l) for l in lams}
    return {"valid_lambdas": len(lams), "all_permutations": all(perms.values()),
            "failures": sorted(l for l, ok in perms.items() if not ok)}


def run_sweep(cfg: RunConfig) -> dict:
    if cfg.construction == "kasami-double" and (cfg.sweep or "exhaustive") == "exhaustive":
        tally = semibent_pair_tally(cfg)
        out = aggregate(cfg, tally.pop("reports"))
        out["semibent_pairs"] = tally
        return out
    params = enumerate_params(cfg)
    out = aggregate(cfg, run_reports(cfg, params))
    if cfg.construction == "gold-triple":
        out["lemma2"] = lemma2_scan(cfg)
    return out


def sweep_ok(result: dict) -> bool:
    ok = result["mismatch_count"] == 0
    if "semibent_pairs" in result:
        sp = result["semibent_pairs"]
        ok = ok and sp["condition_count"] == sp["closed_form"] == sp["measured_semibent"]
    if "lemma2" in result:
        ok = ok and result["lemma2"]["all_permutations"]
    return ok
