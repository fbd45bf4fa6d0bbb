"""``bfwalsh`` command line: reproduce the worked examples, analyze one
parameter set, or sweep a parameter space.

Exit codes: 0 success / prediction matched, 1 mismatch, 2 usage or
configuration error (including resource caps).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources

from . import constructions as C
from .boolfun import cubic_symmetric_sum
from .constructions.kasami import thm1_conditions_unscaled
from .errors import BfwalshError
from .gf2n import Field, field_new, load_field
from .sweep import CONSTRUCTIONS, RunConfig, evaluate, run_sweep, sweep_ok
from .walsh import classify, fwht

EXAMPLE_IDS = (1, 2, 3, 4, 5)


class ConfigError(Exception):
    pass


# --- output ----------------------------------------------------------------

def _dist_str(d) -> str:
    if d is None:
        return ""
    items = sorted(((int(k), v) for k, v in d.items()), reverse=True)
    return ";".join(f"{k}:{v}" for k, v in items)


def _conds_str(c) -> str:
    return "" if c is None else "".join(str(t) for t in c)


def _report_rows(reports: list[dict]) -> list[list]:
    rows = [["construction", "params", "conditions", "predicted_class", "predicted_distribution",
             "measured_class", "measured_distribution", "degree", "match"]]
    for r in reports:
        rows.append([
            r["construction"],
            json.dumps(r["params"], sort_keys=True),
            _conds_str(r["conditions"]),
            r["predicted"]["class"],
            _dist_str(r["predicted"]["distribution"]),
            r["measured"]["class"],
            _dist_str(r["measured"]["distribution"]),
            r["degree"],
            int(r["match"]),
        ])
    return rows


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- reproduce ---------------------------------------------------------------

def load_golden(example_id: int) -> dict:
    text = resources.files("bfwalsh").joinpath("golden", f"example{example_id}.json").read_text()
    return json.loads(text)


def _parse_params(field: Field, raw: dict) -> dict:
    p = {}
    for key, val in raw.items():
        if key in ("k", "s", "pi_power"):
            p[key] = int(val)
        elif isinstance(val, list):
            p[key] = tuple(field.parse(x) for x in val)
        else:
            p[key] = field.parse(val)
    return p


def _measure_case(field: Field, case: dict) -> dict:
    name = case["construction"]
    p = _parse_params(field, case["params"])
    report = evaluate(name, field, p).to_dict()
    measured = {
        "conditions": report["conditions"],
        "class": report["measured"]["class"],
        "distribution": report["measured"]["distribution"],
        "degree": report["degree"],
    }
    want = case["expected"]
    if "symmetric_sum" in want:
        measured["symmetric_sum"] = field.format(cubic_symmetric_sum(field, p["u"], p["v"], p["r"], 0, 1, 2))
    if "conditions_without_lambda_inverse" in want:
        measured["conditions_without_lambda_inverse"] = list(
            thm1_conditions_unscaled(field, p["u"], p["v"], p["r"]))
    if "condition_weight" in want:
        measured["condition_weight"] = sum(report["conditions"])
    if "condition_table" in want:
        conds = tuple(report["conditions"])
        measured["condition_table"] = ("A" if conds in C.TABLE_A_PATTERNS
                                       else "B" if conds in C.TABLE_B_PATTERNS else None)
    if "lambda_valid" in want:
        measured["lambda_valid"] = C.gold_lambda_valid(field, p["k"], p["lambda"])
    if "niho_exponents" in want:
        measured["niho_exponents"] = C.niho_exponents(field.n // 2, p["k"])
    if "printed_sum_form_class" in want:
        g = C.niho_sum_form(field, p["k"], p["u"], p["v"], p["r"])
        measured["printed_sum_form_class"] = str(classify(fwht(g)))
    if "d" in want:
        measured["d"] = C.thm8_d(field.n, p["s"])
    return {"label": case["label"], "report": report, "measured": measured}


def reproduce(example_id: int) -> tuple[dict, list[str]]:
    """Rebuild one example; returns (output document, diff lines)."""
    golden = load_golden(example_id)
    fc = golden["field"]
    field = field_new(fc["n"], int(fc["poly_hex"], 16))
    cases, diffs = [], []
    for case in golden["cases"]:
        got = _measure_case(field, case)
        for key, want in case["expected"].items():
            have = got["measured"].get(key)
            if have != want:
                diffs.append(f"{case['label']}.{key}: expected {want!r}, measured {have!r}")
        got["expected"] = case["expected"]
        cases.append(got)
    doc = {"example": example_id, "title": golden["title"], "field": field.to_config(),
           "seed": 0, "cases": cases, "ok": not diffs}
    return doc, diffs


def cmd_reproduce(args) -> int:
    doc, diffs = reproduce(args.example_id)
    if args.format == "csv":
        rows = [["label"] + _report_rows([])[0]]
        for c in doc["cases"]:
            rows.append([c["label"]] + _report_rows([c["report"]])[1])
        text = _csv(rows)
    else:
        text = _json(doc)
    _emit(text, args.out)
    for c in doc["cases"]:
        m = c["measured"]
        print(f"example {args.example_id} {c['label']}: {m['class']} degree={m['degree']} "
              f"distribution={_dist_str(m['distribution'])}", file=sys.stderr)
    if diffs:
        print("MISMATCH", file=sys.stderr)
        for d in diffs:
            print("  " + d, file=sys.stderr)
        return 1
    return 0


# --- analyze / sweep -----------------------------------------------------------

def _resolve_field(args) -> Field:
    if args.field:
        return load_field(args.field)
    name = args.construction
    if name.startswith("mm-") and args.m:
        return load_field(str(args.m))
    if name.startswith("gold") and args.k:
        return load_field(str(4 * args.k))
    if args.m:
        return load_field(str(2 * args.m))
    raise ConfigError("--field (or --m / --k) is required")


def _elem(field: Field, s):
    return None if s is None else field.parse(s)


def _pair(field: Field, a, b, name):
    if a is None and b is None:
        return None
    if a is None or b is None:
        raise ConfigError(f"--{name}1 and --{name}2 must be given together")
    return field.parse(a), field.parse(b)


def build_config(args) -> RunConfig:
    field = _resolve_field(args)
    cfg = RunConfig(
        construction=args.construction,
        field=field,
        lam=_elem(field, args.lam),
        k=args.k,
        s=args.s,
        pi_power=args.pi_power,
        sweep=getattr(args, "sweep", None),
        seed=args.seed,
        jobs=getattr(args, "jobs", None),
    )
    if args.construction.startswith("mm-"):
        cfg.elements = {n: _pair(field, getattr(args, n + "1"), getattr(args, n + "2"), n)
                        for n in ("u", "v", "r")}
    else:
        cfg.elements = {n: _elem(field, getattr(args, n)) for n in ("u", "v", "r")}
    return cfg


def analyze_params(cfg: RunConfig) -> dict:
    from .sweep import config_params

    p = config_params(cfg)
    needed = ("u", "v", "r") if cfg.construction.endswith("triple") else ("u", "v")
    for n in needed:
        if cfg.elements.get(n) is None:
            raise ConfigError(f"--{n} is required for {cfg.construction}")
        p[n] = cfg.elements[n]
    if cfg.construction == "mm-niho-power" and cfg.s is None:
        raise ConfigError("--s is required for mm-niho-power")
    if cfg.construction == "niho-triple" and cfg.k is None:
        raise ConfigError("--k is required for niho-triple")
    return p


def cmd_analyze(args) -> int:
    cfg = build_config(args)
    report = evaluate(cfg.construction, cfg.field, analyze_params(cfg)).to_dict()
    report["seed"] = cfg.seed
    text = _csv(_report_rows([report])) if args.format == "csv" else _json(report)
    _emit(text, args.out)
    return 0 if report["match"] else 1


def _sweep_rows(res: dict) -> list[list]:
    rows = [["section", "key", "class", "count"]]
    for cls, cnt in res["by_class"].items():
        rows.append(["class", "", cls, cnt])
    for key, classes in res["by_conditions"].items():
        for cls, cnt in classes.items():
            rows.append(["conditions", key, cls, cnt])
    rows.append(["summary", "total", "", res["total"]])
    rows.append(["summary", "mismatches", "", res["mismatch_count"]])
    rows.append(["summary", "seed", "", res["seed"]])
    if "semibent_pairs" in res:
        for key in ("condition_count", "measured_semibent", "closed_form"):
            rows.append(["semibent_pairs", key, "", res["semibent_pairs"][key]])
    if "lemma2" in res:
        rows.append(["lemma2", "valid_lambdas", "", res["lemma2"]["valid_lambdas"]])
        rows.append(["lemma2", "all_permutations", "", int(res["lemma2"]["all_permutations"])])
    return rows


def cmd_sweep(args) -> int:
    cfg = build_config(args)
    res = run_sweep(cfg)
    text = _csv(_sweep_rows(res)) if args.format == "csv" else _json(res)
    _emit(text, args.out)
    return 0 if sweep_ok(res) else 1


# --- parser ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)


def _construction_flags(p: argparse.ArgumentParser):
    p.add_argument("--field", help="builtin degree (e.g. 8, gf2^8) or JSON field file")
    p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--lambda", dest="lam", metavar="ELEM")
    for name in ("u", "v", "r"):
        p.add_argument(f"--{name}", metavar="ELEM")
        p.add_argument(f"--{name}1", metavar="ELEM")
        p.add_argument(f"--{name}2", metavar="ELEM")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--pi-power", type=int, default=0, help="pi(y) = y^(2^j) for the linearized MM constructions")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bfwalsh", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("reproduce-example", help="rebuild a worked example and compare with golden values")
    rp.add_argument("example_id", type=int, choices=EXAMPLE_IDS)
    _common(rp)
    rp.set_defaults(func=cmd_reproduce)

    an = sub.add_parser("analyze", help="build one function and compare prediction with its spectrum")
    _construction_flags(an)
    _common(an)
    an.set_defaults(func=cmd_analyze)

    sw = sub.add_parser("sweep", help="tally predictions over a parameter space")
    _construction_flags(sw)
    _common(sw)
    sw.add_argument("--sweep", default="exhaustive", help="exhaustive | random:N")
    sw.add_argument("--jobs", type=int, help="worker processes (default: CPU count)")
    sw.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BfwalshError, ConfigError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
