import csv
import io
import json

import pytest

from bfwalsh import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("example", [1, 2, 3, 4, 5])
def test_reproduce_examples(capsys, example):
    code, out, err = run(capsys, "reproduce-example", str(example))
    assert code == 0, err
    doc = json.loads(out)
    assert doc["ok"] and doc["example"] == example and "seed" in doc


def test_reproduce_example2_distribution(capsys):
    _, out, _ = run(capsys, "reproduce-example", "2")
    dist = json.loads(out)["cases"][0]["measured"]["distribution"]
    assert dist == {"32": 16, "16": 72, "0": 96, "-16": 56, "-32": 16}


def test_reproduce_example5_classes(capsys):
    _, out, _ = run(capsys, "reproduce-example", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["measured_class"] for r in rows] == ["Bent", "SemiBent"]


def test_reproduce_out_of_range(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["reproduce-example", "9"])
    assert exc.value.code == 2


def test_reproduce_mismatch_exits_1(capsys, monkeypatch):
    real = cli.load_golden

    def tampered(i):
        g = real(i)
        g["cases"][0]["expected"]["class"] = "SemiBent"
        return g

    monkeypatch.setattr(cli, "load_golden", tampered)
    code, _, err = run(capsys, "reproduce-example", "1")
    assert code == 1
    assert "expected 'SemiBent', measured 'Bent'" in err


EX1 = ["--field", "6", "--construction", "kasami-triple", "--lambda", "g^0"]


def test_analyze_example1_flags(capsys):
    code, out, _ = run(capsys, "analyze", *EX1, "--u", "g^1", "--v", "g^9", "--r", "g^27")
    assert code == 0
    rep = json.loads(out)
    assert rep["conditions"] == [0, 0, 0] and rep["degree"] == 3 and rep["seed"] == 0


@pytest.mark.parametrize("u,v,r,err", [
    ("0", "g^9", "g^27", "ZeroParameterError"),
    ("g^1", "g^2", "0x06", "InvalidTripleError"),
    ("g^1", "g^1", "g^5", "InvalidTripleError"),
])
def test_analyze_config_errors(capsys, u, v, r, err):
    code, _, msg = run(capsys, "analyze", *EX1, "--u", u, "--v", v, "--r", r)
    assert code == 2 and err in msg


def test_analyze_missing_element(capsys):
    code, _, msg = run(capsys, "analyze", *EX1, "--u", "g")
    assert code == 2 and "--v" in msg


def test_analyze_pairs_and_out(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, _, _ = run(capsys, "analyze", "--m", "9", "--construction", "mm-niho-power", "--s", "3",
                     "--u1", "g^146", "--u2", "g^73", "--v1", "g^73", "--v2", "1",
                     "--format", "csv", "--out", str(out))
    assert code == 0
    row = next(csv.DictReader(out.open()))
    assert row["measured_class"] == "SemiBent" and row["conditions"] == "1"
    assert row["measured_distribution"].split(";")[0] == "1024:32896"


def test_max_n_env(capsys, monkeypatch):
    monkeypatch.setenv("BFWALSH_MAX_N", "8")
    code, _, msg = run(capsys, "analyze", "--field", "10", "--construction", "kasami-double",
                       "--u", "g", "--v", "g^2")
    assert code == 2 and "TooLargeError" in msg


def test_sweep_semibent_pair_count(capsys):
    code, out, _ = run(capsys, "sweep", "--field", "6", "--construction", "kasami-double",
                       "--lambda", "1")
    assert code == 0
    res = json.loads(out)
    sp = res["semibent_pairs"]
    assert sp["condition_count"] == sp["measured_semibent"] == sp["closed_form"] == 2016
    assert res["by_class"] == {"Bent": 1890, "SemiBent": 2016}


def test_sweep_random_deterministic(capsys):
    args = ["sweep", "--field", "8", "--construction", "kasami-triple", "--lambda", "g^17",
            "--sweep", "random:120", "--seed", "11"]
    code, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--jobs", "2")
    assert code == 0 and a == b
    res = json.loads(a)
    assert res["seed"] == 11 and res["total"] == 120 and res["mismatch_count"] == 0


def test_sweep_gold_lambda_scan(capsys):
    code, out, _ = run(capsys, "sweep", "--field", "8", "--construction", "gold-triple", "--k", "2")
    assert code == 0
    lem = json.loads(out)["lemma2"]
    assert lem["all_permutations"] and lem["valid_lambdas"] == 4


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", "--field", "8", "--construction", "niho-triple", "--k", "3",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["section", "key", "class", "count"]
    assert ["class", "", "Bent", "420"] in rows


def test_sweep_resource_cap(capsys):
    code, _, msg = run(capsys, "sweep", "--field", "8", "--construction", "kasami-triple")
    assert code == 2 and "cap" in msg


def test_sweep_bad_spec(capsys):
    code, _, _ = run(capsys, "sweep", "--field", "6", "--construction", "kasami-triple",
                     "--sweep", "sometimes")
    assert code == 2


def test_sweep_mismatch_exits_1(capsys, monkeypatch):
    from bfwalsh import sweep
    real = sweep.evaluate

    def broken(name, field, p):
        rep = real(name, field, p)
        rep.predicted_class = "SemiBent"
        rep.__post_init__()
        return rep

    monkeypatch.setattr(sweep, "evaluate", broken)
    code, out, _ = run(capsys, "sweep", "--field", "6", "--construction", "kasami-triple",
                       "--sweep", "random:5", "--jobs", "1")
    assert code == 1 and json.loads(out)["mismatch_count"] > 0
