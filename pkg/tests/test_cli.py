import csv
import io
import json

import pytest

from conftest import SEEDS
from rieszsep.cli import RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dissociate_commands(capsys):
    code, out, _ = run(capsys, "dissociate", "--master", "lacunary base=3 count=7", "--L", "7")
    assert code == 0 and json.loads(out)["verified"]
    code, out, _ = run(capsys, "dissociate", "--master", "1,2,3", "--L", "2")
    assert code == 2
    ce = json.loads(out)["counterexample"]
    assert ce["element"] == 3 and ce["second"] == [[0, 1], [1, 1]]
    code, _, err = run(capsys, "dissociate", "--group", "Zq")
    assert code == 1 and "error" in err


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "witness", "--seeds", f"{SEEDS[0]};{SEEDS[0]}")[0] == 1
    assert run(capsys, "witness", "--seeds", ";".join(SEEDS), "--r", "0.8")[0] == 1
    assert run(capsys, "profile", "--master", "rademacher count=30", "--k-range", "1..25")[0] == 1
    assert run(capsys, "dissociate", "--master", "lacunary base=3 count=4", "--group", "sumZ2")[0] == 1


def test_profile_csv(capsys):
    code, out, _ = run(capsys, "profile", "--master", "rademacher count=24", "--k-range", "1..12", "--n", "1", "--m", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 12
    assert list(rows[0]) == ["k", "n", "m", "tv_distance", "ip_partial"]
    tv = [float(r["tv_distance"]) for r in rows]
    assert tv == sorted(tv)
    code, out, _ = run(capsys, "profile", "--master", "rademacher count=24", "--k-range", "1..6", "--coeff", "0")
    assert all(float(r["tv_distance"]) == 0 for r in csv.DictReader(io.StringIO(out)))


def test_witness_and_determinism(capsys, tmp_path):
    args = ["witness", "--master", "lacunary base=3 count=40", "--L", "4", "--seeds", ";".join(SEEDS)]
    code, first, _ = run(capsys, *args)
    assert code == 0
    reports = json.loads(first)
    assert len(reports) == 10 and all(r["conclusion"] == "certified" for r in reports)
    code, second, _ = run(capsys, *args, "--jobs", "2")
    assert first == second


def test_witness_gate_failure(capsys):
    code, out, _ = run(capsys, "witness", "--master", ",".join(str(i) for i in range(1, 41)), "--L", "3", "--seeds", f"{SEEDS[0]};{SEEDS[1]}")
    assert code == 2
    assert json.loads(out)[0]["conclusion"].startswith("failed(")


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"master": "lacunary base=3 count=5", "L": 5}))
    code, out, _ = run(capsys, "dissociate", "--config", str(cfg))
    assert code == 0 and json.loads(out)["L"] == 5
    code, out, _ = run(capsys, "dissociate", "--config", str(cfg), "--L", "2")
    assert json.loads(out)["L"] == 2
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "words", "--config", str(cfg), "--L", "1", "--out", str(target))
    assert code == 0 and out == ""
    assert len(json.loads(target.read_text())) == 11
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "blue"}))
    assert run(capsys, "dissociate", "--config", str(bad))[0] == 1


def test_config_round_trip():
    cfg = RunConfig.from_dict({"master": "rademacher count=8", "seeds": SEEDS[:2], "L": 3})
    assert RunConfig.from_dict(cfg.to_dict()) == cfg


@pytest.mark.parametrize("cmd", ["family", "convolve", "coeffs", "gap"])
def test_other_commands(capsys, cmd):
    code, out, _ = run(capsys, cmd, "--master", "lacunary base=3 count=12", "--L", "2", "--seeds", ";".join(SEEDS[:2]))
    assert code == 0
    data = json.loads(out)
    if cmd == "gap":
        assert data["naturalness_gap"] == pytest.approx(1.0, abs=1e-2)
        assert data["real_range"] and data["includes_zero"]
    if cmd == "convolve":
        # the first two seeds share two letters: 1 + 4 + 4 words
        assert data["support_size"] == 9
    if cmd == "family":
        assert data[0]["codes"] == [1, 4, 10]


def test_coeffs_invalid_constant(capsys):
    code, out, _ = run(capsys, "coeffs", "--master", "lacunary base=3 count=4", "--coeff", "0.7")
    assert code == 2 and json.loads(out)["violations"]
