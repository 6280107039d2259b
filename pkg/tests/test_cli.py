import json

import pytest

from sidh_torsion.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_sidh_demo(capsys):
    rc, out = run(capsys, "sidh", "demo", "--p", "59", "--A", "3", "--B", "5", "--f", "4", "--seed", "1")
    d = json.loads(out)
    assert rc == 0 and d["match"] is True and d["schema"] == "sidh-torsion/1"
    assert d["j_A"] == d["j_B"]


def test_estimate_sike_point(capsys):
    rc, out = run(capsys, "estimate", "--alpha", "0.5", "--beta", "0.5", "--model", "quantum")
    assert rc == 0 and json.loads(out)["results"]["quantum"]["C"] == "1/2"


def test_attack_roundtrip_files(capsys, tmp_path):
    inst_file, key_file = tmp_path / "inst.json", tmp_path / "key.json"
    assert main(["sidh", "keygen", "--p", "3119", "--A", "16", "--B", "65", "--seed", "0",
                 "--key-seed", "9", "--out", str(key_file)]) == 0
    inst_file.write_text(key_file.read_text())
    rc, out = run(capsys, "attack", "run", "--instance", str(inst_file), "--pubkey", str(key_file),
                  "--cross-check")
    d = json.loads(out)
    planted = json.loads(key_file.read_text())["secret"]
    assert rc == 0 and d["secret"] == planted == d["brute_force"]


def test_deterministic_output(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for f in (a, b):
        assert main(["estimate", "figure", "--id", "1", "--step", "1/4", "--out", str(f)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_normeq_and_forge(capsys):
    rc, out = run(capsys, "normeq", "solve", "--p", "3119", "--A-prime", "16", "--B", "65")
    assert rc == 0 and json.loads(out)["solution"]["d"] == "63"
    rc, out = run(capsys, "forge", "triple", "--w", "2+1i")
    assert rc == 0 and json.loads(out)["result"]["p"] == "59"
    rc, out = run(capsys, "forge", "order", "--p", "59", "--A", "3", "--B", "25")
    assert rc == 0 and json.loads(out)["discriminant"] == "59"


def test_error_codes(capsys):
    rc, out = run(capsys, "bogus")
    assert rc == 1 and json.loads(out)["error"] == "usage"
    rc, _ = run(capsys, "sidh", "demo", "--p", "59", "--A", "3", "--B", "5")
    assert rc == 1
    rc, out = run(capsys, "forge", "prime", "--A", "2", "--B", "5")
    assert rc == 2 and json.loads(out)["error"] == "Obstruction"
    rc, out = run(capsys, "sidh", "demo", "--p", "61", "--A", "3", "--B", "5", "--seed", "0")
    assert rc == 2 and json.loads(out)["error"] == "InvalidInstance"


def test_verify_paper_reports(capsys):
    rc, out = run(capsys, "verify-paper")
    d = json.loads(out)
    assert rc == 0
    names = {c["name"] for c in d["checks"]}
    assert {"digits_c53", "digits_c355", "rational_solution"} <= names
