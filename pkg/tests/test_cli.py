import json

import pytest

from hallwc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_quiver_dt_vect(capsys):
    code, rec = run(capsys, "quiver-dt", "--quiver", "vect", "--dim", "2")
    assert code == 0
    assert list(rec) == ["alpha", "delta", "epsilon", "dt", "regular_at_one"]
    assert rec["dt"] == "-1/4"


def test_quiver_dt_a2(capsys):
    assert run(capsys, "quiver-dt", "--quiver", "A2", "--theta", "1,0", "--dim", "1,1")[1]["dt"] == "1"


def test_input_error(capsys):
    code, rec = run(capsys, "quiver-dt", "--quiver", "vect", "--dim", "1,1")
    assert code == 2 and rec["error"] == "DimMismatch"


def test_vect_residue_weyl(capsys):
    assert run(capsys, "vect", "--op", "epsilon", "--n", "2", "--char", "s[1,-1]")[1]["value"] == "0"
    assert run(capsys, "residue", "--f", "1/(1-u)")[1]["residue"] == "-1"
    assert run(capsys, "weyl", "--n", "3", "--lambda", "0,0,0")[1]["constant_term"] == "6"


def test_hn_and_wallcross(capsys):
    assert run(capsys, "hn-check", "--quiver", "kronecker2", "--dim", "1,2", "--jobs", "2")[1]["equal"]
    rec = run(capsys, "wallcross-check", "--quiver", "A2", "--dim", "1,1", "--wall-theta", "1,1", "--side-theta", "1,0")[1]
    assert rec["equal"]


def test_coeffs(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"hops": [{"wall": {"theta": [0, 0]}, "side": {"theta": [1, 0]}}], "bound": [1, 1]}))
    rec = run(capsys, "coeffs", "--path", str(path))[1]
    ut = {json.dumps(r["tuple"]): r["value"] for r in rec["Utilde"]}
    assert ut["[[1, 0], [0, 1]]"] == "1/2"


def test_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p, jobs in ((a, "1"), (b, "3")):
        main(["--output", str(p), "--jobs", jobs, "hn-check", "--quiver", "A2", "--dim", "2,1"])
    assert a.read_bytes() == b.read_bytes()


def test_parse_expansion(capsys):
    rec = run(capsys, "parse", "--expr", "1/(1-u)", "--expand-at", "one", "--max-order", "2")[1]
    assert rec["expansion"]["coeffs"] == {"-1": "1"}
