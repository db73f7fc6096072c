import json
import subprocess
import sys

import pytest

from pinwheel_lattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_disjoinable(capsys):
    code, doc = run(capsys, "pinwheel", "disjoinable", "--manifold", "X3", "--periods", "3,1,1,1")
    assert code == 0 and doc["result"] is False


def test_l31_lambda(capsys):
    assert run(capsys, "pinwheel", "l31", "--lambda", "1")[1]["result"] is True
    assert run(capsys, "pinwheel", "l31", "--a", "2", "--b", "1")[1]["result"] is False
    code, doc = run(capsys, "pinwheel", "l31-witness", "--lambda", "1/2")
    assert code == 0 and doc["feasible"] is False
    code, doc = run(capsys, "pinwheel", "l31-solve", "--a", "1", "--b", "1", "--eps1", "1/100", "--eps2", "1/100")
    assert doc["result"]["values"] == ["2", "409/300", "41/150", "41/150"]


def test_cone_check_boundary(capsys):
    code, doc = run(capsys, "cone", "check", "--manifold", "X3", "--periods", "2,1,1,1")
    assert code == 0 and doc["inside"] is False
    assert "H-E1-E2" in [v["label"] for v in doc["violated"]]
    code, doc = run(capsys, "cone", "kahler-x5", "--alpha", "4", "--beta", "1", "--mu-tilde", "1/2,1/10,1/10,1/10")
    assert [v["constraint"] for v in doc["violated"]] == ["alpha - 4*beta > 0"]
    assert run(capsys, "cone", "monotone", "--manifold", "S2xS2", "--periods", "1,1")[1]["result"] is True


def test_enumerate(capsys, tmp_path):
    code, doc = run(capsys, "enumerate", "exceptional", "--k", "3", "--cache-dir", str(tmp_path))
    assert code == 0 and len(doc["result"]) == 6
    again = run(capsys, "enumerate", "exceptional", "--k", "3", "--cache-dir", str(tmp_path))[1]
    fresh = run(capsys, "enumerate", "exceptional", "--k", "3", "--no-cache")[1]
    assert doc == again == fresh
    assert len(run(capsys, "enumerate", "spheres", "--k", "3", "--square", "-5")[1]["result"]) == 3
    assert run(capsys, "enumerate", "audin", "--k", "3")[1]["result"] == ["H", "E1+E2+E3"]
    assert run(capsys, "enumerate", "pairs", "--k", "3")[1]["result"] == [["H", "E1+E2+E3"]]
    doc = run(capsys, "enumerate", "invariants", "--k", "1", "--square", "-1", "--c1", "1")[1]
    assert doc["result"] == ["E1"]


def test_canonicalize_and_transport(capsys):
    doc = run(capsys, "canonicalize", "--class", "E1", "--same-as", "H-E2-E3")[1]
    assert doc["same_orbit"] is True
    doc = run(capsys, "canonicalize", "--class", "E1+E2+E3", "--mod", "2", "--same-as", "H")[1]
    assert doc["same_orbit"] is True
    doc = run(capsys, "transport", "blowup", "--mu", "1,1,1", "--eps", "1/4")[1]
    assert doc["result"] == ["7/4", "1/4", "1/4", "1/4"]
    doc = run(capsys, "transport", "complement", "--class", "2E1")[1]
    assert doc["result"] == "E1-E2+E3+E4"
    doc = run(capsys, "pinwheel", "blowup-target", "--manifold", "S2xS2", "--pinwheels", "L(3,1)")[1]
    assert doc["result"] == "X3"
    doc = run(capsys, "pinwheel", "delpezzo", "--k", "5")[1]
    assert doc["result"] is True and doc["mode"] == "recorded"


@pytest.mark.parametrize("argv", [
    ["cone", "check", "--manifold", "X3", "--periods", "1.5,1,1,1"],
    ["cone", "check", "--manifold", "X3", "--periods", "3,1,1"],
    ["cone", "check", "--manifold", "X99", "--periods", "1"],
    ["pinwheel", "disjoinable", "--periods", "2,1,1,1"],
    ["pinwheel", "disjoinable", "--periods", "10,1,2,3"],
    ["pinwheel", "delpezzo", "--k", "7"],
    ["enumerate", "exceptional", "--k", "9"],
    ["transport", "blowup", "--mu", "1,1,1", "--eps", "1/2"],
    ["canonicalize", "--class", "E1", "--mod", "5"],
    ["replicate", "--only", "nope"],
    ["nonsense"],
    [],
])
def test_input_errors_exit_2_with_json(capsys, argv):
    code, doc = run(capsys, *argv)
    assert code == 2
    assert set(doc["error"]) == {"type", "message"}


def test_replicate_io_error(capsys, tmp_path):
    code, doc = run(capsys, "replicate", "--only", "l31", "--out", str(tmp_path / "missing" / "r.json"))
    assert code == 2 and "error" in doc


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "pinwheel_lattice", "pinwheel", "l31", "--lambda", "2"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0 and json.loads(out.stdout)["result"] is False
