from __future__ import annotations

import json
import subprocess
import sys

import pytest

from oddhom.cli import main
from oddhom.graph import complete, cycle, parse_graph6, write_edgelist, write_graph6
from oddhom.iso import is_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c5(tmp_path):
    p = tmp_path / "c5.g6"
    p.write_text(write_graph6(cycle(5)) + "\n")
    return str(p)


def test_construct_odd_lift_of_pentagon(capsys, c5):
    code, out, _ = run(capsys, "construct", "gu", "--g", c5, "--u", "0")
    assert code == 0
    assert is_isomorphic(parse_graph6(out.strip()), cycle(10))


def test_construct_writes_files(capsys, tmp_path):
    base = str(tmp_path / "lift")
    assert run(capsys, "construct", "tilde", "--g", "gen:complete:2", "--out", base)[0] == 0
    obj = json.loads((tmp_path / "lift.json").read_text())
    assert obj["loops"] == [0, 1] and obj["edges"] == [[0, 1]]


def test_star_simple_has_isolated_vertex(capsys):
    code, out, _ = run(capsys, "construct", "star-simple", "--d", "3", "--i", "1")
    H = parse_graph6(out.strip())
    assert code == 0 and min(H.degrees()) == 0


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "hom", str(tmp_path / "absent.g6"), "gen:cycle:3")
    assert code == 2 and "cannot read" in err


def test_corrupted_graph_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("B\x7f\n")
    assert run(capsys, "hom", str(p), "gen:cycle:3")[0] == 2
    assert run(capsys, "hom", "gen:cycle:2", "gen:cycle:3")[0] == 2


def test_guard_exits_3(capsys):
    assert run(capsys, "enumerate", "--nmax", "9")[0] == 3


def test_hom_and_homvec(capsys, tmp_path):
    p = tmp_path / "k3.txt"
    p.write_text(write_edgelist(complete(3)))
    assert run(capsys, "hom", "gen:complete:2", str(p))[1].strip() == "6"
    code, out, _ = run(capsys, "homvec", "gen:complete:3", "--max-cycle", "5")
    assert json.loads(out) == [6, 18, 30]


def test_certificate_roundtrip(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    assert run(capsys, "oddo", "find", "gen:cycle:7", "gen:cycle:3", "--weak", "--out", str(cert))[0] == 0
    code, out, _ = run(capsys, "oddo", "verify", str(cert))
    assert (code, out.strip()) == (0, "pass")
    code, out, _ = run(capsys, "cycles", "extract", "gen:cycle:7", str(cert))
    assert json.loads(out)["length"] == 7
    obj = json.loads(cert.read_text())
    obj["odd_set"] = obj["odd_set"][1:]
    cert.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "oddo", "verify", str(cert))
    assert code == 1 and out.startswith("fail: ")


def test_find_reports_none(capsys):
    assert run(capsys, "oddo", "find", "gen:cycle:4", "gen:cycle:3")[1].strip() == "none"
    code, out, _ = run(capsys, "oddo", "find", "gen:star:3", "gen:star:3", "--oddism")
    assert code == 0 and json.loads(out)["kind"] == "weak-oddism"


def test_families_commands(capsys, tmp_path):
    out_path = tmp_path / "probe.json"
    code, _, _ = run(capsys, "families", "probe", "--g", "gen:star:3", "--pred", "maxdeg:3", "--nmax", "5", "--out", str(out_path))
    rep = json.loads(out_path.read_text())
    assert code == 0 and rep["passed"] and rep["family"]["bound"] == 5
    code, out, _ = run(capsys, "families", "compare", "--h", "gen:path:4", "--h2", "gen:complete:3", "--pred", "all", "--nmax", "3")
    assert json.loads(out)["verdict"] == "distinguished"
    assert "forests" in run(capsys, "families", "list")[1]


def test_enumerate_and_structure(capsys):
    code, out, _ = run(capsys, "enumerate", "--nmax", "4", "--nmin", "4")
    assert code == 0 and len(out.split()) == 6
    code, out, _ = run(capsys, "structure", "gen:cycle:7")
    assert json.loads(out)["circumference"] == 7


def test_verify_suites_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "zero-iso", "--nmax", "5")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "main-dual", "--gmax", "3", "--fmax", "4")
    assert code == 0
    assert run(capsys, "verify", "gf2", "--count", "0")[0] == 2


def test_same_seed_same_bytes(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        assert main(["verify", "winding", "--seed", "7", "--count", "10", "--out", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["seed"] == 7


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "oddhom", "hom", "gen:cycle:5", "gen:cycle:3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "30"
