import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from clustercrystal.cli import main


def cli(*args):
    res = CliRunner().invoke(main, list(args))
    return res


def sh(*args):
    return subprocess.run([sys.executable, "-m", "clustercrystal", *args],
                          capture_output=True, text=True)


def test_minor():
    res = cli("minor", "C", "2", "--fund", "1", "--w", "1")
    assert res.exit_code == 0
    assert res.output.strip() == "a^{L1}*(Y[1,1] + Y[2,2]*Y[2,1]^-1)"
    data = json.loads(cli("minor", "C", "2", "--fund", "2", "--w", "1,2", "--json").output)
    assert data["j"] == 2 and len(data["terms"]) == 4


def test_seed_outputs():
    assert '"2" -> "3" [label="2"]' in cli("seed", "B", "2", "--dot").output
    data = json.loads(cli("seed", "D", "4", "--json").output)
    assert data["mutable"] == [5, 6, 7, 8]
    assert "diagram:" in cli("seed", "D", "4").output


def test_mutate_labels():
    # theorem mu_2 is engine index 4 in rank 2
    a = cli("mutate", "B", "2", "--seq", "2", "--json").output
    b = cli("mutate", "B", "2", "--seq", "4", "--engine-labels", "--json").output
    assert a == b
    assert json.loads(a)["vars"]["4"] == "a^{L1}*Y[2,2]"


def test_enumerate(tmp_path):
    out = tmp_path / "c3.json"
    assert cli("enumerate", "C", "3", "--json", "--out", str(out)).exit_code == 0
    data = json.loads(out.read_text())
    assert data["count"] == data["almost_positive_roots"] == 12
    again = cli("enumerate", "C", "3", "--json", "--threads", "2").output
    assert json.loads(again) == data


def test_crystal_and_demazure():
    res = cli("crystal", "C", "2", "--highest", "Y[1,1]")
    assert res.output.startswith("4 vertices, 3 edges")
    res = cli("demazure", "C", "2", "--highest", "Y[1,2]", "--word", "1,2")
    assert res.output.startswith("4 monomials")
    dot = cli("crystal", "B", "3", "--highest", "Y[1,1]", "--dot").output
    assert dot.count("->") == 6


def test_verify_pass():
    res = cli("verify", "C", "3", "--item", "C.iii")
    assert res.exit_code == 0 and "PASS" in res.output


def test_exit_codes():
    assert sh("verify", "B", "3").returncode == 0
    assert sh("verify", "B", "4", "--strict").returncode == 1
    assert sh("seed", "E", "6").returncode == 2
    assert sh("mutate", "B", "2", "--seq", "7").returncode == 2
    assert sh("demazure", "C", "2", "--highest", "Y[2,2]/Y[2,1]").returncode == 2
    assert sh("seed", "A", "3").returncode == 2
    assert sh("minor", "B", "2", "--fund", "1", "--w", "1,2").returncode == 0


def test_determinism():
    a = sh("enumerate", "D", "4", "--json").stdout
    b = sh("enumerate", "D", "4", "--json").stdout
    assert a == b and a
