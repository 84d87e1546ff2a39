import io
import json
from pathlib import Path

import pytest

from salvetti.cli import run

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "classify_a2xb2": ["classify", "A2xB2"],
    "enumerate_h3": ["enumerate", "H3"],
    "poincare_a9_subset": ["poincare", "A9", "--subset", "1,2,4,5,6,8"],
    "presentation_affine_a1": ["presentation", "~A1"],
    "cells_affine_a2": ["cells", "~A2"],
    "artin_a2": ["artin-homology", "A2"],
    "artin_a3_integer": ["artin-homology", "A3", "--coeff", "integer"],
    "artin_affine_a1_json": ["artin-homology", "~A1", "--format", "json"],
    "coxeter_a2": ["coxeter-homology", "A2", "--kmax", "5"],
    "coxeter_b2_csv": ["coxeter-homology", "B2", "--kmax", "4", "--format", "csv"],
    "export_face_poset_a2": ["export", "A2", "--what", "face-poset"],
}


def call(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name):
    code, out, err = call(CASES[name])
    assert code == 0, err
    assert out == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


def test_output_is_byte_identical_across_runs_and_threads(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert call(["export", "~A2", "--what", "artin-group-ring", "-o", str(a)])[0] == 0
    assert call(["export", "~A2", "--what", "artin-group-ring", "-o", str(b), "--threads", "4"])[0] == 0
    assert a.read_bytes() == b.read_bytes()
    c, d = tmp_path / "c.json", tmp_path / "d.json"
    call(["export", "B3", "--what", "coxeter-complex", "--kmax", "4", "-o", str(c)])
    call(["export", "B3", "--what", "coxeter-complex", "--kmax", "4", "-o", str(d), "--threads", "3"])
    assert c.read_bytes() == d.read_bytes()


def test_system_from_file(tmp_path):
    f = tmp_path / "sys.txt"
    f.write_text("rank 3\nm 1 2 = 3\nm 2 3 = inf\n")
    code, out, _ = call(["presentation", str(f), "--format", "json"])
    assert code == 0
    assert json.loads(out)["relations"] == [[[1, 2, 1], [2, 1, 2]], [[1, 3], [3, 1]]]


@pytest.mark.parametrize("argv", [
    ["classify", "Q7"],
    ["poincare", "A3", "--subset", "1,9"],
    ["artin-homology", "A2", "--coeff", "integer", "--q", "1/2"],
    ["coxeter-homology", "A5"],
    ["frobnicate", "A2"],
    ["export", "A2", "--format", "csv"],
])
def test_usage_errors_exit_one(argv):
    code, out, err = call(argv)
    assert code == 1 and out == ""


@pytest.mark.parametrize("argv", [
    ["enumerate", "~A2"],
    ["poincare", "~A1"],
    ["enumerate", "E8", "--budget", "1000"],
    ["cells", "H4", "--budget", "100"],
])
def test_computation_errors_exit_two(argv):
    code, out, err = call(argv)
    assert code == 2 and "computation error" in err


def test_verify_flag():
    assert call(["artin-homology", "~C2", "--verify"])[0] == 0
    assert call(["coxeter-homology", "I2(5)", "--kmax", "4", "--verify"])[0] == 0
    assert call(["poincare", "F4", "--verify"])[0] == 0


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("SALVETTI_THREADS", "2")
    code, out, _ = call(["artin-homology", "A2"])
    assert code == 0 and out == (GOLDEN / "artin_a2.txt").read_text(encoding="utf-8")
