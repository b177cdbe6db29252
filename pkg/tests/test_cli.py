"""Command-line behaviour: reports, exit codes and determinism."""
import json
import subprocess
import sys

import pytest

from dihedral_blocks.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run(["invariants", "--n", "3", "--m", "1", "--case", "aa", "--format", "json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["invariants"] == {"k": 10, "k0": 8, "k1": 2, "l": 3}
    assert report["params"] == {"n": 3, "m": 1, "case": "aa", "fix1": "z", "fix2": "z"}
    assert set(report) == {"params", "invariants", "checks", "details"}
    # round trip and determinism
    assert json.dumps(report, indent=2, sort_keys=True) == out.rstrip("\n")
    code2, out2, _ = run(["invariants", "--n", "3", "--m", "1", "--case", "aa", "--format", "json"], capsys)
    assert out2 == out


def test_verify_all(capsys):
    code, out, _ = run(["verify", "all", "--n", "3", "--m", "1", "--case", "ab"], capsys)
    assert code == 0
    assert out.count("PASS") == 9 and "FAIL" not in out


@pytest.mark.parametrize("target", ["aut", "essential", "fixedpt", "subrep", "olsson", "main", "awc", "owc", "gluing"])
def test_verify_targets_json(target, capsys):
    code, out, _ = run(["verify", target, "--n", "4", "--m", "1", "--case", "aa", "--fix2", "uz", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["checks"] == {target: True}


def test_usage_errors(capsys):
    code, _, err = run(["invariants", "--n", "2", "--m", "1", "--case", "aa"], capsys)
    assert code == 2 and "n must be >= 3" in err
    code, _, err = run(["invariants", "--n", "3", "--m", "1"], capsys)
    assert code == 2 and "--case" in err
    code, _, _ = run(["frobnicate"], capsys)
    assert code == 2
    code, _, _ = run(["invariants", "--n", "3", "--m", "0", "--case", "aa", "--fix1", "uz"], capsys)
    assert code == 2


def test_cap_exceeded(capsys, monkeypatch):
    code, _, err = run(["invariants", "--n", "6", "--m", "4", "--case", "aa"], capsys)
    assert code == 3 and "cap" in err
    code, _, _ = run(["classes", "--n", "3", "--m", "1", "--case", "aa", "--max-order", "8"], capsys)
    assert code == 3
    monkeypatch.setenv("DIHEDRAL_BLOCKS_MAX_ORDER", "8")
    code, _, _ = run(["classes", "--n", "3", "--m", "1", "--case", "aa"], capsys)
    assert code == 3


def test_solve(capsys):
    code, out, _ = run(
        ["solve", "--n", "3", "--m", "1", "--case", "aa", "--l-min", "1", "--l-max", "3", "--format", "json"], capsys
    )
    report = json.loads(out)
    assert code == 0 and len(report["details"]["feasible_set"]) == 2
    code, out, _ = run(["solve", "--n", "3", "--m", "1", "--case", "aa", "--format", "json"], capsys)
    assert json.loads(out)["invariants"] == {"k": 10, "k0": 8, "k1": 2, "l": 3}
    code, _, _ = run(["solve", "--n", "3", "--m", "1", "--case", "aa", "--l-min", "4", "--l-max", "4"], capsys)
    assert code == 1


def test_other_commands(capsys):
    code, out, _ = run(["classes", "--n", "3", "--m", "0", "--case", "ab", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["details"]["representatives"] == ["1", "x", "x^2", "y"]
    code, out, _ = run(["chartable", "--n", "3", "--m", "1", "--format", "json"], capsys)
    assert code == 0 and all(json.loads(out)["checks"].values())
    code, out, _ = run(["weights", "--n", "3", "--m", "1", "--case", "aa", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["details"]["weights"] == 3
    code, out, _ = run(["owc", "--n", "3", "--m", "1", "--case", "aa", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["details"]["chains"]["Q1"][0]["contribution"] == 2
    code, out, _ = run(["gluing", "--n", "3", "--m", "0", "--case", "aa"], capsys)
    assert code == 0 and "unique solution" in out


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "dihedral_blocks", "classes", "--n", "3", "--m", "1", "--case", "aa", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["details"]["count"] == 6
