import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("IMTW_CLI")
CORPUS = pathlib.Path(__file__).resolve().parents[1] / "data" / "corpus"

pytestmark = pytest.mark.skipif(not CLI, reason="IMTW_CLI is not set")


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


def test_solve_c5():
    r = run("solve", "--graph", CORPUS / "c5.gr", "--td-source", "trivial")
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["status optimal", "weight 2/1", "solution 3 5"]


def test_solve_with_files_verifies():
    r = run("solve", "--graph", CORPUS / "c5.gr", "--weights", CORPUS / "c5.w", "--td", CORPUS / "c5.td",
            "--problem", "forest", "--verify")
    assert r.returncode == 0
    assert "c verify agrees with the oracle" in r.stdout


def test_oracle_matches_solve():
    args = ["--graph", CORPUS / "star.gr", "--weights", CORPUS / "star.w", "--problem", "tree"]
    assert run("solve", *args).stdout == run("oracle", *args).stdout


def test_exit_codes():
    assert run("solve", "--graph", CORPUS / "empty.gr", "--problem", "tree").returncode == 2
    r = run("solve", "--graph", CORPUS / "c5.gr", "--k", "0")
    assert r.returncode == 3 and r.stdout.startswith("status mu-exceeded")
    assert run("solve", "--graph", CORPUS.parent / "invalid" / "self_loop.L3.gr").returncode == 65
    assert run("solve").returncode == 64
    assert run("solve", "--graph", CORPUS / "c5.gr", "--problem", "cycle", "--w", "1").returncode == 64


def test_validate_and_mu_width():
    assert run("validate-td", "--graph", CORPUS / "p3.gr", "--td", CORPUS / "p3.td").stdout == "valid width 1\n"
    assert run("mu-width", "--graph", CORPUS / "k4.gr", "--td", CORPUS / "k4.td").stdout == "mu 1\nwidth 3\n"


def test_normalize_output_is_a_valid_decomposition(tmp_path):
    r = run("normalize", "--graph", CORPUS / "c5.gr", "--td", CORPUS / "c5.td", "--ell", "2")
    assert r.returncode == 0
    out = tmp_path / "n.td"
    out.write_text(r.stdout)
    assert run("validate-td", "--graph", CORPUS / "c5.gr", "--td", out).returncode == 0


def test_selfcheck_is_reproducible_and_reports_faults():
    first = run("selfcheck", "--seed", 5, "--budget", 10)
    assert first.returncode == 0
    assert first.stdout == run("selfcheck", "--seed", 5, "--budget", 10).stdout
    faulty = run("selfcheck", "--seed", 5, "--budget", 3, "--inject-fault")
    assert faulty.returncode == 1
    assert "c suite oracle seed 5 instance 0" in faulty.stdout
