import json
import os
import subprocess
from fractions import Fraction

import pytest

import symineq

CLI = os.environ.get("SYMINEQ_CLI")
needs_cli = pytest.mark.skipif(not CLI, reason="SYMINEQ_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_version_and_schema():
    assert symineq.__version__ == "0.1.0"
    assert symineq.REPORT_SCHEMA == "symineq-report/1"


def test_partitions():
    assert symineq.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(Exception):
        symineq.partitions(0)


def test_majorizes():
    assert symineq.majorizes([3, 1], [2, 2])
    assert not symineq.majorizes([2, 2], [3, 1])
    assert not symineq.majorizes([4, 4], [5, 2, 1])


def test_counterexample_pair():
    mu, lam = symineq.counterexample_pair(8)
    assert mu == (2, 2, 2, 2)
    assert lam == (3, 1, 1, 1, 1, 1)
    assert not symineq.majorizes(mu, lam)


def test_eval_normalized():
    value = symineq.eval_normalized("h", [2], [Fraction(1, 2), 1])
    assert value == Fraction(7, 12)
    assert symineq.eval_normalized("m", [2, 1], [1, 1, 0]) == Fraction(1, 3)
    assert symineq.normalization_constant("h", 2, [2]) == 3


def test_t_ratio():
    assert symineq.t_ratio(3) == Fraction(15, 8)
    assert symineq.t_ratio(1) == 1


def test_profile_scan_finds_reversed_negativity():
    res = symineq.profile_scan([2, 2, 2], [3, 1, 1, 1], 3)
    assert res["minimum"] < 0
    assert res["u"] == 1 and res["v"] == 2
    assert isinstance(res["minimum"], Fraction)


def test_sample_check_holds_for_core_pair():
    res = symineq.sample_check([2, 2, 2, 2], [3, 1, 1, 1, 1, 1], 3, samples=50, seed=1)
    assert res["status"] == "holds_on_evidence"
    assert res["witness"] is None


def test_sample_check_monomial_witness():
    res = symineq.sample_check([1, 1, 1], [2, 1], 3, samples=50, family="m")
    assert res["status"] == "counterexample_found"
    assert res["witness"]["x"] == (1, 1, 0)
    assert res["witness"]["mu_value"] == 0
    assert res["witness"]["lambda_value"] == Fraction(1, 3)


def test_certificate():
    report = symineq.certify_d8()
    assert report["schema"] == "symineq-report/1"
    cert = report["result"]
    assert cert["valid"] is True
    names = {s["name"] for s in cert["steps"]}
    assert {"j2_square_factorization", "appendix_coefficients", "t_ratio_monotone"} <= names
    assert all(s["status"] == "pass" for s in cert["steps"])


def test_theorem():
    report, code = symineq.theorem(8, 1, 2, samples=50)
    assert code == 0
    assert report["schema"] == "symineq-report/1"
    assert report["result"]["ok"] is True
    assert report["result"]["majorizes"] is False


def test_derivative_identity():
    assert symineq.verify_dh_identity(3, 4, 2)


@needs_cli
def test_cli_exit_codes():
    assert run_cli("majorize", "3,1", "2,2").returncode == 0
    assert run_cli("majorize", "2,2", "3,1").returncode == 1
    assert run_cli("theorem", "7").returncode == 2
    assert run_cli("certify-d8").returncode == 0


@needs_cli
def test_cli_json_reports_are_stable():
    first = run_cli("--json", "eval", "2", "1/2,1", "--family", "h")
    second = run_cli("--json", "eval", "2", "1/2,1", "--family", "h")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["schema"] == "symineq-report/1"
    assert report["result"]["normalized"] == "7/12"


@needs_cli
def test_cli_matches_module():
    out = run_cli("--json", "theorem", "8", "--n", "1..2", "--samples", "50")
    assert out.returncode == 0
    cli_report = json.loads(out.stdout)
    mod_report, code = symineq.theorem(8, 1, 2, samples=50)
    assert code == 0
    assert cli_report["result"]["mu"] == mod_report["result"]["mu"]
    assert cli_report["result"]["ok"] == mod_report["result"]["ok"]
