"""CLI contract tests: exit codes, JSON output, determinism."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("USTAR_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="USTAR_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_invariants_json():
    r = run("invariants", "--p", "3", "--orders", "9", "--involution", "canonical",
            "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["p"] == 3
    assert payload["orders"] == [9]
    assert payload["l"] == 1
    assert payload["order_V"] == "3^8"
    assert payload["f_unitary"] == [2, 1]
    assert payload["f_symmetric"] == [2, 1]
    assert "unitary_basis" not in payload


def test_invariants_trivial_group():
    r = run("invariants", "--p", "3", "--orders", "1", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["order_V"] == "3^0"
    assert payload["f_symmetric"] == []
    assert payload["f_unitary"] == []


def test_basis_json():
    r = run("basis", "--p", "3", "--orders", "9", "--involution", "canonical",
            "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert len(payload["unitary_basis"]) == 3
    assert len(payload["symmetric_basis"]) == 3
    first = payload["unitary_basis"][0]
    assert first["alpha"] == [1]
    assert first["class"] == "L1"
    assert first["order"] == "3^2"
    assert first["element"]
    assert first["element_original"]


def test_basis_identity_involution_has_empty_unitary_basis():
    r = run("basis", "--p", "3", "--orders", "3", "--involution", "identity",
            "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["unitary_basis"] == []
    assert len(payload["symmetric_basis"]) == 2


def test_diagonalize_swap():
    r = run("diagonalize", "--p", "3", "--orders", "3,3", "--involution", "swap(1,2)",
            "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["l"] == 1
    assert payload["t"] == 2
    assert payload["diagonal_orders"] == [3, 3]
    assert payload["generators"][0]["action"] == "inverted"
    assert payload["fixed_power_subgroup_sizes"][0] == 3


def test_verify_passes_and_exit_zero():
    r = run("verify", "--p", "3", "--orders", "3,3", "--involution", "swap(1,2)",
            "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["all_pass"] is True
    assert payload["failed"] == 0


def test_verify_skips_above_cap():
    r = run("verify", "--p", "3", "--orders", "27", "--format", "json")
    assert r.returncode == 0  # skips are not failures
    payload = json.loads(r.stdout)
    assert payload["skipped"] > 0
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["decomposition"] == "skipped"
    assert statuses["unitary-independence"] == "pass"


def test_exit_code_2_on_bad_input():
    assert run("invariants", "--p", "4", "--orders", "4").returncode == 2        # p not prime
    assert run("invariants", "--p", "3", "--orders", "5").returncode == 2        # order not p-power
    assert run("invariants", "--p", "3").returncode == 2                         # missing orders
    assert run("invariants", "--p", "3", "--orders", "9",
               "--involution", "a1->2").returncode == 2                          # not involutory
    assert run("nonsense").returncode == 2
    assert run().returncode == 2


def test_help_exits_zero():
    assert run("--help").returncode == 0


def test_text_and_json_carry_the_same_numbers():
    text = run("invariants", "--p", "3", "--orders", "3,3", "--involution", "swap(1,2)")
    js = run("invariants", "--p", "3", "--orders", "3,3", "--involution", "swap(1,2)",
             "--format", "json")
    assert text.returncode == 0 and js.returncode == 0
    payload = json.loads(js.stdout)
    assert f"|G_eta| = {payload['fixed_subgroup_size']}" in text.stdout
    assert payload["order_symmetric"] in text.stdout
    assert payload["order_unitary"] in text.stdout


def test_output_is_deterministic():
    args = ("basis", "--p", "3", "--orders", "9", "--format", "json")
    assert run(*args).stdout == run(*args).stdout


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    r = run("invariants", "--p", "3", "--orders", "9", "--format", "json",
            "--out", str(target))
    assert r.returncode == 0
    payload = json.loads(target.read_text())
    assert payload["order_V"] == "3^8"
