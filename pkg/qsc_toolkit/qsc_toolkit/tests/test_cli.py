# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from qsc_toolkit import hooks
from qsc_toolkit.cli import build_parser, main

ROOT = Path(__file__).resolve().parents[3]


def run_cli(*args):
    """Run the CLI in a fresh interpreter; returns (exit status, stdout)"""
    env = {key: value for key, value in os.environ.items() if key != hooks.settings_env_var}
    proc = subprocess.run(
        [sys.executable, "-m", "qsc_toolkit.cli", *args],
        cwd=ROOT,
        env=env,
        capture_output=True,
        text=True,
        timeout=600,
    )
    return proc.returncode, proc.stdout


def test_help():
    status, stdout = run_cli("--help")
    assert status == 0
    for command in hooks.commands:
        assert command in stdout


def test_cosets_document():
    status, stdout = run_cli("cosets", "--q", "17", "--n", "5")
    assert status == 0
    document = json.loads(stdout)
    assert document["meta"] == {"q": 17, "n": 5, "z": 4, "c": 1}
    orbits = [row["orbit"] for row in document["result"]["odd_cosets"]]
    assert [31, 15] in orbits
    assert len(orbits) == 8


def test_output_is_byte_identical():
    assert run_cli("factor", "--q", "41", "--n", "4") == run_cli("factor", "--q", "41", "--n", "4")


def test_invalid_field_exits_with_one():
    status, stdout = run_cli("cosets", "--q", "7", "--n", "3")
    assert status == 1
    document = json.loads(stdout)
    assert document["error"]["type"] == "ValidationError"
    assert document["meta"]["q"] == 7


@pytest.mark.parametrize("n", ["0", "-1"])
def test_length_exponent_below_one_exits_with_one(capsys, n):
    assert main(["cosets", "--q", "5", "--n", n]) == 1
    document = json.loads(capsys.readouterr().out)
    assert document["error"]["type"] == "ValidationError"
    assert document["meta"]["n"] == int(n)


def test_non_integer_scenario_value_exits_with_one(tmp_path, capsys):
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps({"q": 5, "n": "three"}), encoding="utf-8")
    assert main(["factor", "--scenario", str(scenario)]) == 1
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "ValidationError"


def test_verification_command_is_registered():
    assert hooks.commands["verify-paper"].endswith(".verify_published")
    assert build_parser().parse_args(["verify-paper"]).command == "verify-paper"


def certificates_of(document):
    return {c["name"]: c for c in document["certificates"]}


def test_coset_and_factor_certificates_are_computed(capsys):
    assert main(["cosets", "--q", "17", "--n", "5"]) == 0
    certificate = certificates_of(json.loads(capsys.readouterr().out))["closed_form_matches_orbits"]
    assert certificate["passed"] is True
    assert certificate["detail"]["closed_form"] is True

    assert main(["factor", "--q", "5", "--n", "3"]) == 0
    certificate = certificates_of(json.loads(capsys.readouterr().out))["product_is_x^N-1"]
    assert certificate["passed"] is True
    assert certificate["detail"]["product"] == "4 + 1*x^8"


def test_augmented_certificates_are_computed(capsys):
    assert main(["augment", "--q", "5", "--n", "3", "--select", "1,2", "--select-b", "2"]) == 0
    certificate = certificates_of(json.loads(capsys.readouterr().out))["dual_containing_a"]
    assert certificate["passed"] is True
    assert certificate["detail"]["by_divisibility"] is True
    assert certificate["detail"]["violations"] == []

    argv = ["qsc", "--q", "5", "--n", "3", "--select", "1,2", "--select-b", "2", "--budget", "0"]
    assert main(argv) == 0
    chain = certificates_of(json.loads(capsys.readouterr().out))["chain"]
    assert chain["passed"] is True
    assert chain["detail"] == {"dual_containing_a": True, "k_a": 5, "k_b": 7}


def test_code_and_distance(capsys):
    assert main(["code", "--q", "5", "--n", "3", "--select", "1,2"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["result"]["code"]["k"] == 5
    assert document["result"]["dual"]["k"] == 3
    assert document["result"]["dual_containing"]["dual_containing"] is True

    assert main(["mindist", "--q", "5", "--n", "3", "--select", "1,2"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["result"]["distance"]["exact"] == 3
    assert document["result"]["label"] == "[8,5,3]_5"


def test_qsc_report(capsys):
    argv = ["qsc", "--q", "41", "--n", "4", "--delta1", "1", "--extra", "6", "--eps", "0", "--cr", "15", "--budget", "0"]
    assert main(argv) == 0
    qsc = json.loads(capsys.readouterr().out)["result"]["report"]["qsc"]
    assert qsc["label"] == "(0,15)-[[31,2]]_41"
    assert qsc["tolerance_limit"] == 15


def test_misalignment_at_the_order_exits_with_one(capsys):
    argv = ["qsc", "--q", "41", "--n", "4", "--delta1", "1", "--extra", "6", "--cr", "16", "--budget", "0"]
    assert main(argv) == 1
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "ValidationError"


def test_failed_certificate_exits_with_two(capsys):
    argv = ["qsc", "--q", "41", "--n", "4", "--extra", "6,10", "--budget", "0"]
    assert main(argv) == 2
    document = json.loads(capsys.readouterr().out)
    assert document["result"]["verified"] is False


def test_augment(capsys):
    assert main(["augment", "--q", "5", "--n", "3", "--select", "1,2", "--select-b", "2"]) == 0
    result = json.loads(capsys.readouterr().out)["result"]
    assert result["code_a"]["label"] == "[8,5,3]_5"
    assert result["code_b"]["label"] == "[8,7,2]_5"


def test_scenario_file_and_override(tmp_path, capsys):
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps({"q": 5, "n": 3, "select": [1, 2]}), encoding="utf-8")

    assert main(["code", "--scenario", str(scenario)]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["code"]["k"] == 5

    assert main(["code", "--scenario", str(scenario), "--select", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["code"]["k"] == 6


def test_unknown_scenario_key(tmp_path, capsys):
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps({"q": 5, "n": 3, "colour": "red"}), encoding="utf-8")
    assert main(["code", "--scenario", str(scenario)]) == 1
    assert "colour" in json.loads(capsys.readouterr().out)["error"]["message"]


def test_csv_rows(capsys):
    assert main(["cosets", "--q", "5", "--n", "3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split(",") == [
        "index",
        "label",
        "level",
        "members",
        "negated_index",
        "negated_representative",
        "orbit",
        "representative",
        "self_paired",
        "size",
    ]
    assert len(lines) == 7


def test_out_file(tmp_path, capsys):
    out = tmp_path / "cosets.json"
    assert main(["cosets", "--q", "5", "--n", "3", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["result"]["count"] == 6


def test_empty_sweep(capsys):
    assert main(["sweep"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["reports"] == []


@pytest.mark.slow
def test_verification_command():
    status, stdout = run_cli("verify-paper")
    assert status == 0
    summary = json.loads(stdout)["result"]["summary"]
    assert summary["mismatch"] == 0
    assert summary["mismatch-flagged"] == 3
