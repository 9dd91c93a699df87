import json
import subprocess
import sys

import pytest

from langkit import cli

LIBRARY = (
    "thmA",
    "thmB",
    "thmC",
    "thmD",
    "thmE",
    "thmF",
    "appendix_block",
    "appendix_pair",
    "appendix_mixed",
)


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "langkit.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc


@pytest.mark.parametrize("name", LIBRARY)
def test_library_scenarios_pass(name):
    report = cli.run("check-scenario", name)
    assert report["schema"] == "1"
    verdict = report.get("verdict", report.get("statement", ""))
    assert verdict
    assert "FAIL" not in verdict


@pytest.mark.parametrize("name", LIBRARY)
def test_reports_are_deterministic(name):
    a = cli.render_json(cli.run("check-scenario", name))
    b = cli.render_json(cli.run("check-scenario", name))
    assert a == b


def test_round_trip_canonical_serialization(tmp_path):
    src = cli.scenario_dir() / "thmB.json"
    parsed = json.loads(src.read_text())
    canonical = json.dumps(parsed, indent=2, sort_keys=True) + "\n"
    p = tmp_path / "thmB.json"
    p.write_text(canonical)
    reparsed = json.loads(p.read_text())
    assert json.dumps(reparsed, indent=2, sort_keys=True) + "\n" == canonical


def test_every_derivation_step_cites_a_known_rule():
    from langkit import rules

    for name in LIBRARY:
        report = cli.run("check-scenario", name)
        steps = report.get("derivation", []) + report.get("certificate", [])
        assert steps
        for step in steps:
            assert step["citation"] in rules.RULES
        for rid in report["citations"]:
            assert rid in rules.RULES


def test_pole_command():
    report = cli.run("pole", "thmB")
    assert report["verdict"] == "pole"
    assert report["residual_parameter"]


def test_classify_command():
    report = cli.run("classify", "thmB")
    assert report["accepted"] == [{"label": "pi", "shift": "1/2"}]


def test_root_number_commands():
    assert cli.run("root-number", "thmD")["details"]["sign"] in (1, -1)
    assert cli.run("root-number", "thmF")["details"]["ratio"] == 1


def test_normalize_command():
    report = cli.run("normalize", "appendix_pair")
    assert report["statement"].startswith("holomorphic")


def test_satake_act_command(tmp_path):
    scn = {
        "schema": "1",
        "name": "act",
        "satake_class": {
            "family": "ResGL",
            "size": 2,
            "eigenvalues": ["q^1/2*u1", "q^-1/2*u1^-1"],
        },
        "aut_spec": {"eps": -1, "unit_map": {}},
    }
    p = tmp_path / "act.json"
    p.write_text(json.dumps(scn))
    report = cli.run("satake-act", str(p))
    assert report["output"] == report["input"]


def test_schema_error_paths(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"schema": "1", "records": [{"label": "x"}]}))
    with pytest.raises(cli.ScenarioError, match="/records/0/degree"):
        cli.run("check-scenario", str(p))


def test_exit_codes(tmp_path):
    ok = run_cli("check-scenario", "--scenario", "thmB")
    assert ok.returncode == 0
    strict = run_cli("check-scenario", "--scenario", "thmB", "--strict")
    assert strict.returncode != 0
    missing = run_cli("check-scenario", "--scenario", str(tmp_path / "nope.json"))
    assert missing.returncode != 0


def test_text_format_mentions_warnings():
    proc = run_cli("check-scenario", "--scenario", "thmB", "--format", "text")
    assert proc.returncode == 0
    assert "warning: open-question choice" in proc.stdout


def test_scenario_dir_env(tmp_path, monkeypatch):
    custom = tmp_path / "lib"
    custom.mkdir()
    src = cli.scenario_dir() / "thmB.json"
    (custom / "mine.json").write_text(src.read_text())
    monkeypatch.setenv(cli.SCENARIO_DIR_ENV, str(custom))
    report = cli.run("check-scenario", "mine")
    assert report["verdict"] == "nonvanishing invariant: YES"


def test_selftest_passes():
    report = cli.run("selftest", None)
    assert report["verdict"] == "all oracle suites pass"
    assert all(line.startswith("PASS") for line in report["checks"])


def test_ledger_override_flag(tmp_path):
    override = {
        "schema": "1",
        "ledger_overrides": [
            {"factor": ["wedge2", "pi"], "point": "1", "order": 0, "provenance": "test"}
        ],
    }
    p = tmp_path / "override.json"
    p.write_text(json.dumps(override))
    proc = run_cli(
        "pole", "--scenario", "thmB", "--ledger-override", str(p), "--format", "json"
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["verdict"] == "no pole"


@pytest.mark.parametrize(
    "patch,pointer",
    [
        ({"records": [{"label": "pi", "degree": 0}]}, "/records/0"),
        ({"aut_spec": {"eps": 3}}, "/aut_spec"),
        ({"embeddings": {"real": ["r1"], "complex_pairs": [["r1", "r1"]]}}, "/embeddings"),
        ({"records": [{"label": "x", "degree": 2, "infchar": {"r1": ["1/3"]}}]}, "/records/0/infchar"),
    ],
)
def test_schema_errors_carry_pointers(tmp_path, patch, pointer):
    base = json.loads((cli.scenario_dir() / "thmB.json").read_text())
    base.update(patch)
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(base))
    with pytest.raises(cli.ScenarioError, match=pointer.replace("/", "/")):
        cli.run("check-scenario", str(p))
