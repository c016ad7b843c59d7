import json
import os
import subprocess

import pytest

TOOL = os.environ.get("STEALTH_PLACE_TOOL", "stealth_place")


def run(*args):
    return subprocess.run([TOOL, *args], capture_output=True, text=True, timeout=120)


def test_bounds_json():
    p = run("bounds", "--m-list", "3", "--gamma-min", "0.6", "--gamma-max", "0.6", "--gamma-steps", "1", "--out", "json")
    assert p.returncode == 0
    row = json.loads(p.stdout)[0]
    assert row["raw"]["best_lb"] == pytest.approx(1.136, abs=5e-4)


def test_optimal_then_verify(tmp_path):
    scenario = tmp_path / "s.json"
    p = run("optimal2x2", "--mode", "thm1", "--t1", "0,0", "--t2", "1,0", "--gamma", "0.6", "-o", str(scenario))
    assert p.returncode == 0, p.stderr
    assert run("verify", "--scenario", str(scenario), "--gamma", "0.6").returncode == 0
    assert run("verify", "--scenario", str(scenario), "--gamma", "0.3").returncode == 1


def test_invalid_parameters_exit_2():
    assert run("solve", "--m", "1", "--gamma", "0.5").returncode == 2
    assert run("bounds", "--no-such-flag").returncode == 2


def test_json_errors():
    p = run("solve", "--m", "3", "--gamma", "1.5", "--json-errors")
    assert p.returncode == 2
    err = json.loads(p.stderr)
    assert err["exit_code"] == 2
    assert err["error"] and err["message"]


def test_missing_scenario_file():
    p = run("--json-errors", "fimcheck", "--scenario", "/nonexistent/scenario.json")
    assert p.returncode == 2
    assert json.loads(p.stderr)["exit_code"] == 2


def test_region_outputs_pgm(tmp_path):
    targets = tmp_path / "t.json"
    targets.write_text(json.dumps({"targets": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    out = tmp_path / "r.pgm"
    p = run("region", "--targets", str(targets), "--gamma", "0.6", "--res", "64", "-o", str(out))
    assert p.returncode == 0, p.stderr
    assert out.read_bytes().startswith(b"P5\n64 64\n255\n")
    assert json.loads(p.stdout)["components"] >= 1
