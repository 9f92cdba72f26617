import json
import subprocess
import sys

import pytest

from leftalg.cli import REPORT_SCHEMA, main, run


def test_minpoly_command(capsys):
    assert main(["minpoly", "--element", "x0 + t", "--over", "K"]) == 0
    out = capsys.readouterr().out
    assert "PASS left_minpoly" in out and "X^2" in out


def test_exceeding_the_bound_fails():
    _, code, _ = run(["minpoly", "--element", "t", "--over", "F", "--bound", "3"])
    assert code == 1


def test_parse_error_is_reported():
    rep, code, _ = run(["minpoly", "--element", "t^x0"])
    assert code == 1
    details = rep.checks[0].details
    assert details["offset"] == 2 and "integer" in details["expected"]


def test_json_report_shape(tmp_path):
    path = tmp_path / "report.json"
    assert main(["--seed", "3", "verify", "centralizer", "--samples", "5", "--json", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["command"] == "verify centralizer"
    assert data["seed"] == 3
    assert data["params"]["samples"] == 5
    names = [c["name"] for c in data["checks"]]
    assert names == sorted(names)
    assert {c["status"] for c in data["checks"]} <= {"pass", "fail", "skip"}
    assert "total_seconds" in data["timings"]


def test_flags_after_subcommand():
    rep, _, args = run(["verify", "degmin", "--seed", "8", "--samples", "4"])
    assert rep.seed == 8 and args.samples == 4


@pytest.mark.parametrize(
    "argv, code",
    [
        (["quat", "pipeline", "--x", "j", "--d", "2"], 0),
        (["quat", "pipeline", "--x", "j", "--d", "1"], 1),
        (["quat", "pipeline", "--x", "3", "--d", "2"], 1),
        (["quat", "minpoly", "--q", "1 + i + j"], 0),
    ],
)
def test_quaternion_commands(argv, code):
    assert run(argv)[1] == code


def test_bound_violation_details():
    rep, _, _ = run(["quat", "pipeline", "--x", "j", "--d", "1"])
    check = rep.checks[0]
    assert check.name == "bound" and check.details["m"] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "leftalg", "verify", "centralizer", "--samples", "3", "--json", "-"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "verify centralizer"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "thm23", "--samples", "3"],
        ["verify", "lemma22"],
        ["verify", "normal-subgroup", "--samples", "10"],
        ["minpoly", "--element", "x0+t", "--over", "K", "--bound", "4"],
        ["quat", "pipeline", "--x", "i", "--d", "2"],
    ],
)
def test_reports_validate_and_are_deterministic(argv):
    jsonschema = pytest.importorskip("jsonschema")
    first = run(argv)[0].to_dict()
    second = run(argv)[0].to_dict()
    jsonschema.validate(first, REPORT_SCHEMA)
    first.pop("timings")
    second.pop("timings")
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_bound_four_still_finds_degree_two():
    rep, code, _ = run(["minpoly", "--element", "x0+t", "--over", "K", "--bound", "4"])
    assert code == 0 and rep.checks[0].certificate["degree"] == 2
