import json

import pytest

from glhwv.cli import main
from glhwv.reports import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE, SCHEMA_VERSION


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_invariants_text(capsys):
    code, out = run(capsys, "invariants", "--n", "2")
    assert code == EXIT_PASS
    lines = out.strip().splitlines()
    assert len(lines) == 2 and lines[0].startswith("s1 = ")


def test_build_then_verify(capsys, tmp_path):
    code, out = run(capsys, "hwv", "build", "--n", "4", "--t", "2", "--set", "2,4")
    assert code == EXIT_PASS
    path = tmp_path / "u.txt"
    path.write_text(out)
    code, rep = run_json(capsys, "hwv", "verify", "--file", str(path), "--lambda", "2,0,-1,-1")
    assert code == EXIT_PASS
    assert rep["verdict"] is True and rep["schema_version"] == SCHEMA_VERSION
    code, rep = run_json(capsys, "hwv", "verify", "--file", str(path), "--lambda", "1,1,-1,-1")
    assert code == EXIT_FAIL and rep["verdict"] is False


def test_verify_reports_failing_root(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("x[1][2]\n")
    code, rep = run_json(capsys, "hwv", "verify", "--file", str(path), "--lambda=-1,1,0")
    assert code == EXIT_FAIL
    assert rep["results"]["failing_root"] == 1
    assert [c["name"] for c in rep["certificates"]] == ["input", "residual"]


def test_delta_json(capsys):
    code, rep = run_json(capsys, "delta", "--n", "4", "--t", "2")
    assert code == EXIT_PASS
    M = rep["results"]["matrix"]
    assert len(M) == 3 and all(abs(M[i][i]) == 1 for i in range(3))


def test_basis_and_jacobian(capsys):
    code, rep = run_json(capsys, "basis", "--n", "3", "--t", "1", "--family", "v")
    assert code == EXIT_PASS and rep["per_degree_dims"]
    code, rep = run_json(capsys, "jacobian", "--n", "4", "--t", "2")
    assert code == EXIT_PASS and abs(rep["results"]["determinant"]) == 1


def test_basis_inconclusive_under_cap(capsys):
    code, rep = run_json(capsys, "basis", "--n", "4", "--t", "2", "--max-degree", "2")
    assert code == EXIT_INCONCLUSIVE and rep["verdict"] is None


def test_gl3_and_question(capsys):
    code, rep = run_json(capsys, "gl3", "--cap", "3")
    assert code == EXIT_PASS and rep["results"]["ok"]
    code, rep = run_json(capsys, "question", "--n", "4", "--lambda", "1,1,-1,-1")
    assert code == EXIT_PASS and rep["verdict"] is True


def test_question_failure_code(capsys):
    code, rep = run_json(capsys, "question", "--n", "4", "--lambda", "1,1,-1,-1", "--tuple-cap", "1")
    assert code == EXIT_FAIL


def test_scan(capsys):
    code, rep = run_json(capsys, "scan", "--n", "3", "--t", "1", "--r", "2")
    assert code == EXIT_PASS
    assert rep["results"]["total"] == 3


def test_out_file(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, out = run(capsys, "jacobian", "--n", "3", "--t", "1", "--out", str(path))
    assert code == EXIT_PASS and out == ""
    assert json.loads(path.read_text())["command"] == "jacobian"


def test_reports_are_deterministic_apart_from_timing(capsys):
    argv = ("delta", "--n", "5", "--t", "2", "--completion", "random", "--seed", "3")
    _, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv)
    a.pop("timing")
    b.pop("timing")
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["invariants"],
        ["invariants", "--n", "1"],
        ["hwv", "build", "--n", "3", "--t", "1", "--set", "1"],
        ["hwv", "verify", "--file", "/nonexistent/file", "--lambda", "1,-1"],
        ["gl3", "--char", "3"],
        ["question", "--n", "3", "--lambda", "1,-1"],
        ["jacobian", "--n", "5", "--t", "2"],
        ["scan", "--n", "3", "--t", "1", "--r", "1", "--method", "counting", "--char", "5"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    capsys.readouterr()
