import json
import subprocess
import sys

import pytest

from latkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_disc(capsys):
    assert run(capsys, "disc", "U^3 + E8(-1)^2 + A2(-1)") == (0, "3\n", "")


def test_disc_json(capsys):
    code, out, _ = run(capsys, "disc", "A2", "--json")
    assert json.loads(out)["invariant_factors"] == [3]


def test_sig(capsys):
    assert run(capsys, "sig", "I(21,2)")[1] == "(21,2)\n"


def test_genus_eq(capsys):
    assert run(capsys, "genus-eq", "U + E8(-1)", "E8(-1) + U")[1] == "yes\n"


def test_glue(capsys):
    code, out, _ = run(capsys, "glue", "U", "--span", "1,1", "--json")
    assert code == 0 and json.loads(out)["order"] == 2


def test_obstruct(capsys):
    assert run(capsys, "obstruct", "U^6", "--scale", "2", "--ambient-rank", "22")[1] == "Obstructed\n"


def test_a2_vector(capsys):
    code, out, _ = run(capsys, "a2", "--vector", "1,0", "--json")
    assert code == 0 and json.loads(out) == {"v": [1, 0], "u": [1, 2], "u_squared": 6, "branch": "3v²"}


def test_a2_nonprimitive_is_normalized(capsys):
    code, out, _ = run(capsys, "a2", "--vector", "2,0", "--json")
    assert json.loads(out)["content"] == 2 and json.loads(out)["u_squared"] == 6


def test_a2_bound(capsys):
    assert run(capsys, "a2", "--bound", "5")[0] == 0


def test_candidates(capsys):
    assert run(capsys, "candidates", "--prime", "2", "--glue", "5")[1] == "5 10\n"


def test_extend(tmp_path, capsys):
    case = tmp_path / "case.json"
    case.write_text(json.dumps({"total": "U", "algebraic": [[1, 1]], "f": [[-1]], "g": [[1]]}))
    code, out, _ = run(capsys, "extend", "--case", str(case), "--json")
    assert code == 0 and json.loads(out) == {"extends": True, "matrix": [[0, 1], [1, 0]]}


@pytest.mark.parametrize("argv", [["disc", "U^"], ["disc", "Nope"], ["candidates", "--prime", "4", "--glue", "1"],
                                  ["a2", "--vector", "1,2,3"], ["extend", "--case", "/nonexistent.json"],
                                  ["disc", "A2(1/2)"]])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_is_deterministic_and_passes():
    cmd = [sys.executable, "-m", "latkit", "verify", "--suite", "paper", "--seed", "3", "--trials", "50", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    lines = [json.loads(x) for x in first.stdout.decode().splitlines()]
    records, summary = lines[:-1], lines[-1]
    assert len({r["check_id"] for r in records}) == len(records)
    assert summary == {"checks": len(records), "failed": 0, "seed": 3, "status": "pass",
                       "suite": "paper", "trials": 50}
