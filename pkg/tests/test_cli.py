import json
import os
import shutil
import subprocess
import sys

import pytest

from hyperalg.cli import run
from hyperalg.lower.smt import SOLVER_ENV

HAS_SOLVER = shutil.which(os.environ.get(SOLVER_ENV) or "z3") is not None


def out(capsys, *argv, code=0):
    assert run(list(argv)) == code
    return capsys.readouterr().out.strip()


def test_eval_and_mul(capsys):
    assert out(capsys, "eval", "i*j") == "k"
    assert out(capsys, "mul", "j", "i") == "-k"
    assert out(capsys, "eval", "q^2 + 1 = 0", "--at", "q=i") == "true"
    assert out(capsys, "eval", "q^2 + 1 = 0", "--at", "q=1") == "false"
    assert out(capsys, "mul", "--sig", "octonion", "e1", "e2") == "e3"


def test_mul_table(capsys):
    lines = out(capsys, "mul", "--table").splitlines()
    assert lines[2].split() == ["i", "i", "-1", "k", "-j"]
    assert len(out(capsys, "mul", "--table", "--sig", "octonion").splitlines()) == 9


def test_roots_json(capsys):
    data = json.loads(out(capsys, "roots", "--json", "q^2 + 1"))
    assert data == {"input": "q^2 + 1", "roots": [{"type": "sphere", "x": "0", "y": "1"}], "dimension": 2}
    assert "sphere x = 0, y = 1" in out(capsys, "roots", "q^2 + 1")


def test_rewrite(capsys):
    assert out(capsys, "rewrite", "q2*q1 = 0").splitlines()[0] == "exists t1 (q2*t1 = 0 and t1 - q1 = 0)"


def test_lower(capsys):
    text = out(capsys, "lower", "q^2 + 1 = 0")
    assert text == "q_0^2 - q_1^2 - q_2^2 - q_3^2 + 1 = 0 and 2*q_0*q_1 = 0 and 2*q_0*q_2 = 0 and 2*q_0*q_3 = 0"
    assert out(capsys, "lower", "q = 0 and q = 1", "--decide").splitlines()[-1] == "unsat"


def test_smt_writes_script(capsys, tmp_path):
    target = tmp_path / "out.smt2"
    out(capsys, "smt", "q^2 + 1 = 0", "-o", str(target))
    assert target.read_text().startswith("(set-logic NRA)")


@pytest.mark.skipif(not HAS_SOLVER, reason="no SMT solver installed")
def test_smt_run(capsys):
    assert out(capsys, "smt", "q = 0 and q = 1", "--run") == "unsat"


def test_realize_point(capsys):
    data = json.loads(out(capsys, "realize", "--json", "x1^2 + x2^2 - 1", "--vars", "x1,x2", "--point", "3/5,4/5"))
    assert data["proj_arity"] == 1 and data["point"]["on_target"] is True
    assert data["point"]["projected"] == ["3/5", "4/5"]


def test_set_commands(capsys):
    assert out(capsys, "set", "member", "q^2 + 1", "i") == "true"
    assert out(capsys, "set", "member", "q - i;q + i", "i") == "false"
    assert out(capsys, "set", "union", "q - i", "q + i") == "q - i = 0\nor q + i = 0"
    data = json.loads(out(capsys, "set", "intersect", "--json", "q - i", "q^2 + 1"))
    assert data["union"] == [{"polys": ["q - i", "q^2 + 1"]}]
    basis = out(capsys, "set", "vanish", "--degree", "2", "--", "i", "-i").splitlines()
    assert basis and basis != ["(zero space)"]


def test_set_from_json_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"union": [{"polys": ["q - i"]}, {"polys": ["q + i"]}]}))
    assert out(capsys, "set", "member", f"@{path}", "--", "-i") == "true"


def test_exit_codes(capsys):
    assert run(["eval", "q*"]) == 1
    assert "position" in capsys.readouterr().err
    assert run(["roots", "q1*q2"]) == 1
    assert run(["smt", "q = 0", "--run", "--solver-path", "/nonexistent/solver"]) == 2
    assert run(["nonsense"]) == 1


def test_deterministic(capsys):
    first = out(capsys, "realize", "--json", "x1^2 + x2^2 - 1", "--vars", "x1,x2")
    assert out(capsys, "realize", "--json", "x1^2 + x2^2 - 1", "--vars", "x1,x2") == first
    a = out(capsys, "selftest", "-n", "5", "--seed", "7", "--json")
    assert out(capsys, "selftest", "-n", "5", "--seed", "7", "--json") == a


def test_selftest(capsys):
    text = out(capsys, "selftest", "-n", "5")
    assert text.count("PASS") == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperalg", "mul", "i", "j"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "k"
