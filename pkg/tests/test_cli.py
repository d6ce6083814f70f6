import json
import subprocess
import sys

import pytest

from altdes.cli import main

from conftest import F_TABLE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seq_f(capsys):
    code, out, _ = run(capsys, "seq", "--name", "f", "--limit", "12")
    assert code == 0
    assert out.strip() == ",".join(map(str, F_TABLE))


def test_seq_beta_and_alt_eulerian(capsys):
    assert run(capsys, "seq", "--name", "beta", "--composition", "3")[1].strip() == "1"
    # alternating descent set exactly {2}: only 1234
    assert run(capsys, "seq", "--name", "beta-hat", "--composition", "2,2")[1].strip() == "1"
    assert run(capsys, "seq", "--name", "beta-hat", "--composition", "4")[1].strip() == "5"
    code, out, _ = run(capsys, "--format", "json", "seq", "--name", "alt-eulerian", "--limit", "2")
    data = json.loads(out)
    assert data["results"][2]["coefficients"] == [0, 1, 1]


def test_seq_errors(capsys):
    assert run(capsys, "seq", "--name", "beta")[0] == 2
    assert run(capsys, "seq", "--name", "f", "--limit", "100000")[0] == 3
    assert run(capsys, "seq", "--name", "zzz")[0] == 2
    assert run(capsys, "seq", "--name", "f", "--bogus")[0] == 2


def test_series(capsys):
    assert run(capsys, "series", "--name", "F", "--order", "12", "--egf")[1].strip() == \
        ",".join(map(str, F_TABLE))
    assert run(capsys, "series", "--name", "sec_plus_tan", "--order", "4", "--egf")[1].strip() == "1,1,1,2,5"
    assert run(capsys, "series", "--name", "F", "--order", "0")[1].strip() == "1"
    assert run(capsys, "series", "--name", "nope")[0] == 2
    assert run(capsys, "series", "--name", "F", "--order", "61")[0] == 3
    code, out, _ = run(capsys, "series", "--name", "F", "--order", "3", "--basis", "r")
    assert code == 0 and "r(1,2): 1" in out and "r(3)" not in out


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--name", "exp", "--order", "2", "--format", "csv")
    assert out.splitlines() == ["n,coefficient", "0,1", "1,1", "2,1/2"]


def test_verify_json_schema_and_determinism(capsys):
    args = ("--format", "json", "verify", "--suite", "qt", "--n-max", "4", "--seed", "3")
    code, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert code == 0
    assert out1 == out2
    data = json.loads(out1)
    assert set(data) == {"command", "params", "results", "checks"}
    assert data["command"] == "verify"
    for c in data["checks"]:
        assert set(c) == {"name", "paper_ref", "pass", "detail"}
        assert c["pass"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from altdes import checks

    def failing(n_max, seed=0):
        return [checks.Check("always fails", "test", False, "counterexample: n=0")]
    monkeypatch.setitem(checks.SUITE_FUNCS, "qt", failing)
    code, out, err = run(capsys, "verify", "--suite", "qt")
    assert code == 1
    assert "FAIL" in out and "counterexample" in err


def test_verify_cap(capsys):
    assert run(capsys, "verify", "--suite", "oracle", "--n-max", "12")[0] == 3


def test_asym(capsys):
    code, out, _ = run(capsys, "asym", "--n-max", "0")
    assert code == 0
    assert "alpha = 1.299828316" in out and "beta = 0.769332370" in out
    assert "f(n)/n!" not in out
    code, out, _ = run(capsys, "asym", "--tol", "1e-6", "--n-max", "5")
    assert "alpha = 1.299828316" in out and "gamma = 3.279075713" in out
    assert run(capsys, "asym", "--tol", "1e-13")[0] == 2
    code, out, _ = run(capsys, "--format", "json", "asym", "--n-max", "3")
    data = json.loads(out)
    assert len(data["results"][0]["error_table"]) == 4
    code, out, _ = run(capsys, "asym", "--n-max", "3", "--format", "csv")
    assert out.splitlines()[0].startswith("n,")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "altdes", "seq", "--name", "euler", "--limit", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1,1,1,2,5,16"


@pytest.mark.slow
def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "7")
    assert code == 0
    assert "FAIL" not in out
