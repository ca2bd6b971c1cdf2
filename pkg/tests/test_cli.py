import json
import os
import subprocess
import sys
from fractions import Fraction as F

import pytest

from degenfe.cli import main
from degenfe.numbers import stirling2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_family_json(capsys):
    code, out, _ = run(capsys, "family", "--kind", "degen-fe", "--lambda", "1/2", "--u", "2", "--n", "4", "--oracle")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["table"]) == 5
    assert doc["oracle_agrees"] is True
    assert doc["params"] == {"lambda": "1/2", "u": "2", "r": 1}


def test_family_euler_nine(capsys):
    code, out, _ = run(capsys, "family", "--kind", "euler", "--n", "9")
    assert code == 0
    assert json.loads(out)["table"][9][0] == "-31/2"


def test_family_n_zero(capsys):
    code, out, _ = run(capsys, "family", "--kind", "bernoulli", "--n", "0")
    assert json.loads(out)["table"] == [["1"]]


def test_family_bad_u(capsys):
    code, _, err = run(capsys, "family", "--kind", "fe", "--u", "1", "--n", "3")
    assert code == 2
    assert "u must not equal 1" in err


def test_family_latex_and_csv(capsys):
    code, out, _ = run(capsys, "family", "--kind", "euler", "--n", "1", "--format", "latex")
    assert r"E_{1}(x) &= x - \frac{1}{2}" in out
    code, out, _ = run(capsys, "family", "--kind", "euler", "--n", "1", "--format", "csv")
    assert out.splitlines()[-1] == "1,-1/2,1"


def test_numbers(capsys):
    code, out, _ = run(capsys, "numbers", "--seq", "euler", "--n", "7")
    rows = lines(out)
    assert rows[7] == {"n": 7, "value": "17/8"}
    code, out, _ = run(capsys, "numbers", "--seq", "stirling2", "--n", "4", "--k", "2")
    assert lines(out)[-1]["value"] == "7"


def test_represent_square(capsys):
    code, out, _ = run(capsys, "represent", "0,0,1", "--basis", "degen-euler", "--lambda", "1")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] is True


def test_represent_constant(capsys):
    code, out, _ = run(capsys, "represent", "1", "--basis", "degen-fe", "--lambda", "1", "--u", "2")
    assert json.loads(out)["coeffs"] == ["1"]


def test_represent_frobenius_euler_text(capsys):
    code, out, _ = run(capsys, "represent", "fe(3)", "--basis", "degen-fe", "--u", "2", "--lambda", "1/2")
    coeffs = [F(c) for c in json.loads(out)["coeffs"]]
    assert coeffs == [F(1, 2) ** (3 - k) * stirling2(3, k) for k in range(4)]


def test_represent_all_variants(capsys):
    code, out, _ = run(
        capsys, "represent", "[1, \"1/2\", 3]", "--basis", "degen-fe", "--lambda", "1/3", "--u", "-3", "--r", "3",
        "--all-variants",
    )
    doc = json.loads(out)
    assert set(doc["variants"]) == {"operator", "delta", "binomial", "ladder", "stirling"}
    assert all(all(row.values()) for row in doc["agreement"].values())


def test_represent_lambda_zero(capsys):
    code, _, err = run(capsys, "represent", "0,1", "--basis", "degen-fe", "--lambda", "0", "--u", "2")
    assert code == 2
    assert "lambda must be nonzero" in err
    code, out, _ = run(
        capsys, "represent", "0,1", "--basis", "degen-fe", "--lambda", "0", "--u", "2", "--variant", "stirling"
    )
    assert code == 0


def test_represent_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "p.json"
    path.write_text('["1/2", 0, 1]')
    code, out, _ = run(capsys, "represent", f"@{path}", "--basis", "euler")
    assert code == 0 and json.loads(out)["verified"]
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1,2,3"))
    code, out, _ = run(capsys, "represent", "-", "--basis", "bernoulli")
    assert code == 0 and json.loads(out)["verified"]


def test_represent_parse_error(capsys):
    code, _, err = run(capsys, "represent", "1,x,3", "--basis", "euler")
    assert code == 2
    assert err


def test_verify_5f(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "5f", "--m", "1", "--n", "1", "--u", "2", "--v", "3")
    assert code == 0
    assert all(r["holds"] for r in lines(out))


def test_verify_5f_guard(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "5f", "--u", "1/2", "--v", "2")
    rows = lines(out)
    assert code == 1
    assert rows and all(r["error"] == "uv must not equal 1" for r in rows)


def test_verify_miki_reports_literal_form(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "miki", "--n", "2..4")
    rows = lines(out)
    by = {(r["name"], r["params"]["n"], r["params"].get("x")): r["holds"] for r in rows}
    assert by[("miki", 2, None)]
    assert not by[("miki", 3, None)]
    assert all(by[("miki@x", n, x)] for n in (2, 3, 4) for x in ("0", "1/2"))
    assert all(by[("miki-full", n, None)] for n in (2, 3, 4))
    assert code == 1


def test_verify_all_sec5(capsys):
    for ident in ("5a", "5b", "5c", "5d", "5e"):
        code, out, _ = run(capsys, "verify", "--identity", ident, "--n", "2..5", "--m", "0..2", "--lambda", "1/2")
        assert code == 0, ident


def test_verify_latex(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "5a", "--n", "3", "--format", "latex")
    assert "holds=True" in out


def test_byte_identical_runs():
    env = dict(os.environ)
    cmd = [sys.executable, "-m", "degenfe", "verify", "--identity", "5e", "--n", "1..3", "--m", "0..2"]
    a = subprocess.run(cmd, capture_output=True, env=env)
    b = subprocess.run(cmd, capture_output=True, env=env)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout


@pytest.mark.parametrize("argv", [["family", "--kind", "nope"], ["verify", "--identity", "5z"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
