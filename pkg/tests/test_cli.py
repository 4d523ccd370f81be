import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from polybern.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_numbers_csv(capsys):
    status, out, _ = run(capsys, "numbers", "--k", "1", "--n-max", "4", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["value"] for r in rows] == ["1", "1/2", "1/6", "0", "-1/30"]


def test_numbers_json(capsys):
    status, out, _ = run(capsys, "numbers", "--k", "2", "--n-max", "2")
    assert status == 0
    body = json.loads(out)
    assert [row["value"] for row in body["numbers"]] == ["1", "1/4", "-1/36"]
    status, out, _ = run(capsys, "numbers", "--k", "0", "--n-max", "0")
    assert [row["value"] for row in json.loads(out)["numbers"]] == ["1"]


def test_numbers_latex(capsys):
    status, out, _ = run(capsys, "numbers", "--k", "2", "--n-max", "2", "--format", "latex")
    assert status == 0
    assert r"-\frac{1}{36}" in out and out.startswith(r"\begin{tabular}")


@pytest.mark.parametrize(
    "argv, coeffs",
    [
        (["--family", "poly-bernoulli", "--k", "2", "--n", "1"], ["1/4", "1"]),
        (["--family", "euler", "--r", "0", "--n", "3"], ["0", "0", "0", "1"]),
        (["--family", "higher-bernoulli", "--r", "1", "--n", "2"], ["1/6", "-1", "1"]),
        (["--family", "frobenius-euler", "--r", "1", "--lambda", "3", "--n", "1"], ["1/2", "1"]),
    ],
)
def test_poly(capsys, argv, coeffs):
    status, out, _ = run(capsys, "poly", *argv)
    assert status == 0
    assert json.loads(out)["coeffs"] == coeffs


def test_poly_csv_and_latex(capsys):
    _, out, _ = run(capsys, "poly", "--family", "higher-bernoulli", "--r", "1", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["power,coeff", "0,1/6", "1,-1", "2,1"]
    _, out, _ = run(capsys, "poly", "--family", "higher-bernoulli", "--r", "1", "--n", "2", "--format", "latex")
    assert out.strip() == r"$$x^{2} - x + \frac{1}{6}$$"


def test_poly_rejects_lambda_one(capsys):
    status, _, err = run(capsys, "poly", "--family", "frobenius-euler", "--r", "1", "--lambda", "1", "--n", "2")
    assert status == 2
    assert "lambda" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["numbers", "--k", "x", "--n-max", "3"],
        ["numbers", "--k", "1", "--n-max", "-1"],
        ["poly", "--family", "hermite", "--n", "2"],
        ["check", "--identity", "nosuch"],
        ["check", "--lambda", "1/0"],
        ["check", "--lambda", "1"],
        ["connect", "--source-family", "euler", "--target-family", "euler", "--target-r", "-1", "--n", "2"],
        [],
    ],
)
def test_invalid_invocations_exit_2(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ""
    assert "usage" in err


def test_check_small_grid(capsys):
    status, out, err = run(capsys, "check", "--identity", "thm1", "--n-max", "3", "--k-min", "1", "--k-max", "1")
    assert status == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 4
    assert all(r["pass"] for r in records)
    assert set(records[0]) == {"identity", "params", "lhs", "rhs", "pass"}
    assert "4 passed, 0 failed" in err


def test_check_csv_and_latex(capsys):
    args = ["check", "--identity", "thm6", "--n-max", "2", "--k-min", "0", "--k-max", "0", "--r-max", "1",
            "--lambda", "1/2"]
    status, out, _ = run(capsys, *args, "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3 * 2
    assert rows[-1]["params"] == "n=2;k=0;r=1;lambda=1/2"
    status, out, _ = run(capsys, *args, "--format", "latex")
    assert status == 0 and out.count("pass") == 6


def test_connect(capsys):
    status, out, _ = run(
        capsys, "connect", "--source-family", "poly-bernoulli", "--source-k", "1",
        "--target-family", "higher-bernoulli", "--target-r", "1", "--n", "1",
    )
    assert status == 0
    assert json.loads(out)["matrix"][1] == ["1", "1"]
    status, out, _ = run(
        capsys, "connect", "--source-family", "poly-bernoulli", "--source-k", "2",
        "--target-family", "euler", "--target-r", "1", "--n", "0",
    )
    assert json.loads(out)["matrix"] == [["1"]]
    status, out, _ = run(
        capsys, "connect", "--source-family", "euler", "--source-r", "2",
        "--target-family", "euler", "--target-r", "2", "--n", "3", "--format", "csv",
    )
    rows = [line.split(",")[1:] for line in out.splitlines()[1:]]
    assert rows == [["1" if i == j else "0" for j in range(4)] for i in range(4)]


def test_out_file_and_determinism(capsys, tmp_path):
    target = tmp_path / "table.json"
    argv = ["check", "--identity", "thm4", "--n-max", "3", "--k-min", "-1", "--k-max", "1", "--r-max", "2"]
    assert main(argv + ["--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    main(argv)
    assert capsys.readouterr().out == target.read_text()


def test_rationals_round_trip(capsys):
    _, out, _ = run(capsys, "check", "--identity", "thm3", "--n-max", "6", "--k-min", "-2", "--k-max", "3")
    for line in out.splitlines():
        record = json.loads(line)
        for side in ("lhs", "rhs"):
            for s in record[side]:
                q = Fraction(s)
                assert str(q) == s
                assert q.denominator > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polybern", "numbers", "--k", "-1", "--n-max", "3", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1:] == ["0,1", "1,2", "2,4", "3,8"]
