"""Command line interface: formats, outputs, budgets, error reporting."""

import csv
import io
import json

import pytest

import sturmlab.cli


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_word_text_output(run_cli):
    rc, out, err = run_cli(["word", "--alpha", "1/e", "--n", "21"])
    assert rc == 0
    assert out.strip() == "010010010100100100101"


def test_word_json_output(run_cli):
    rc, out, err = run_cli(["word", "--alpha", "1/e", "--n", "8", "--format", "json"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["alpha"] == "1/e"
    assert doc["n"] == 8
    assert doc["word"] == "01001001"
    assert "budget" in doc["meta"]


def test_factors_csv(run_cli):
    rc, out, err = run_cli(["factors", "--alpha", "1/e", "--n", "6"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["index", "factor"]
    assert [r[1] for r in rows] == [
        "101001",
        "100101",
        "100100",
        "010100",
        "010010",
        "001010",
        "001001",
    ]


def test_matrix_csv(run_cli):
    rc, out, err = run_cli(["matrix", "--alpha", "1/e", "--n", "6"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == [f"c{j}" for j in range(1, 7)]
    assert rows[0] == ["1", "1", "1", "0", "0", "0"]
    assert rows[2] == ["0", "-1", "-1", "-1", "-1", "0"]


def test_perm_csv_and_json(run_cli):
    rc, out, err = run_cli(["perm", "--alpha", "phi", "--n", "5"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["n", "perm", "cycles", "sign", "order"]
    assert rows == [["5", "5 2 4 1 3", "(1 5 3 4)(2)", "-1", "4"]]

    rc, out, err = run_cli(["perm", "--alpha", "phi", "--n", "5", "--format", "json"])
    doc = json.loads(out)
    assert doc["perm"] == [5, 2, 4, 1, 3]
    assert doc["cycles"] == [[1, 5, 3, 4], [2]]
    assert doc["sign"] == -1
    assert doc["order"] == "4"


def test_table_csv_spot_rows(run_cli):
    rc, out, err = run_cli(["table", "--alpha", "e", "--from", "70", "--to", "72"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["n", "sign", "order"]
    assert rows == [["70", "-1", "14"], ["71", "-1", "14"], ["72", "1", "6840"]]


def test_table_accepts_cf_expression_for_same_value(run_cli):
    rc, out_cf, err = run_cli(["table", "--alpha", "cf:[0;1,1,...]", "--from", "5", "--to", "5"])
    assert rc == 0
    rc, out_phi, err = run_cli(["table", "--alpha", "phi", "--from", "5", "--to", "5"])
    assert rc == 0
    assert out_cf == out_phi
    rc, out, err = run_cli(["table", "--alpha", "phi", "--from", "1", "--to", "1"])
    assert list(csv.reader(io.StringIO(out)))[1] == ["1", "1", "1"]


def test_volume_csv(run_cli):
    rc, out, err = run_cli(["volume", "--alpha", "e", "--n", "6"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert rows == [["6", "1/720"]]


def test_integral_csv_and_tsv_plot_data(run_cli):
    rc, out, err = run_cli(["integral", "--to", "4"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["n", "integral", "decimal", "cells", "coverage_ok"]
    assert [r[1] for r in rows] == ["1", "3/2", "11/6", "31/12"]
    assert all(r[4] == "1" for r in rows)

    rc, out, err = run_cli(["integral", "--to", "4", "--format", "tsv"])
    assert rc == 0
    lines = [line.split("\t") for line in out.strip().splitlines()]
    assert [int(a) for a, _ in lines] == [1, 2, 3, 4]
    assert abs(float(lines[2][1]) - 11 / 6) < 1e-12


def test_signsum_csv(run_cli):
    rc, out, err = run_cli(["signsum", "--alpha", "e", "--N", "10"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["N", "sum", "max_abs"]
    assert rows == [["10", "-4", "5"]]


def test_brange_found_and_missing(run_cli):
    rc, out, err = run_cli(["brange", "--alpha", "1/e", "--target", "2", "--kmax", "100"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["target", "kmax", "k"]
    assert rows[0][0] == "2" and rows[0][2] != "none"

    rc, out, err = run_cli(
        ["brange", "--alpha", "phi", "--target", "999999", "--kmax", "50", "--format", "json"]
    )
    assert rc == 0
    assert json.loads(out)["k"] is None


def test_congruence_csv(run_cli):
    rc, out, err = run_cli(
        ["congruence", "--a", "phi", "--b", "(3-1*sqrt(5))/2", "--n", "9"]
    )
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["n", "congruent", "factors_equal", "factors_complement"]
    assert rows == [["9", "1", "0", "1"]]


def test_out_writes_file(run_cli, tmp_path):
    target = tmp_path / "perm.csv"
    rc, out, err = run_cli(["perm", "--alpha", "phi", "--n", "5", "--out", str(target)])
    assert rc == 0
    assert out == ""
    assert "5 2 4 1 3" in target.read_text()


def test_bad_slope_reports_error(run_cli):
    rc, out, err = run_cli(["perm", "--alpha", "2/3", "--n", "5"])
    assert rc == 1
    assert err.startswith("error[SlopeSyntaxError]")
    assert "2/3" in err


def test_budget_flag_and_env(run_cli, monkeypatch):
    rc, out, err = run_cli(["table", "--alpha", "e", "--from", "130", "--to", "136", "--budget", "2"])
    assert rc == 1
    assert err.startswith("error[RefinementBudgetExceeded]")

    monkeypatch.setenv("SturmLAB_BUDGET", "2")
    rc, out, err = run_cli(["table", "--alpha", "e", "--from", "130", "--to", "136"])
    assert rc == 1
    assert err.startswith("error[RefinementBudgetExceeded]")

    # explicit flag wins over the environment
    rc, out, err = run_cli(
        ["table", "--alpha", "e", "--from", "130", "--to", "136", "--budget", "10000"]
    )
    assert rc == 0


def test_bad_format_rejected(run_cli):
    with pytest.raises(SystemExit):
        sturmlab.cli.main(["perm", "--alpha", "phi", "--n", "5", "--format", "xml"])


def test_selftest_passes(run_cli):
    rc, out, err = run_cli(["selftest", "--seed", "1"])
    assert rc == 0
    assert "FAIL" not in out
    assert out.strip().endswith("checks passed")
