import csv
import io
import json
import subprocess
import sys

import pytest

from incpoly import cli
from incpoly.identities import CATALOG, IdentityId
from incpoly.polynomial import Polynomial, from_json, parse


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_single_cell(capsys):
    code, out, _ = run(capsys, "table", "fib", "--n-max", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows == [["n \\ l", "0"], ["1", "1"]]


def test_table_literal_x(capsys):
    _, out, _ = run(capsys, "table", "lucas", "--n-max", "3", "--literal-x", "--format", "csv")
    assert "x^3 + 3*x" in out and "h" not in out.split("\n", 1)[1]


def test_table_other_h(capsys):
    _, out, _ = run(capsys, "table", "fib", "--h", "2*x", "--n-max", "3", "--format", "csv")
    assert list(csv.reader(io.StringIO(out)))[3] == ["3", "4*x^2", "4*x^2 + 1"]


def test_table_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "fib", "--h", "x^2 + 1", "--n-max", "6", "--format", "json")
    doc = json.loads(out)
    h = parse("x^2 + 1")
    from incpoly.incomplete import fib_incomplete
    for row in doc["rows"]:
        for cell in row["cells"]:
            p = from_json(cell["poly"])
            assert p == fib_incomplete(h, row["n"], cell["l"])
            assert parse(cell["text"]) == p


def test_table_latex(capsys):
    _, out, _ = run(capsys, "table", "lucas", "--n-max", "2", "--format", "latex")
    assert out.startswith("\\begin{tabular}")
    assert "$h^2 + 2$" in out


def test_eval_fibonacci(capsys):
    code, out, _ = run(capsys, "eval", "fib", "--at", "1", "--n-max", "10", "--format", "csv")
    values = [int(r[2]) for r in list(csv.reader(io.StringIO(out)))[1:]]
    assert code == 0
    assert values == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_eval_incomplete_point(capsys):
    _, out, _ = run(capsys, "eval", "fib_incomplete", "--at", "1", "--n", "7", "--l", "2", "--format", "json")
    assert json.loads(out)["values"] == [{"n": 7, "l": 2, "value": "12"}]


def test_eval_lucas_at_zero(capsys):
    _, out, _ = run(capsys, "eval", "lucas", "--at", "0", "--n", "2", "--format", "csv")
    assert out.splitlines()[1] == "2,,2"


def test_eval_incomplete_sweep_skips_invalid(capsys):
    _, out, _ = run(capsys, "eval", "lucas_incomplete", "--l", "2", "--n-max", "6", "--format", "json")
    assert [v["n"] for v in json.loads(out)["values"]] == [4, 5, 6]


def test_eval_out_of_range(capsys):
    code, _, err = run(capsys, "eval", "fib_incomplete", "--n", "4", "--l", "3")
    assert code == 2 and "error" in err


def test_parse_error_exit(capsys):
    code, out, err = run(capsys, "table", "fib", "--h", "x^^2")
    assert code == 2 and out == "" and "position 2" in err


def test_usage_error_exit(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "verify", "--n-max", "0")
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--h", "x", "--n-max", "12")
    assert code == 0
    assert "18/18 reports all_pass" in out


def test_verify_json_default_sample(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "8", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["all_pass"]
    assert len(doc["reports"]) == 18 * 5
    assert {r["h"] for r in doc["reports"]} == {"1", "2", "x", "x^2 + 1", "3*x"}


def test_verify_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--h", "x", "--n-max", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert any(r["points"] == 0 and r["status"] == "all_pass" for r in doc["reports"])


def test_verify_corrupted_identity_exit_code():
    import dataclasses

    good = CATALOG[IdentityId.LUCAS_COMPLETE_RELATION]
    bad = dataclasses.replace(good, sides=lambda t, a: (t.lucas(a["n"]), t.fib(a["n"] + 1)))
    cfg = cli.CliConfig(command="verify", h_text=["x"], n_max=6, format="json")
    text, code = cli.cmd_verify(cfg, identities=[bad])
    doc = json.loads(text)
    assert code == 1
    assert doc["reports"][0]["status"] == "falsified"
    assert doc["reports"][0]["counterexamples"][0]["args"] == {"n": 2}


def test_series_fib_incomplete(capsys):
    code, out, _ = run(capsys, "series", "fib_incomplete", "--l", "1", "--order", "10", "--format", "json")
    doc = json.loads(out)
    coeffs = [from_json(c) for c in doc["expansions"][0]["coeffs"]]
    assert code == 0
    assert [str(c) for c in coeffs[:6]] == ["0", "0", "0", "x^2 + 1", "x^3 + 2*x", "x^4 + 3*x^2"]
    assert doc["expansions"][0]["comparison"]["status"] == "all_match"


def test_series_fib_complete(capsys):
    code, out, _ = run(capsys, "series", "fib_complete", "--order", "5", "--format", "csv")
    col = [r[2] for r in list(csv.reader(io.StringIO(out)))[1:]]
    assert code == 0
    assert col == ["0", "1", "x", "x^2 + 1", "x^3 + 2*x", "x^4 + 3*x^2 + 1"]


def test_series_lucas_both_variants(capsys):
    code, out, _ = run(capsys, "series", "lucas_incomplete", "--l", "0")
    assert code == 1
    assert "printed: first mismatch at n=3" in out
    assert "candidate: all_match through order 26" in out


def test_series_lucas_candidate_only(capsys):
    code, out, _ = run(capsys, "series", "lucas_incomplete", "--l", "2", "--variant", "candidate",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 30
    assert [e["variant"] for e in doc["expansions"]] == ["candidate"]


def test_series_needs_l(capsys):
    code, _, err = run(capsys, "series", "fib_incomplete")
    assert code == 2 and "--l" in err


def test_out_path(tmp_path, capsys):
    target = tmp_path / "t.md"
    code, out, _ = run(capsys, "table", "fib", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("| n \\ l |")


def test_deterministic_output(capsys):
    outs = [run(capsys, "verify", "--n-max", "6")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "incpoly", "eval", "lucas", "--h", "1", "--n", "5"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "| 5 |  | 11 |" in res.stdout
