import json

import pytest

from negacyclic import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_generator_examples():
    f = cli.parse_generator("(x+1)^4;0;0;0", 5, 5)
    assert f.f0.coeffs == (1, 4, 1, 4, 1)
    assert cli.parse_generator("0;0;0;(x+1)^3", 5, 5).f3.coeffs == (1, 3, 3, 1)
    g = cli.parse_generator("1+2x+x^3", 5, 5)
    assert g.f0.coeffs == (1, 2, 0, 1) and g.f1.is_zero()
    assert cli.parse_generator("7x", 5, 5).f0.coeffs == (0, 2)


def test_parse_generator_round_trip():
    f = cli.parse_generator("3(x+1)^2;x^4-1;2;x", 5, 5)
    assert cli.parse_generator(f.to_text(), 5, 5) == f


def test_analyze_u_v(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "5", "--n", "5", "--gen", "0;1;0;0", "--gen", "0;0;1;0")
    assert code == 0
    rep = json.loads(out)
    assert rep["rank"] == 10 and rep["is_free"] is False
    assert len(rep["spanning_set"]) == 10
    assert rep["distance"]["d_oracle"] == 1


def test_distance_n9_t4(capsys):
    code, out, _ = run(capsys, "distance", "--p", "3", "--n", "9", "--gen", "0;0;0;(x+1)^4")
    assert code == 0
    rep = json.loads(out)
    assert rep == {"d_oracle": 3, "d_formula": 4, "method": "support", "hypothesis_met": False,
                   "agreement": False}


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--p", "5")
    assert code == 0
    verdicts = json.loads(out)
    assert len(verdicts) == 40
    assert all(v["verdict"] == "match" for v in verdicts if v["table"] in (1, 2))


@pytest.mark.parametrize("argv", [
    ["distance", "--p", "5", "--n", "5", "--gen", "x+*"],
    ["distance", "--p", "5", "--n", "4", "--gen", "1"],
    ["distance", "--p", "4", "--n", "5", "--gen", "1"],
    ["distance", "--p", "5", "--n", "5"],
    ["tables", "--p", "3"],
    ["catalog", "--p", "5", "--n", "5", "--family", "bogus"],
    ["distance", "--p", "5", "--n", "5", "--gen", "1", "--support-budget", "0"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_budget_exit(capsys):
    code, out, err = run(capsys, "distance", "--p", "3", "--n", "27", "--gen", "0;0;0;(x+1)^13",
                         "--support-budget", "10", "--enum-budget", "10")
    assert code == 3
    assert json.loads(out)["d_oracle"] == "skipped(budget)"
    assert "budget" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--count", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "property,passed,total"
    assert all(line.split(",")[1] == line.split(",")[2] for line in lines[1:])


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_invariant_suite", lambda *a, **k: {"property_1": [1, 2]})
    code, _, err = run(capsys, "verify", "--count", "1")
    assert code == 4 and "invariant" in err


def test_catalog_csv(capsys):
    code, out, _ = run(capsys, "catalog", "--p", "3", "--n", "9", "--family", "uv-only", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# p=3 n=9 family=uv-only seed=0"
    assert lines[1].split(",") == list(cli.cat.CSV_FIELDS)
    assert len(lines) == 10


def test_text_format(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "5", "--n", "5", "--gen", "0;0;0;1", "--format", "text")
    assert code == 0 and "rank: 5" in out


def test_byte_identical(capsys):
    argv = ["catalog", "--p", "3", "--n", "5", "--coeff-budget", "4", "--seed", "9"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_cyclic_flag(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "5", "--n", "5", "--gen", "x+4", "--cyclic")
    assert code == 0
    rep = json.loads(out)
    assert rep["kind"] == "cyclic" and rep["g1"] == "x+4"
    assert rep["distance"]["d_formula"] == "not-applicable"
