import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from hitcalc.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture()
def runner():
    return CliRunner()


def combined(result):
    # click changed where stderr lands across 8.x; fold both streams
    try:
        err = result.stderr
    except (ValueError, AttributeError):
        err = ""
    return result.output + err


def test_help(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    assert "Usage" in result.output


def test_cohit_basic(runner):
    result = runner.invoke(main, ["cohit", "--vars", "4", "--degree", "6"])
    assert result.exit_code == 0
    assert "degree 6 in 4 variables" in result.output
    assert "84 monomials" in result.output
    assert "dimension 24" in result.output


def test_cohit_json_and_split(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["cohit", "--vars", "4", "--degree", "5",
                                  "--json", str(out), "--q-r"])
    assert result.exit_code == 0
    assert "split: 12 with a zero exponent, 3 all positive" in result.output
    data = json.loads(out.read_text())
    assert data["k"] == 4 and data["degree"] == 5
    assert data["dimension"] == 15
    assert len(data["admissible"]) == 15


def test_cohit_capacity_refusal(runner):
    result = runner.invoke(main, ["cohit", "--vars", "4", "--degree", "95",
                                  "--mode", "full"])
    assert result.exit_code == 2
    assert "error:" in combined(result)


def test_is_hit_exit_codes(runner):
    yes = runner.invoke(main, ["is-hit", "--vars", "4",
                               "--poly", "(2,0,0,0)"])
    assert yes.exit_code == 0 and "hit" in yes.output
    no = runner.invoke(main, ["is-hit", "--vars", "4",
                              "--poly", "(1,0,0,0)"])
    assert no.exit_code == 1 and "not hit" in no.output
    bad = runner.invoke(main, ["is-hit", "--vars", "3",
                               "--poly", "(2,0,0,0)"])
    assert bad.exit_code == 2


def test_verify_relations_good_and_bad(runner, tmp_path):
    good = runner.invoke(main, ["verify-relations",
                                str(DATA / "relations" / "deg06.rel")])
    assert good.exit_code == 0
    assert "4/4 relations hold" in good.output

    modl = runner.invoke(main, ["verify-relations",
                                str(DATA / "relations" / "deg22.rel")])
    assert modl.exit_code == 0
    assert "[holds_mod_L]" in modl.output
    assert "6/6 relations hold" in modl.output

    bad = tmp_path / "bad.rel"
    bad.write_text("(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1)\n")
    result = runner.invoke(main, ["verify-relations", str(bad)])
    assert result.exit_code == 1
    assert "FAIL" in result.output and "residual" in result.output
    assert "0/1 relations hold" in result.output


def test_verify_table_outcomes(runner, tmp_path):
    table = tmp_path / "t.csv"
    table.write_text("family,s,t,u,degree,expected_dim,tier\n"
                     "2^{s+1}-3,1,,,1,4,required\n"
                     "2^{s+1}-2,1,,,2,6,required\n")
    ok = runner.invoke(main, ["verify-table", str(table)])
    assert ok.exit_code == 0
    assert "2/2 rows pass" in ok.output

    table.write_text("family,s,t,u,degree,expected_dim,tier\n"
                     "2^{s+1}-3,1,,,1,5,required\n")
    fail = runner.invoke(main, ["verify-table", str(table)])
    assert fail.exit_code == 1
    assert "computed 4, table says 5" in fail.output

    table.write_text("family,s,t,u,degree,expected_dim,tier\n"
                     "2^{s+1}-3,1,,,1,4,required\n"
                     "2^{s+1}-3,6,,,125,1,required\n")
    skipped = runner.invoke(main, ["verify-table", str(table),
                                   "--mode", "full"])
    assert skipped.exit_code == 2
    assert "skip" in skipped.output
    assert "1/2 rows pass, 1 skipped" in skipped.output


def test_verify_basis_cli(runner, tmp_path):
    good = runner.invoke(main, ["verify-basis",
                                str(DATA / "bases" / "deg01.json"),
                                str(DATA / "bases" / "deg05.json")])
    assert good.exit_code == 0
    assert good.output.count("pass") == 2

    tampered = tmp_path / "t.json"
    tampered.write_text(json.dumps({
        "k": 4, "degree": 1,
        "expected": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]}))
    result = runner.invoke(main, ["verify-basis", str(tampered)])
    assert result.exit_code == 1
    assert "unexpected (0,0,0,1)" in result.output


def test_kameko_cli(runner):
    hit = runner.invoke(main, ["kameko", "--vars", "4", "--degree", "12"])
    assert hit.exit_code == 0
    assert "degree 12 against degree 4: pass" in hit.output

    idle = runner.invoke(main, ["kameko", "--vars", "4", "--degree", "11"])
    assert idle.exit_code == 0
    assert "nothing to compare" in idle.output


def test_filters_cli(runner):
    result = runner.invoke(main, ["filters", "--vars", "4", "--degree", "6"])
    assert result.exit_code == 0
    assert "84 monomials" in result.output
    assert "minimal spike (3,3,0,0)" in result.output
    assert "survivors" in result.output
