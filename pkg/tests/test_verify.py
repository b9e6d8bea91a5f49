import json
import warnings
from pathlib import Path

import pytest

from hitcalc.verify import (
    FixtureError,
    load_basis,
    load_patterns,
    load_table,
    parse_polynomial,
    parse_relation,
    parse_relation_file,
    verify_basis,
    verify_relation,
    verify_table,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def test_parse_relation_round_trip():
    rel = parse_relation(
        "(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1) + (1,1,2,1) + (1,1,1,2)",
        "inline")
    assert rel.lhs == (2, 1, 1, 1)
    assert rel.applied == ((1, frozenset({(1, 1, 1, 1)})),)
    assert rel.plain == frozenset({(1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2)})
    assert rel.modulus is None
    assert rel.arity == 4 and rel.degree == 5


def test_parse_relation_with_modulus():
    rel = parse_relation(
        "(3,4,1,6) = Sq^2[(5,2,2,3)+(2,3,4,3)] + (3,2,4,5) mod L(2;2;2)",
        "inline")
    assert rel.modulus == (2, 2, 2)
    ops = dict(rel.applied)
    assert ops[2] == frozenset({(5, 2, 2, 3), (2, 3, 4, 3)})


def test_relation_verdicts():
    exact = parse_relation(
        "(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1) + (1,1,2,1) + (1,1,1,2)",
        "t")
    assert verify_relation(exact).status == "exact"
    broken = parse_relation("(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1)", "t")
    out = verify_relation(broken)
    assert out.status == "fails" and not out.ok
    assert out.residual == frozenset({(1, 1, 2, 1), (1, 1, 1, 2)})


def test_duplicate_monomials_fold_with_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rel = parse_relation(
            "(2,1,1,1) = Sq^1[(1,1,1,1)] + (1,2,1,1) + (1,2,1,1)"
            " + (1,2,1,1) + (1,1,2,1) + (1,1,1,2)", "t")
    assert len(caught) == 1
    assert "folds out" in str(caught[0].message)
    assert (1, 2, 1, 1) in rel.plain  # three copies leave one


@pytest.mark.parametrize("text,fragment", [
    ("(2,1,1) = Sq^1[(1,1,1,1)]", "arity"),
    ("(2,1,1,1) = Sq^2[(1,1,1,1)]", "degree"),
    ("(2,1,1,1) = Sq^1[(1,1,1,1)] mod L(3;2)", "degree 7"),
    ("(2,1,1,1) = Sq^0[(2,1,1,1)]", "identity"),
    ("(2,1,1,1) + (1,2,1,1)", "expected '='"),
    ("(2,1,1,1) = ", "expected '('"),
])
def test_parse_relation_rejects(text, fragment):
    with pytest.raises(FixtureError) as err:
        parse_relation(text, "bad")
    assert fragment in str(err.value)


def test_parse_relation_file_reports_line(tmp_path):
    path = tmp_path / "rels.rel"
    path.write_text("# comment\n\n(2,1,1,1) = Sq^1[(1,1,1)]\n")
    with pytest.raises(FixtureError) as err:
        parse_relation_file(path)
    assert "rels.rel:3" in str(err.value)


def test_parse_polynomial():
    f = parse_polynomial("(2,0,0,0) + (0,2,0,0)")
    assert f == frozenset({(2, 0, 0, 0), (0, 2, 0, 0)})
    with pytest.raises(FixtureError):
        parse_polynomial("(2,0,0,0) + ")


def test_shipped_relation_corpus_parses():
    paths = sorted((DATA / "relations").glob("*.rel"))
    assert len(paths) == 18
    total = sum(len(parse_relation_file(p)) for p in paths)
    assert total == 60


def test_load_table_and_family_check(tmp_path):
    rows = load_table(DATA / "dimensions.csv")
    assert len(rows) == 51
    assert sum(r.tier == "required" for r in rows) == 41
    assert {r.tier for r in rows} == {"required", "optional"}
    # a degree that disagrees with the family formula is refused
    bad = tmp_path / "bad.csv"
    bad.write_text("family,s,t,u,degree,expected_dim,tier\n"
                   "2^{s+1}-3,2,,,6,15,required\n")
    with pytest.raises(FixtureError):
        load_table(bad)
    # missing required parameter
    bad.write_text("family,s,t,u,degree,expected_dim,tier\n"
                   "2^{s+t}+2^s-2,1,,,4,21,required\n")
    with pytest.raises(FixtureError):
        load_table(bad)


def test_verify_table_small(tmp_path):
    table = tmp_path / "t.csv"
    table.write_text("family,s,t,u,degree,expected_dim,tier\n"
                     "2^{s+1}-3,1,,,1,4,required\n"
                     "2^{s+1}-2,1,,,2,5,required\n")
    outcomes = verify_table(table, tier="required")
    assert [o.status for o in outcomes] == ["pass", "fail"]
    assert outcomes[1].computed == 6


def test_load_basis_validation(tmp_path):
    good = load_basis(DATA / "bases" / "deg05.json")
    assert good[0] == 4 and good[1] == 5 and len(good[2]) == 15
    dup = tmp_path / "dup.json"
    dup.write_text(json.dumps({"k": 4, "degree": 1,
                               "expected": [[1, 0, 0, 0], [1, 0, 0, 0]]}))
    with pytest.raises(FixtureError):
        load_basis(dup)
    wrong_degree = tmp_path / "wd.json"
    wrong_degree.write_text(json.dumps({"k": 4, "degree": 2,
                                        "expected": [[1, 0, 0, 0]]}))
    with pytest.raises(FixtureError):
        load_basis(wrong_degree)


def test_verify_basis_flags_differences(tmp_path):
    tampered = tmp_path / "t.json"
    tampered.write_text(json.dumps({
        "k": 4, "degree": 1,
        "expected": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]}))
    out = verify_basis(tampered)
    assert out.status == "fail"
    assert out.missing == ()
    assert out.unexpected == ((0, 0, 0, 1),)


def test_load_patterns_rejects_ragged(tmp_path):
    bad = tmp_path / "p.txt"
    bad.write_text("1101/111\n")
    with pytest.raises(FixtureError):
        load_patterns(bad)
