"""Solver checks against a from-scratch reference.

naive_cohit below ranks the images of every positive operator Sq^i with a
dictionary-based elimination, no bit packing, no operator pruning. The
package only ever rows out Sq^1, Sq^2, Sq^4, ..., so agreement here also
guards the generating-set reduction.
"""
from math import comb

import pytest

from hitcalc.gf2 import CapacityError
from hitcalc.monomials import degree, monomials_in_degree, tau
from hitcalc.solver import (
    FULL_AUTO_LIMIT,
    cohit,
    clear_caches,
    delta_matches,
    is_hit,
    kameko_check,
    qr_split,
    solve,
    survivor_data,
)
from hitcalc.steenrod import poly, poly_add, sq


def naive_cohit(k, n):
    """Admissible count from all Sq^i images, reduced by dict elimination."""
    if n == 0:
        return 1
    universe = {m: p for p, m in enumerate(monomials_in_degree(k, n))}
    pivots = {}

    def insert(vec):
        while vec:
            top = max(vec)
            if top not in pivots:
                pivots[top] = vec
                return
            vec = vec ^ pivots[top]

    for i in range(1, n + 1):
        for m in monomials_in_degree(k, n - i):
            insert(frozenset(universe[t] for t in sq(i, m)))
    return len(universe) - len(pivots)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_small_arity_dims_match_reference(k):
    for n in range(0, 15):
        assert cohit(k, n).cohit_dimension == naive_cohit(k, n), (k, n)


def test_four_variable_dims_match_reference():
    for n in range(0, 11):
        assert cohit(4, n).cohit_dimension == naive_cohit(4, n), n


def test_one_variable_dims_follow_peterson():
    # single variable: x^n survives exactly when n+1 is a power of two
    for n in range(0, 65):
        expected = 1 if (n + 1) & n == 0 else 0
        assert cohit(1, n).cohit_dimension == expected


def test_report_fields_and_json():
    report = cohit(4, 7)
    assert report.monomial_count == comb(10, 3)
    assert report.hit_rank + report.cohit_dimension == report.monomial_count
    data = report.to_json_dict()
    assert data["k"] == 4 and data["degree"] == 7
    assert data["dimension"] == 35
    assert data["monomials"] == report.monomial_count
    assert data["hit_rank"] == report.hit_rank
    assert [tuple(m) for m in data["admissible"]] == list(report.admissible)


def test_is_hit_basics():
    assert is_hit(poly((2, 0, 0, 0)))           # Sq^1 of x1
    assert not is_hit(poly((1, 0, 0, 0)))
    assert not is_hit(poly((3, 3, 0, 0)))       # a spike is never hit
    assert is_hit(frozenset())                  # the zero polynomial
    f = poly_add(poly((2, 1, 1, 1)), sq(1, (1, 1, 1, 1)))
    # (2,1,1,1) + Sq^1(1,1,1,1) = (1,2,1,1)+(1,1,2,1)+(1,1,1,2), not hit
    assert not is_hit(f)
    g = poly_add(f, frozenset({(1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2)}))
    assert is_hit(g)
    with pytest.raises(ValueError):
        is_hit(frozenset({(1, 0, 0, 0), (2, 0, 0, 0)}))  # mixed degrees


def test_qr_split_additivity_small():
    for n in range(0, 16):
        q, r = qr_split(4, n)
        assert q + r == cohit(4, n).cohit_dimension, n
    # all-positive monomials need degree >= 4, so r vanishes below that
    assert qr_split(4, 3) == (14, 0)
    # degree 5: the all-positive admissible monomials are the three
    # arrangements of exponents (1,1,1,2)
    assert qr_split(4, 5) == (12, 3)


def test_survivor_data_consistency():
    for n in (11, 14, 24):
        data = survivor_data(4, n)
        for cls in data.killed:
            assert cls not in data.survivors
        if data.survivors:
            assert data.min_survivor == min(data.survivors)
        universe = monomials_in_degree(4, n)
        killed = set(data.killed)
        for m in universe:
            assert (tau(m) in killed) == (tau(m) not in data.survivors)


def test_delta_matches():
    # (3,5,8,6) has digit rows 1100/1001/0101/0010
    x = (3, 5, 8, 6)
    assert delta_matches(((1, 1, 0, 0),), x)
    assert delta_matches(((1, 0, 0, 1), (0, 1, 0, 1)), x)  # rows 1..2
    assert not delta_matches(((1, 0, 1, 0), (0, 1, 0, 1)), x)
    assert not delta_matches(((1, 1, 1, 1),), x)
    with pytest.raises(ValueError):
        delta_matches(((1, 0),), x)


def test_kameko_check_statuses():
    assert kameko_check(4, 12) == "pass"
    assert kameko_check(4, 11) == "not_applicable"  # beta(11) = 3
    assert kameko_check(4, 13) == "not_applicable"  # beta(13) = 3
    with pytest.raises(ValueError):
        kameko_check(0, 4)


def test_capacity_error_on_oversized_full_solve():
    # 4 variables, degree 95: 152096 columns, over the default cap.
    # The guard fires before any matrix is built.
    with pytest.raises(CapacityError):
        solve(4, 95, engine="full")


def test_forced_engine_must_be_known():
    with pytest.raises(ValueError):
        solve(4, 8, engine="sideways")


def test_clear_caches_runs():
    cohit(2, 5)
    clear_caches()
    assert cohit(2, 5).cohit_dimension == naive_cohit(2, 5)


def test_full_auto_limit_is_sane():
    assert FULL_AUTO_LIMIT >= comb(25 + 3, 3)
