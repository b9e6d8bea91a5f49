from pathlib import Path

import pytest

from hitcalc.monomials import degree, monomial_of_matrix
from hitcalc.solver import catalog_inadmissible, delta_matches, strictly_inadmissible
from hitcalc.verify import load_patterns

DATA = Path(__file__).resolve().parent.parent / "data" / "windows"


@pytest.fixture(scope="module")
def catalog():
    return load_patterns(DATA / "catalog.txt")


@pytest.fixture(scope="module")
def extra():
    return load_patterns(DATA / "extra.txt")


def test_catalog_shape(catalog):
    assert len(catalog) == 93
    for p in catalog:
        assert all(len(row) == 4 for row in p)
        assert all(bit in (0, 1) for row in p for bit in row)


def test_extra_shape(extra):
    assert len(extra) == 47


def test_every_catalog_window_is_strictly_inadmissible(catalog):
    failures = [p for p in catalog if not strictly_inadmissible(p)]
    assert not failures, failures


def test_every_extra_window_is_strictly_inadmissible(extra):
    failures = [p for p in extra if not strictly_inadmissible(p)]
    assert not failures, failures


def test_window_match_respects_row_shifts(catalog):
    p = catalog[0]  # 1101/1110
    base = monomial_of_matrix(p)
    assert delta_matches(p, base)
    # doubling a monomial shifts its digit matrix down one row
    doubled = tuple(2 * e for e in base)
    assert delta_matches(p, doubled)
    assert catalog_inadmissible(doubled, catalog)
    lifted = tuple(2 * e + 1 for e in base)
    assert delta_matches(p, lifted)


def test_monomials_do_not_match_foreign_windows():
    spike = (7, 3, 1, 1)
    assert not delta_matches(((1, 1, 0, 0), (1, 1, 0, 0)), spike)


def test_not_every_pattern_is_inadmissible():
    # a lone spike row certifies nothing
    assert not strictly_inadmissible(((1, 1, 1, 1),))
    assert not strictly_inadmissible(((1, 0, 0, 0),))
