import os
import random

import numpy as np
import pytest

from hitcalc.gf2 import (
    CapacityError,
    ColumnUniverse,
    EchelonBasis,
    column_cap,
    decode,
    encode,
    pack_rows,
    rref_packed,
    unpack_row,
)


def test_column_universe_basics():
    u = ColumnUniverse(3, 4)
    assert len(u) == 15
    ms = list(u)
    assert ms == sorted(ms, key=lambda m: u.position(m)) and len(set(ms)) == 15
    m = ms[7]
    assert u[7] == m and u.position(m) == 7 and m in u
    assert u.get((4, 0, 0)) is not None
    assert u.get((5, 0, 0)) is None
    with pytest.raises(ValueError):
        u.position((5, 0, 0))


def test_encode_decode_round_trip():
    u = ColumnUniverse(4, 6)
    f = frozenset({(1, 2, 3, 0), (0, 0, 0, 6), (2, 2, 1, 1)})
    row = encode(f, u)
    assert decode(row, u) == f
    assert encode(frozenset(), u) == 0


def test_capacity_guard(monkeypatch):
    monkeypatch.setenv("HITCALC_COLUMN_CAP", "100")
    assert column_cap() == 100
    with pytest.raises(CapacityError):
        ColumnUniverse(4, 20)  # 1771 columns, over the forced cap
    monkeypatch.delenv("HITCALC_COLUMN_CAP")
    assert column_cap() > 100


def naive_rank(rows, ncols):
    mat = [r for r in rows if r]
    rank = 0
    for col in reversed(range(ncols)):
        bit = 1 << col
        pivot = next((r for r in mat if r & bit), None)
        if pivot is None:
            continue
        rank += 1
        mat = [r ^ pivot if r & bit else r for r in mat if r is not pivot]
    return rank


def test_echelon_basis_against_naive():
    rng = random.Random(11)
    for trial in range(25):
        ncols = rng.randrange(1, 40)
        rows = [rng.getrandbits(ncols) for _ in range(rng.randrange(1, 30))]
        basis = EchelonBasis()
        for r in rows:
            basis.insert(r)
        assert basis.rank() == naive_rank(rows, ncols)
        for r in rows:
            assert basis.contains(r)


def test_echelon_insert_reports_pivot():
    basis = EchelonBasis()
    status, p = basis.insert(0b1100)
    assert status == "added" and p == 3
    status, p = basis.insert(0b0100)
    assert status == "added" and p == 2
    status, p = basis.insert(0b1000)  # dependent on the first two
    assert status == "absorbed" and p is None
    # full reduction: stored rows have no stray pivot bits
    assert sorted(basis.rows()) == [0b0100, 0b1000]


def test_echelon_deterministic_under_permutation():
    rng = random.Random(5)
    rows = [rng.getrandbits(24) for _ in range(18)]
    reference = None
    for trial in range(6):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        basis = EchelonBasis()
        for r in shuffled:
            basis.insert(r)
        snapshot = (basis.rank(), tuple(sorted(basis.rows())))
        if reference is None:
            reference = snapshot
        assert snapshot == reference


def test_pack_and_rref():
    rng = random.Random(23)
    for trial in range(15):
        ncols = rng.randrange(1, 130)
        rows = [rng.getrandbits(ncols) for _ in range(rng.randrange(1, 40))]
        mat = pack_rows(rows, ncols)
        assert isinstance(mat, np.ndarray) and mat.dtype == np.uint64
        for i, r in enumerate(rows):
            assert unpack_row(mat, i) == r
        rank, pivots = rref_packed(mat, ncols)
        assert rank == naive_rank(rows, ncols)
        assert list(pivots) == sorted(pivots, reverse=True)
        assert len(pivots) == rank


def test_rref_stop_column():
    # columns below `stop` are never chosen as pivots
    rows = [0b0011, 0b0101, 0b1001]
    mat = pack_rows(rows, 4)
    rank, pivots = rref_packed(mat, 4, stop=2)
    assert all(p >= 2 for p in pivots)
    assert rank == 2
