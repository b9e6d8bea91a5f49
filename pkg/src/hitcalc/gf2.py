"""Row spaces over GF(2), indexed by an ordered monomial basis.

Rows are arbitrary-precision ints used as bitsets; bit i is the column of the
i-th monomial in the ascending order, so the pivot of a row is its highest
set bit (the largest monomial in its support). Bulk eliminations use packed
uint64 numpy matrices; both representations produce the same fully reduced
echelon and are tested against each other.
"""
from __future__ import annotations

import math
import os

import numpy as np

from .monomials import Monomial, monomials_in_degree, order_key

BitRow = int

DEFAULT_COLUMN_CAP = 150_000


class CapacityError(RuntimeError):
    """Raised when a requested computation exceeds the configured caps."""


def column_cap() -> int:
    raw = os.environ.get("HITCALC_COLUMN_CAP", "")
    if raw.strip():
        try:
            cap = int(raw)
        except ValueError as exc:
            raise CapacityError(f"HITCALC_COLUMN_CAP is not an integer: {raw!r}") from exc
        if cap < 1:
            raise CapacityError("HITCALC_COLUMN_CAP must be positive")
        return cap
    return DEFAULT_COLUMN_CAP


class ColumnUniverse:
    """The ordered column basis: monomials of one degree and arity.

    Construction refuses degrees whose monomial count exceeds the column cap
    so that a runaway request fails fast instead of thrashing.
    """

    __slots__ = ("k", "degree", "monomials", "_index")

    def __init__(self, k: int, degree: int,
                 monomials: tuple[Monomial, ...] | None = None):
        if monomials is None:
            count = math.comb(degree + k - 1, k - 1)
            cap = column_cap()
            if count > cap:
                raise CapacityError(
                    f"degree {degree} in {k} variables needs {count} columns, "
                    f"over the cap of {cap}; raise HITCALC_COLUMN_CAP to proceed"
                )
            monomials = monomials_in_degree(k, degree)
        self.k = k
        self.degree = degree
        self.monomials = monomials
        self._index = {m: i for i, m in enumerate(monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]

    def __contains__(self, m: Monomial) -> bool:
        return m in self._index

    def position(self, m: Monomial) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise ValueError(f"degree/arity mismatch: {m} is not a column") from None

    def get(self, m: Monomial):
        return self._index.get(m)


def encode(f, u: ColumnUniverse) -> BitRow:
    """Polynomial to bitset over the universe; outside monomials are errors."""
    row = 0
    for m in f:
        row |= 1 << u.position(tuple(m))
    return row


def decode(row: BitRow, u: ColumnUniverse):
    out = []
    while row:
        low = row & -row
        i = low.bit_length() - 1
        out.append(u[i])
        row ^= low
    return frozenset(out)


class EchelonBasis:
    """Incrementally maintained fully reduced echelon basis.

    Each pivot column is set in exactly one stored row, so the row set is the
    canonical reduced form of the span and does not depend on insertion
    order. Single writer; freeze() makes further inserts an error so a built
    basis can be shared read-only.
    """

    def __init__(self):
        self._rows: dict[int, int] = {}
        self._mask = 0  # union of pivot columns, for bulk intersection
        self._frozen = False

    def reduce(self, r: BitRow) -> BitRow:
        rows = self._rows
        while r:
            p = r.bit_length() - 1
            row = rows.get(p)
            if row is None:
                return r
            r ^= row
        return r

    def insert(self, r: BitRow) -> tuple[str, int | None]:
        if self._frozen:
            raise RuntimeError("basis is frozen")
        r = self.reduce(r)
        if r == 0:
            return ("absorbed", None)
        p = r.bit_length() - 1
        # Clear pivot columns sitting below the new pivot. Stored rows carry
        # no pivot bits besides their own, so each XOR settles one column
        # for good and the loop touches every offending column once.
        pending = r & self._mask
        while pending:
            q = pending.bit_length() - 1
            r ^= self._rows[q]
            pending ^= 1 << q
        for q, row in self._rows.items():
            if (row >> p) & 1:
                self._rows[q] = row ^ r
        self._rows[p] = r
        self._mask |= 1 << p
        return ("added", p)

    def contains(self, r: BitRow) -> bool:
        return self.reduce(r) == 0

    def rank(self) -> int:
        return len(self._rows)

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self._rows))

    def rows(self) -> tuple[BitRow, ...]:
        return tuple(self._rows[p] for p in sorted(self._rows))

    def row_for_pivot(self, p: int) -> BitRow | None:
        return self._rows.get(p)

    def freeze(self) -> "EchelonBasis":
        self._frozen = True
        return self


# packed bulk elimination ------------------------------------------------

def pack_rows(rows, ncols: int) -> np.ndarray:
    """Bitset ints to a (len(rows), words) uint64 matrix, little endian."""
    words = max(1, (ncols + 63) // 64)
    mat = np.zeros((len(rows), words), dtype=np.uint64)
    nbytes = words * 8
    for i, r in enumerate(rows):
        mat[i] = np.frombuffer(r.to_bytes(nbytes, "little"), dtype="<u8")
    return mat


def unpack_row(mat: np.ndarray, i: int) -> int:
    return int.from_bytes(mat[i].tobytes(), "little")


def rref_packed(mat: np.ndarray, ncols: int, stop: int = 0):
    """In-place full reduction, pivots at the highest set columns.

    Only columns >= stop are eligible pivots; lower bits ride along as
    payload. Returns (rank, pivot_cols) with pivot_cols descending; row i of
    the settled prefix has pivot pivot_cols[i]. Rows past the settled prefix
    are zero on the eligible columns.
    """
    nrows = mat.shape[0]
    pivot_cols: list[int] = []
    nxt = 0
    one = np.uint64(1)
    for col in range(ncols - 1, stop - 1, -1):
        if nxt == nrows:
            break
        w = col >> 6
        b = np.uint64(col & 63)
        cand = (mat[nxt:, w] >> b) & one
        hits = np.nonzero(cand)[0]
        if hits.size == 0:
            continue
        r = nxt + int(hits[0])
        if r != nxt:
            mat[[nxt, r]] = mat[[r, nxt]]
        colbits = ((mat[:, w] >> b) & one).astype(bool)
        colbits[nxt] = False
        if colbits.any():
            mat[colbits] ^= mat[nxt]
        pivot_cols.append(col)
        nxt += 1
    return nxt, pivot_cols
