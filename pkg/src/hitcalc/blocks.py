"""Split engine: survivor bands of constant odd-exponent count.

For four variables the filters leave at most two bands of surviving columns,
with odd-exponent counts p and p - 2. A column in band p factors uniquely as
x = x_E * u^2 with E the p-set of odd positions and u of degree (n - p) / 2,
and the band is an order segment: every band-p column is above every band-
(p - 2) column, and within a sector x_E the order of columns is the order of
the u. The generator rows respect this split.

* Sources x_E * v^2 with |E| = p under Sq^(2^j) contribute head terms
  x_E * w^2, w in Sq^(2^(j-1)) v, plus tail terms two bands down obtained by
  squaring two of the variables of E. Head patterns do not depend on E, so
  one elimination with a tail payload section per sector settles every
  sector at once, and its head pivots are exactly the lower-degree pivots
  that survive the band test.
* Sources with odd-exponent count p + 1 exist only in degree n - 1 and only
  Sq^1 applies; their rows land entirely in band p, one term per variable.
* Everything else lands in bands the filters already killed.

The band-p head elimination therefore reuses the lower-degree reduced solve,
the leftover Sq^1 rows are eliminated over the small set of lower-admissible
columns, and relations that vanish on band p drop their payload into band
p - 2, which repeats the same procedure one level down with nothing below
it. Dimensions, admissible monomials, and membership agree with the dense
engines wherever both run.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .gf2 import CapacityError, pack_rows, rref_packed, unpack_row
from .monomials import degree, lex_less, monomials_in_degree, order_key, tau
from .solver import (
    Solve,
    _survivor_count,
    lower_structure,
    monomials_of_degree,
    survivor_data,
)
from .steenrod import sq


class _PayloadEchelon:
    """Echelon staircase over bitset ints that drags a payload along.

    Rows are kept fully reduced: a pivot bit is set in no other row, and the
    pivot is the highest bit of its row, so one descending pass reduces any
    vector.
    """

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}

    def reduce(self, bits: int, pay: int) -> tuple[int, int]:
        rows = self.rows
        done = 0
        while True:
            rem = bits & ~done
            if not rem:
                return bits, pay
            p = rem.bit_length() - 1
            row = rows.get(p)
            if row is None:
                done |= 1 << p
            else:
                bits ^= row[0]
                pay ^= row[1]

    def insert(self, bits: int, pay: int) -> tuple[str, int]:
        bits, pay = self.reduce(bits, pay)
        if bits == 0:
            return ("absorbed", pay)
        p = bits.bit_length() - 1
        for q, (rb, rp) in self.rows.items():
            if (rb >> p) & 1:
                self.rows[q] = (rb ^ bits, rp ^ pay)
        self.rows[p] = (bits, pay)
        return ("added", 0)


class _Band:
    """Per-band indexing: surviving lower columns, sectors, bit positions."""

    __slots__ = ("p", "half_degree", "lower", "universe", "sectors",
                 "sector_index", "u_mask", "local", "local_inverse",
                 "n_ordinal", "nc", "positions", "expand_tables")

    def __init__(self, p: int, n: int, alive: set):
        self.p = p
        self.half_degree = (n - p) // 2
        self.lower = lower_structure(4, self.half_degree)
        self.universe = monomials_of_degree(4, self.half_degree)
        self.sectors = list(combinations(range(4), p))
        self.sector_index = {s: i for i, s in enumerate(self.sectors)}

        mask = np.zeros(len(self.universe), dtype=bool)
        for gi, u in enumerate(self.universe):
            if (p,) + tau(u) in alive:
                mask[gi] = True
        self.u_mask = mask
        self.local = {}
        self.local_inverse = []
        for gi in range(len(self.universe)):
            if mask[gi]:
                self.local[gi] = len(self.local)
                self.local_inverse.append(gi)
        # lower-admissible columns that survive the band test, in lower order
        n_cols = [gi for gi in self.lower.admissible_idx if mask[gi]]
        self.n_ordinal = {gi: i for i, gi in enumerate(n_cols)}

        entries = []
        for si, sector in enumerate(self.sectors):
            for gi in n_cols:
                x = _assemble(sector, self.universe[gi])
                entries.append((order_key(x), si, gi))
        entries.sort()
        self.nc = [(si, gi) for _key, si, gi in entries]
        self.positions = {(si, gi): b for b, (si, gi) in enumerate(self.nc)}
        self.expand_tables = [
            [self.positions[(si, gi)] for gi in n_cols]
            for si in range(len(self.sectors))
        ]

    def width(self) -> int:
        return len(self.nc)

    def monomial_at(self, bitpos: int):
        si, gi = self.nc[bitpos]
        return _assemble(self.sectors[si], self.universe[gi])


def _assemble(sector, u):
    return tuple(2 * a + (1 if j in sector else 0) for j, a in enumerate(u))


def _expand(bits: int, table) -> int:
    out = 0
    while bits:
        low = bits & -bits
        out |= 1 << table[low.bit_length() - 1]
        bits ^= low
    return out


def solve_blocks(k: int, n: int, subset: str = "all") -> Solve:
    if k != 4 or subset != "all":
        raise CapacityError(
            "the split engine handles four variables over the whole degree "
            "only; restrict the degree or raise the column cap instead"
        )
    if n < 1:
        raise ValueError("split engine needs a positive degree")

    data = survivor_data(4, n)
    alive = set(data.survivors)
    min_surv = data.min_survivor
    bands = sorted({c[0] for c in data.survivors}, reverse=True)
    if len(bands) > 2 or (len(bands) == 2 and bands[0] - bands[1] != 2):
        raise RuntimeError(f"internal: unexpected band layout {bands}")
    p0 = bands[0]
    band0 = _Band(p0, n, alive)
    band2 = _Band(bands[1], n, alive) if len(bands) == 2 else None

    w2 = band2.width() if band2 is not None else 0
    w2_mask = (1 << w2) - 1
    copies = band0.sectors
    pw = len(copies) * w2

    # compressed image of one band-2 column: empty if the filters kill it,
    # the echelon row's off-pivot part if the lower solve pivots there, the
    # bare column bit otherwise
    compress_cache: dict[tuple[int, int], int] = {}

    def compress2(si: int, u2) -> int:
        low = band2.lower
        gi = band2.universe.position(u2)
        if not band2.u_mask[gi]:
            return 0
        if not low.pivot[gi]:
            return 1 << band2.positions[(si, gi)]
        key = (si, gi)
        bits = compress_cache.get(key)
        if bits is None:
            bits = 0
            pat = low.npattern[gi]
            while pat:
                lowbit = pat & -pat
                a = lowbit.bit_length() - 1
                adm_gi = low.admissible_idx[a]
                if band2.u_mask[adm_gi]:
                    bits |= 1 << band2.positions[(si, adm_gi)]
                pat ^= lowbit
            compress_cache[key] = bits
        return bits

    # band-p0 head elimination with tail payload, one section per sector
    head_width = len(band0.local)
    rows_int = []
    j = 1
    while band0.half_degree - (1 << (j - 1)) >= 0:
        op = 1 << (j - 1)
        vdeg = band0.half_degree - op
        tail_op = op - 1
        for v in monomials_in_degree(4, vdeg):
            if min_surv is not None and not lex_less(min_surv, (p0,) + tau(v)):
                continue
            head = 0
            for w in sq(op, v):
                li = band0.local.get(band0.universe.position(w))
                if li is not None:
                    head ^= 1 << li
            pay = 0
            if w2:
                g = sq(tail_op, v)
                if g:
                    for ci, sector in enumerate(copies):
                        section = 0
                        for t_pair in combinations(sector, 2):
                            rest = tuple(x for x in sector
                                         if x not in t_pair)
                            si = band2.sector_index[rest]
                            for w in g:
                                u2 = tuple(
                                    a + (1 if idx in t_pair else 0)
                                    for idx, a in enumerate(w)
                                )
                                section ^= compress2(si, u2)
                        pay ^= section << (ci * w2)
            if head or pay:
                rows_int.append(pay | (head << pw))
        j += 1

    mat = pack_rows(rows_int, pw + head_width)
    rank0, pivot_cols = rref_packed(mat, pw + head_width, stop=pw)

    sliced: dict[int, tuple[int, int]] = {}
    pay_mask = (1 << pw) - 1
    for i, pc in enumerate(pivot_cols):
        row = unpack_row(mat, i)
        local_piv = pc - pw
        head = (row >> pw) ^ (1 << local_piv)
        h_n = 0
        while head:
            lowbit = head & -head
            gi = band0.local_inverse[lowbit.bit_length() - 1]
            h_n |= 1 << band0.n_ordinal[gi]
            head ^= lowbit
        sliced[local_piv] = (h_n, row & pay_mask)

    expected = {band0.local[gi] for gi in band0.local
                if band0.lower.pivot[gi]}
    if set(sliced) != expected:
        raise RuntimeError("internal: band pivots disagree with the lower "
                           "solve")

    incoming2: list[int] = []
    for i in range(rank0, len(rows_int)):
        row = unpack_row(mat, i)
        if row >> pw:
            raise RuntimeError("internal: kernel row kept a head bit")
        for ci in range(len(copies)):
            section = (row >> (ci * w2)) & w2_mask
            if section:
                incoming2.append(section)

    # Sq^1 rows from one band up, reduced to the lower-admissible columns
    residual0 = _PayloadEchelon()
    if p0 < 4:
        cross_deg = n - 1 - (p0 + 1)
        if cross_deg >= 0 and cross_deg % 2 == 0:
            for big in combinations(range(4), p0 + 1):
                for v in monomials_in_degree(4, cross_deg // 2):
                    bits = 0
                    pay = 0
                    for i in big:
                        sector = tuple(x for x in big if x != i)
                        si = band0.sector_index[sector]
                        u = tuple(a + (1 if idx == i else 0)
                                  for idx, a in enumerate(v))
                        gi = band0.universe.position(u)
                        if not band0.u_mask[gi]:
                            continue
                        entry = sliced.get(band0.local[gi])
                        if entry is not None:
                            h_n, pall = entry
                            bits ^= _expand(h_n, band0.expand_tables[si])
                            pay ^= (pall >> (si * w2)) & w2_mask
                        else:
                            bits ^= 1 << band0.positions[(si, gi)]
                    if bits or pay:
                        state, leftover = residual0.insert(bits, pay)
                        if state == "absorbed" and leftover:
                            incoming2.append(leftover)

    residual2 = _PayloadEchelon()
    if band2 is not None:
        for section in incoming2:
            residual2.insert(section, 0)
        for big in combinations(range(4), band2.p + 1):
            for v in monomials_in_degree(4, band0.half_degree):
                bits = 0
                for i in big:
                    sector = tuple(x for x in big if x != i)
                    si = band2.sector_index[sector]
                    u2 = tuple(a + (1 if idx == i else 0)
                               for idx, a in enumerate(v))
                    bits ^= compress2(si, u2)
                if bits:
                    residual2.insert(bits, 0)

    piv_pos0 = set(residual0.rows)
    piv_pos2 = set(residual2.rows)
    adm = []
    ordinal0 = {}
    for b in range(band0.width()):
        if b not in piv_pos0:
            ordinal0[b] = len(adm)
            adm.append(band0.monomial_at(b))
    ordinal2 = {}
    if band2 is not None:
        for b in range(band2.width()):
            if b not in piv_pos2:
                ordinal2[b] = len(adm)
                adm.append(band2.monomial_at(b))
    order = sorted(range(len(adm)), key=lambda i: order_key(adm[i]))
    admissible = tuple(adm[i] for i in order)
    final_ordinal = {old: new for new, old in enumerate(order)}
    ordinal0 = {b: final_ordinal[o] for b, o in ordinal0.items()}
    ordinal2 = {b: final_ordinal[o] for b, o in ordinal2.items()}

    survivors_seen = len(copies) * len(band0.local)
    if band2 is not None:
        survivors_seen += len(band2.sectors) * len(band2.local)
    if survivors_seen != _survivor_count(4, n):
        raise RuntimeError("internal: survivor column count mismatch")

    universe = monomials_of_degree(4, n)
    pivot_set = frozenset(universe.monomials) - set(admissible)

    def reducer(f) -> int:
        bits0 = 0
        pay = 0
        bits2 = 0
        for m in f:
            m = tuple(m)
            if len(m) != 4 or degree(m) != n:
                raise ValueError("degree/arity mismatch in polynomial")
            t = tau(m)
            if t not in alive:
                continue
            sector = tuple(i for i in range(4) if m[i] & 1)
            u = tuple(a // 2 for a in m)
            if t[0] == p0:
                gi = band0.universe.position(u)
                si = band0.sector_index[sector]
                entry = sliced.get(band0.local[gi])
                if entry is not None:
                    h_n, pall = entry
                    bits0 ^= _expand(h_n, band0.expand_tables[si])
                    pay ^= (pall >> (si * w2)) & w2_mask
                else:
                    bits0 ^= 1 << band0.positions[(si, gi)]
            else:
                bits2 ^= compress2(band2.sector_index[sector], u)
        left0, pay = residual0.reduce(bits0, pay)
        bits2 ^= pay
        left2, _ = residual2.reduce(bits2, 0)
        out = 0
        while left0:
            lowbit = left0 & -left0
            out |= 1 << ordinal0[lowbit.bit_length() - 1]
            left0 ^= lowbit
        while left2:
            lowbit = left2 & -left2
            out |= 1 << ordinal2[lowbit.bit_length() - 1]
            left2 ^= lowbit
        return out

    return Solve(4, n, "all", "blocks", len(universe), pivot_set, admissible,
                 reducer)
