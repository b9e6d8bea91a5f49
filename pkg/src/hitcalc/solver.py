"""Cohit computations: dimension, admissible bases, hit membership.

Three interchangeable engines compute the quotient by the hit subspace.

* "full" assembles every generator image over the whole degree and reduces
  the packed matrix. Canonical and simple; the default for ``cohit``.
* "projected" first discards monomials that the degree filters prove hit,
  then solves on the surviving columns only. The filters remove individually
  hit monomials, so the pivot set of the full solve is the killed set plus
  the pivots of the projected one; dimensions, admissible monomials, and
  membership answers agree with "full" exactly.
* the split engine in :mod:`hitcalc.blocks` for four variables near the top
  of the generic range, where even the surviving columns are too many for a
  dense matrix. It decomposes the survivors into at most two bands of
  constant odd-exponent count and solves each against the half-degree
  structure.

Results are cached per (k, degree, engine, subset); all engines are
deterministic, so repeated calls are cheap.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .gf2 import (
    CapacityError,
    ColumnUniverse,
    EchelonBasis,
    column_cap,
    encode,
    pack_rows,
    rref_packed,
    unpack_row,
)
from .monomials import (
    Monomial,
    TauSequence,
    alpha,
    beta,
    degree,
    epsilon_matrix,
    lex_less,
    minimal_spike,
    monomial_of_matrix,
    monomials_in_degree,
    order_key,
    tau,
)
from .steenrod import Polynomial, hit_generator_images, kameko_down_monomial, sq

FULL_AUTO_LIMIT = 3_600
PROJECTED_LIMIT = 14_000

_SUBSETS = ("all", "q", "r")
_MODES = ("full", "accelerated", "auto")


@dataclass(frozen=True)
class HitReport:
    """Summary of one degree: column count, hit rank, and the basis."""

    k: int
    degree: int
    monomial_count: int
    hit_rank: int
    cohit_dimension: int
    admissible: tuple[Monomial, ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "degree": self.degree,
            "monomials": self.monomial_count,
            "hit_rank": self.hit_rank,
            "dimension": self.cohit_dimension,
            "admissible": [list(m) for m in self.admissible],
        }


@lru_cache(maxsize=None)
def monomials_of_degree(k: int, n: int) -> ColumnUniverse:
    if k < 1:
        raise ValueError("need at least one variable")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return ColumnUniverse(k, n)


# degree filters -----------------------------------------------------------

def wood_filter(m: Monomial) -> str:
    """"hit" when the odd-exponent count falls below the degree threshold."""
    n = degree(m)
    odd = sum(1 for a in m if a & 1)
    return "hit" if odd < beta(n) else "unknown"


def singer_filter(m: Monomial) -> str:
    """"hit" when m sits strictly below the minimal spike, where one exists.

    Only applies in degrees n with alpha(n + k) <= k; outside that range the
    spike comparison proves nothing and the verdict is "unknown".
    """
    k = len(m)
    n = degree(m)
    if alpha(n + k) > k:
        return "unknown"
    z = minimal_spike(n, k)
    if z is None:
        return "unknown"
    return "hit" if lex_less(tau(m), tau(z)) else "unknown"


@lru_cache(maxsize=None)
def _tau_classes(k: int, n: int) -> tuple[TauSequence, ...]:
    """All weight sequences realised in degree n: entries in 0..k, last one
    positive, sum t_i 2^(i-1) = n."""

    out: list[tuple[int, ...]] = []

    def walk(remaining: int, unit: int, prefix: tuple[int, ...]):
        if remaining == 0:
            if not prefix or prefix[-1] != 0:
                out.append(prefix)
            return
        for t in range(k + 1):
            if t * unit > remaining:
                break
            if (remaining - t * unit) % (2 * unit) == 0:
                walk(remaining - t * unit, 2 * unit, prefix + (t,))

    walk(n, 1, ())
    return tuple(sorted(out))


@dataclass(frozen=True)
class SurvivorData:
    killed: tuple[TauSequence, ...]
    survivors: tuple[TauSequence, ...]  # ascending lex
    min_survivor: TauSequence | None


@lru_cache(maxsize=None)
def survivor_data(k: int, n: int) -> SurvivorData:
    if n == 0:
        return SurvivorData((), ((),), ())
    b = beta(n)
    bound = None
    if alpha(n + k) <= k:
        z = minimal_spike(n, k)
        if z is not None:
            bound = tau(z)
    killed = []
    kept = []
    for c in _tau_classes(k, n):
        if c[0] < b or (bound is not None and lex_less(c, bound)):
            killed.append(c)
        else:
            kept.append(c)
    # plain tuple order agrees with padded lex here: a weight sequence never
    # ends in zero, so no class is a proper prefix of another
    kept.sort()
    low = kept[0] if kept else None
    return SurvivorData(tuple(killed), tuple(kept), low)


def _subset_pred(subset: str):
    if subset == "all":
        return None
    if subset == "q":
        return lambda m: any(a == 0 for a in m)
    if subset == "r":
        return lambda m: all(a > 0 for a in m)
    raise ValueError(f"unknown subset {subset!r}")


# solve artifacts ----------------------------------------------------------

class Solve:
    """Engine-agnostic result: pivot set, basis, and a coset reducer.

    ``coset_vector`` returns the coordinates of f modulo the hit subspace in
    the admissible basis, as a bitset over basis positions; membership is the
    zero vector.
    """

    def __init__(self, k, n, subset, engine, monomial_count, pivot_set,
                 admissible, reducer):
        self.k = k
        self.n = n
        self.subset = subset
        self.engine = engine
        self.monomial_count = monomial_count
        self.pivot_set = pivot_set
        self.admissible = admissible
        self._adm_pos = {m: i for i, m in enumerate(admissible)}
        self._reducer = reducer

    @property
    def rank(self) -> int:
        return self.monomial_count - len(self.admissible)

    def report(self) -> HitReport:
        return HitReport(
            k=self.k,
            degree=self.n,
            monomial_count=self.monomial_count,
            hit_rank=self.rank,
            cohit_dimension=len(self.admissible),
            admissible=self.admissible,
        )

    def coset_vector(self, f: Polynomial) -> int:
        return self._reducer(f)

    def is_member(self, f: Polynomial) -> bool:
        return self._reducer(f) == 0


_cache: dict[tuple, Solve] = {}
_cache_lock = threading.Lock()


def _check_poly_against(f, k, n, subset, pred):
    for m in f:
        if len(m) != k or degree(m) != n:
            raise ValueError("degree/arity mismatch in polynomial")
        if pred is not None and not pred(m):
            raise ValueError(f"monomial {m} lies outside the {subset} part")


def _solve_full(k: int, n: int, subset: str) -> Solve:
    pred = _subset_pred(subset)
    universe = monomials_of_degree(k, n)
    if pred is None:
        columns = universe
    else:
        columns = ColumnUniverse(k, n, tuple(m for m in universe if pred(m)))
    ncols = len(columns)

    rows = []
    if n >= 1:
        for _j, source, image in hit_generator_images(k, n).pairs():
            if pred is not None and not pred(source):
                continue
            if image:
                rows.append(encode(image, columns))
    mat = pack_rows(rows, ncols)
    rank, pivot_cols = rref_packed(mat, ncols)

    pivot_set = frozenset(columns[c] for c in pivot_cols)
    admissible = tuple(m for m in columns if m not in pivot_set)
    row_of_col = {c: unpack_row(mat, i) for i, c in enumerate(pivot_cols)}
    adm_positions = [columns.position(m) for m in admissible]

    def reducer(f: Polynomial) -> int:
        _check_poly_against(f, k, n, subset, pred)
        v = encode(f, columns)
        for c, row in row_of_col.items():
            if (v >> c) & 1:
                v ^= row
        out = 0
        for i, pos in enumerate(adm_positions):
            if (v >> pos) & 1:
                out |= 1 << i
        return out

    return Solve(k, n, subset, "full", ncols, pivot_set, admissible, reducer)


def _solve_projected(k: int, n: int, subset: str) -> Solve:
    pred = _subset_pred(subset)
    universe = monomials_of_degree(k, n)
    if pred is None:
        pool = universe.monomials
    else:
        pool = tuple(m for m in universe if pred(m))
    ncols = len(pool)

    data = survivor_data(k, n)
    alive = set(data.survivors)
    killed_monomials = []
    surviving = []
    for m in pool:
        if tau(m) in alive:
            surviving.append(m)
        else:
            killed_monomials.append(m)
    sub = ColumnUniverse(k, n, tuple(surviving))
    low = data.min_survivor

    rows = []
    if n >= 1 and surviving:
        j = 0
        while (1 << j) <= n:
            i = 1 << j
            for source in monomials_in_degree(k, n - i):
                if pred is not None and not pred(source):
                    continue
                # every term of the image is strictly lex-below the source's
                # weight sequence, so sources at or below the lowest survivor
                # contribute nothing to the projection
                if low is not None and not lex_less(low, tau(source)):
                    continue
                row = 0
                for term in sq(i, source):
                    pos = sub.get(term)
                    if pos is not None:
                        row |= 1 << pos
                if row:
                    rows.append(row)
            j += 1
    nsub = len(sub)
    mat = pack_rows(rows, nsub)
    rank, pivot_cols = rref_packed(mat, nsub)

    pivot_set = frozenset(killed_monomials)
    pivot_set |= frozenset(sub[c] for c in pivot_cols)
    admissible = tuple(m for m in surviving if m not in pivot_set)
    row_of_col = {c: unpack_row(mat, i) for i, c in enumerate(pivot_cols)}
    killed_set = frozenset(killed_monomials)
    adm_positions = [sub.position(m) for m in admissible]

    def reducer(f: Polynomial) -> int:
        _check_poly_against(f, k, n, subset, pred)
        v = 0
        for m in f:
            m = tuple(m)
            if m in killed_set:
                continue
            v ^= 1 << sub.position(m)
        for c, row in row_of_col.items():
            if (v >> c) & 1:
                v ^= row
        out = 0
        for i, pos in enumerate(adm_positions):
            if (v >> pos) & 1:
                out |= 1 << i
        return out

    return Solve(k, n, subset, "projected", ncols, pivot_set, admissible,
                 reducer)


def _survivor_count(k: int, n: int) -> int:
    data = survivor_data(k, n)
    total = 0
    for c in data.survivors:
        ways = 1
        # monomials in a class: choose which variables carry a one bit at
        # each binary position
        for t in c:
            ways *= comb(k, t)
        total += ways
    return total


def _resolve_engine(k: int, n: int, mode: str, subset: str) -> str:
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if subset not in _SUBSETS:
        raise ValueError(f"unknown subset {subset!r}")
    ncols = comb(n + k - 1, k - 1)
    if mode == "full":
        return "full"
    if mode == "auto" and ncols <= FULL_AUTO_LIMIT:
        return "full"
    if _survivor_count(k, n) <= PROJECTED_LIMIT:
        return "projected"
    if k == 4 and subset == "all":
        return "blocks"
    raise CapacityError(
        f"degree {n} in {k} variables leaves too many surviving columns for "
        "the dense engines and the split engine handles k=4 over the whole "
        "degree only"
    )


def solve(k: int, n: int, engine: str, subset: str = "all") -> Solve:
    """Run a specific engine, bypassing mode resolution. Cached."""
    if k < 1:
        raise ValueError("need at least one variable")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    key = (k, n, engine, subset)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    if engine == "full":
        if comb(n + k - 1, k - 1) > column_cap():
            raise CapacityError(
                f"full solve at degree {n} in {k} variables exceeds the "
                "column cap; try accelerated mode"
            )
        result = _solve_full(k, n, subset)
    elif engine == "projected":
        result = _solve_projected(k, n, subset)
    elif engine == "blocks":
        from . import blocks

        result = blocks.solve_blocks(k, n, subset)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    with _cache_lock:
        _cache.setdefault(key, result)
    return result


def cohit(k: int, n: int, mode: str = "full", subset: str = "all") -> HitReport:
    """Dimension and admissible basis of the quotient by the hit subspace."""
    engine = _resolve_engine(k, n, mode, subset)
    return solve(k, n, engine, subset).report()


def qr_split(k: int, n: int, mode: str = "full") -> tuple[int, int]:
    """Dimensions of the two complementary summands: monomials with at least
    one zero exponent, and monomials with all exponents positive."""
    q = cohit(k, n, mode, subset="q").cohit_dimension
    r = cohit(k, n, mode, subset="r").cohit_dimension
    return (q, r)


def is_hit(f: Polynomial, mode: str = "full") -> bool:
    """Whether the polynomial lies in the hit subspace. Zero counts as hit."""
    terms = [tuple(m) for m in f]
    if not terms:
        return True
    k = len(terms[0])
    n = degree(terms[0])
    for m in terms:
        if len(m) != k:
            raise ValueError("mixed arities in polynomial")
        if degree(m) != n:
            raise ValueError("polynomial is not homogeneous")
    engine = _resolve_engine(k, n, mode, "all")
    return solve(k, n, engine, "all").is_member(frozenset(terms))


# window patterns ----------------------------------------------------------

def delta_matches(pattern, x: Monomial) -> bool:
    """Whether the digit matrix of x contains the pattern as a block of
    consecutive rows starting at some position r >= 0."""
    rows = tuple(tuple(r) for r in pattern)
    if not rows:
        return True
    k = len(rows[0])
    if len(x) != k:
        raise ValueError("degree/arity mismatch between pattern and monomial")
    s = len(rows)
    top = max(x).bit_length() if any(x) else 0
    for r in range(top + 1):
        ok = True
        for i in range(s):
            for j in range(k):
                if ((x[j] >> (r + i)) & 1) != rows[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def strictly_inadmissible(pattern) -> bool:
    """Whether the monomial whose digit matrix is the pattern (zero rows
    kept) is congruent, modulo hits by operations of length below the row
    count, to a sum of strictly smaller monomials."""
    rows = tuple(tuple(r) for r in pattern)
    if not rows:
        raise ValueError("empty pattern")
    k = len(rows[0])
    x = monomial_of_matrix(rows, k)
    s = len(rows)
    n = degree(x)
    if n == 0:
        return False
    universe = monomials_of_degree(k, n)
    key_x = order_key(x)
    upper = [m for m in universe if order_key(m) >= key_x]
    pos = {m: i for i, m in enumerate(upper)}
    tau_x = tau(x)

    basis = EchelonBasis()
    for j in range(s):
        i = 1 << j
        if i > n:
            break
        for source in monomials_in_degree(k, n - i):
            # image terms sit strictly lex-below the source's weight
            # sequence, so only sources strictly above x can reach x or
            # anything larger
            if not lex_less(tau_x, tau(source)):
                continue
            row = 0
            for term in sq(i, source):
                p = pos.get(term)
                if p is not None:
                    row |= 1 << p
            if row:
                basis.insert(row)
    return basis.contains(1 << pos[x])


def catalog_inadmissible(x: Monomial, catalog) -> bool:
    """Whether any pattern in the catalog occurs in the digit matrix of x."""
    return any(delta_matches(p, x) for p in catalog)


# half-degree comparison ---------------------------------------------------

def kameko_check(k: int, n: int, mode: str = "auto") -> str:
    """Compare the quotient in degree n against degree (n - k) / 2.

    Applies when the odd-exponent threshold of n equals k; the squaring-plus
    -product map then matches the two quotients, and this routine verifies it
    on the computed bases. Returns "pass", "fail", or "not_applicable".
    """
    if k < 1:
        raise ValueError("need at least one variable")
    if beta(n) != k:
        return "not_applicable"
    if (n - k) % 2 != 0:
        raise ValueError("degree parity obstructs the halving map")
    lower_n = (n - k) // 2
    engine_hi = _resolve_engine(k, n, mode, "all")
    engine_lo = _resolve_engine(k, lower_n, mode, "all")
    upper = solve(k, n, engine_hi, "all")
    lower = solve(k, lower_n, engine_lo, "all")
    if len(upper.admissible) != len(lower.admissible):
        return "fail"
    span = EchelonBasis()
    for m in upper.admissible:
        image = kameko_down_monomial(m)
        if image is None:
            continue
        vec = lower.coset_vector(frozenset([image]))
        if vec:
            span.insert(vec)
    if span.rank() == len(lower.admissible):
        return "pass"
    return "fail"


# lower-degree structure shared with the split engine ----------------------

class LowerStructure:
    """Read-only view of one degree's reduced solve, keyed by column index.

    npattern maps each pivot column to the admissible-basis coordinates of
    its echelon row, which is all the split engine needs to push a column
    through the lower reduction.
    """

    __slots__ = ("k", "n", "universe", "pivot", "admissible_idx", "adm_pos",
                 "npattern")

    def __init__(self, k, n, universe, pivot, admissible_idx, adm_pos,
                 npattern):
        self.k = k
        self.n = n
        self.universe = universe
        self.pivot = pivot
        self.admissible_idx = admissible_idx
        self.adm_pos = adm_pos
        self.npattern = npattern


@lru_cache(maxsize=None)
def lower_structure(k: int, n: int) -> LowerStructure:
    ncols = comb(n + k - 1, k - 1)
    engine = "full" if ncols <= FULL_AUTO_LIMIT else "projected"
    art = solve(k, n, engine, "all")
    universe = monomials_of_degree(k, n)
    npos = {m: i for i, m in enumerate(universe)}
    pivot = np.zeros(len(universe), dtype=bool)
    for m in art.pivot_set:
        pivot[npos[m]] = True
    admissible_idx = [npos[m] for m in art.admissible]
    adm_pos = {idx: i for i, idx in enumerate(admissible_idx)}

    npattern: dict[int, int] = {}
    for m in art.pivot_set:
        vec = art.coset_vector(frozenset([m]))
        # the coset vector of a pivot monomial is exactly the off-pivot part
        # of its echelon row
        npattern[npos[m]] = vec
    return LowerStructure(k, n, universe, pivot, admissible_idx, adm_pos,
                          npattern)


def clear_caches():
    """Drop all memoised solves; mainly for tests that tweak capacity."""
    with _cache_lock:
        _cache.clear()
    monomials_of_degree.cache_clear()
    survivor_data.cache_clear()
    _tau_classes.cache_clear()
    lower_structure.cache_clear()
