"""Monomials of F2[x_1..x_k] and the combinatorics that grades them.

A monomial is a tuple of exponents. Its dyadic digit matrix (epsilon matrix)
stacks the binary digits of the exponents: row i holds bit i-1 of each
exponent. Row sums give the tau sequence, the exponents themselves are the
sigma sequence, and (tau, sigma) ordered lexicographically is a total order.
The order is defined for any pair of monomials of the same arity, even across
degrees; within a fixed degree it is the order the solver uses for columns.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional

Monomial = tuple[int, ...]
Spike = tuple[int, ...]
TauSequence = tuple[int, ...]
SigmaSequence = tuple[int, ...]
EpsilonMatrix = tuple[tuple[int, ...], ...]

MAX_EXPONENT = 2**32 - 1


def degree(m: Monomial) -> int:
    """Total degree, the sum of the exponents."""
    return sum(m)


def alpha(n: int) -> int:
    """Number of ones in the binary expansion of n."""
    if n < 0:
        raise ValueError("alpha is defined for nonnegative integers")
    return n.bit_count()


def beta(n: int) -> int:
    """Least m >= 1 with alpha(n + m) <= m, with beta(0) = 0.

    The convention beta(0) = 0 keeps beta(n) = n (mod 2) uniform: for n >= 1
    the minimal m always matches the parity of n.
    """
    if n < 0:
        raise ValueError("beta is defined for nonnegative integers")
    if n == 0:
        return 0
    m = 1
    while alpha(n + m) > m:
        m += 1
    return m


def epsilon_matrix(m: Monomial) -> EpsilonMatrix:
    """Digit matrix of m, trimmed to the highest nonzero row.

    Row i (1-based) holds bit i-1 of each exponent. The zero monomial has no
    rows at all.
    """
    _check_monomial(m)
    top = max(m, default=0).bit_length()
    return tuple(
        tuple((a >> i) & 1 for a in m)
        for i in range(top)
    )


def monomial_of_matrix(rows: EpsilonMatrix, k: Optional[int] = None) -> Monomial:
    """Inverse of epsilon_matrix; accepts explicit zero rows.

    k fixes the arity when the matrix has no rows; otherwise it must agree
    with the row width.
    """
    rows = tuple(tuple(r) for r in rows)
    if not rows:
        if k is None:
            raise ValueError("arity k is required for an empty matrix")
        return (0,) * k
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged digit matrix")
    if k is not None and k != width:
        raise ValueError("arity k disagrees with the row width")
    if any(bit not in (0, 1) for r in rows for bit in r):
        raise ValueError("digit matrix entries must be 0 or 1")
    return tuple(
        sum(rows[i][j] << i for i in range(len(rows)))
        for j in range(width)
    )


def tau(m: Monomial) -> TauSequence:
    """Row sums of the digit matrix."""
    _check_monomial(m)
    top = max(m, default=0).bit_length()
    return tuple(
        sum((a >> i) & 1 for a in m)
        for i in range(top)
    )


def sigma(m: Monomial) -> SigmaSequence:
    """The exponent tuple itself, read left to right."""
    _check_monomial(m)
    return tuple(m)


def lex_less(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Strict lexicographic comparison with implicit zero padding."""
    n = max(len(a), len(b))
    pa = a + (0,) * (n - len(a))
    pb = b + (0,) * (n - len(b))
    return pa < pb


def order_key(m: Monomial) -> tuple[TauSequence, SigmaSequence]:
    """Sort key realizing the (tau, sigma) order.

    tau sequences never end in zero, so plain tuple comparison on them agrees
    with zero-padded lexicographic comparison.
    """
    return (tau(m), tuple(m))


def compare(x: Monomial, y: Monomial) -> str:
    """Total order on same-arity monomials: 'less', 'equal' or 'greater'.

    tau sequences are compared lexicographically first (shorter one padded
    with zeros), ties broken by lexicographic comparison of the exponents.
    Cross-degree comparisons are legal.
    """
    if len(x) != len(y):
        raise ValueError("cannot compare monomials of different arity")
    kx, ky = order_key(x), order_key(y)
    if kx < ky:
        return "less"
    if kx > ky:
        return "greater"
    return "equal"


def is_spike(m: Monomial) -> bool:
    """True when every exponent is of the form 2^s - 1 (zero included)."""
    _check_monomial(m)
    return all(a & (a + 1) == 0 for a in m)


def spikes_of_degree(n: int, k: int) -> list[Spike]:
    """All spikes of degree n in k variables, exponents sorted descending.

    Returned spikes are the canonical descending arrangements; permutations
    are not enumerated separately.
    """
    if k < 1:
        raise ValueError("need at least one variable")
    out: set[Spike] = set()
    # Parts are 2^s - 1 with s >= 1; at most k of them.
    smax = max(n, 1).bit_length()
    parts = [2**s - 1 for s in range(1, smax + 1) if 2**s - 1 <= n]
    for r in range(1, k + 1):
        for combo in combinations_with_replacement(parts, r):
            if sum(combo) == n:
                arranged = tuple(sorted(combo, reverse=True)) + (0,) * (k - r)
                out.add(arranged)
    if n == 0:
        out.add((0,) * k)
    return sorted(out)


def minimal_spike(n: int, k: int) -> Optional[Spike]:
    """The minimal spike of degree n in k variables, if one exists.

    A minimal spike has nonzero exponents 2^{s_1}-1 > ... with the s_i
    strictly decreasing except that the last two may be equal. Existence is
    settled by exhaustive enumeration over all spikes of the degree.
    """
    for sp in spikes_of_degree(n, k):
        s = [a.bit_length() for a in sp if a]
        if not s and n > 0:
            continue
        ok = all(s[i] > s[i + 1] for i in range(len(s) - 2))
        ok = ok and (len(s) < 2 or s[-2] >= s[-1])
        if ok:
            return sp
    return None


def in_lower_tau_span(m: Monomial, bound: TauSequence) -> bool:
    """Whether tau(m) is strictly lex-below the given tau sequence.

    The bound must describe the same degree as m: sum of t_i * 2^(i-1) equal
    to deg(m). A single monomial lies in the span of strictly tau-smaller
    monomials of its degree exactly when this holds.
    """
    _check_monomial(m)
    bound = tuple(bound)
    bdeg = sum(t << i for i, t in enumerate(bound))
    if bdeg != degree(m):
        raise ValueError("degree incompatible with tau")
    return lex_less(tau(m), bound)


def poly_in_lower_tau_span(f, bound: TauSequence) -> bool:
    """Extension of in_lower_tau_span to a set of monomials, term by term."""
    return all(in_lower_tau_span(m, bound) for m in f)


def monomials_in_degree(k: int, n: int) -> tuple[Monomial, ...]:
    """Every monomial of degree n in k variables, ascending in the order.

    This is the raw enumeration; the solver wraps it with capacity checks.
    """
    return _monomials_in_degree_cached(k, n)


@lru_cache(maxsize=None)
def _monomials_in_degree_cached(k: int, n: int) -> tuple[Monomial, ...]:
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a, slots - 1)

    rec([], n, k)
    out.sort(key=order_key)
    return tuple(out)


# text forms ------------------------------------------------------------

def format_monomial(m: Monomial) -> str:
    return "(" + ",".join(str(a) for a in m) + ")"


def parse_monomial(text: str) -> Monomial:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"monomial must be parenthesized: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError(f"empty monomial: {text!r}")
    parts = [p.strip() for p in body.split(",")]
    if any(not p.isdigit() for p in parts):
        raise ValueError(f"monomial entries must be base-10 integers: {text!r}")
    m = tuple(int(p) for p in parts)
    _check_monomial(m)
    return m


def format_tau(t: TauSequence) -> str:
    return "(" + ";".join(str(v) for v in t) + ")"


def parse_tau(text: str) -> TauSequence:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"tau sequence must be parenthesized: {text!r}")
    parts = [p.strip() for p in s[1:-1].split(";")]
    if any(not p.isdigit() for p in parts):
        raise ValueError(f"tau entries must be base-10 integers: {text!r}")
    return tuple(int(p) for p in parts)


def _check_monomial(m: Monomial) -> None:
    if any(a < 0 or a > MAX_EXPONENT for a in m):
        raise ValueError("exponents must lie in [0, 2^32)")
