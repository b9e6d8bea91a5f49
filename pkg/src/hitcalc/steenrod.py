"""The squaring operations on F2[x_1..x_k] and the doubling maps.

Polynomials are frozensets of monomials; addition is symmetric difference.
Sq^i acts on a power x^a by the binomial rule: the coefficient of x^(a+i)
is C(a, i) mod 2, which by Lucas is odd exactly when i fits inside a - i
bitwise. The action on a product distributes over all compositions of i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .monomials import Monomial, degree, monomials_in_degree

Polynomial = frozenset  # of Monomial

ZERO: Polynomial = frozenset()


def poly(*monomials: Monomial) -> Polynomial:
    """Build a polynomial, folding repeated monomials mod 2."""
    acc: set[Monomial] = set()
    for m in monomials:
        acc.symmetric_difference_update({tuple(m)})
    return frozenset(acc)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return frozenset(f) ^ frozenset(g)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    acc: set[Monomial] = set()
    for a in f:
        for b in g:
            acc.symmetric_difference_update(
                {tuple(x + y for x, y in zip(a, b))}
            )
    return frozenset(acc)


def sq_power(i: int, a: int) -> Optional[int]:
    """Sq^i on a single power x^a: the new exponent, or None for zero.

    None is the zero marker; exponent 0 is a legitimate result (i = a = 0),
    so a sentinel outside the exponent range is needed.
    """
    if i < 0 or a < 0:
        raise ValueError("negative input")
    if i == 0:
        return a
    if i > a:
        return None
    if (a - i) & i:
        return None
    return a + i


def sq_monomial(i: int, m: Monomial) -> Polynomial:
    """Sq^i of one monomial: sum over compositions i = i_1 + .. + i_k."""
    if i < 0:
        raise ValueError("negative index")
    k = len(m)
    acc: set[Monomial] = set()

    def rec(j: int, left: int, prefix: tuple[int, ...]) -> None:
        if j == k - 1:
            e = sq_power(left, m[j])
            if e is not None:
                acc.symmetric_difference_update({prefix + (e,)})
            return
        for ij in range(left + 1):
            e = sq_power(ij, m[j])
            if e is not None:
                rec(j + 1, left - ij, prefix + (e,))

    rec(0, i, ())
    return frozenset(acc)


def sq(i: int, f) -> Polynomial:
    """Sq^i extended linearly to polynomials.

    Accepts a polynomial (any iterable of monomials) or a bare monomial.
    """
    if isinstance(f, tuple) and f and all(isinstance(a, int) for a in f):
        f = (f,)
    acc: set[Monomial] = set()
    for m in f:
        acc.symmetric_difference_update(sq_monomial(i, tuple(m)))
    return frozenset(acc)


@dataclass(frozen=True)
class GeneratorImageSet:
    """All generator rows of the hit space in one degree.

    images maps j to the list of (source, Sq^(2^j) source) pairs, sources
    ascending in the monomial order. Zero images are kept as empty
    polynomials so row counts match source counts.
    """
    k: int
    degree: int
    images: dict[int, tuple[tuple[Monomial, Polynomial], ...]]

    def pairs(self) -> Iterable[tuple[int, Monomial, Polynomial]]:
        for j in sorted(self.images):
            for source, image in self.images[j]:
                yield j, source, image

    def total(self) -> int:
        return sum(len(v) for v in self.images.values())


def hit_generator_images(k: int, n: int) -> GeneratorImageSet:
    """Sources and images of every Sq^(2^j) landing in degree n, 2^j <= n."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    images: dict[int, tuple[tuple[Monomial, Polynomial], ...]] = {}
    j = 0
    while (1 << j) <= n:
        i = 1 << j
        rows = tuple(
            (m, sq_monomial(i, m))
            for m in monomials_in_degree(k, n - i)
        )
        images[j] = rows
        j += 1
    return GeneratorImageSet(k=k, degree=n, images=images)


def kameko_phi(m: Monomial) -> Monomial:
    """The doubling-plus-one map, exponent a to 2a + 1."""
    return tuple(2 * a + 1 for a in m)


def kameko_down_monomial(m: Monomial) -> Optional[Monomial]:
    if all(a % 2 == 1 for a in m):
        return tuple((a - 1) // 2 for a in m)
    return None


def kameko_down(f) -> Polynomial:
    """The left inverse of kameko_phi on polynomials.

    All-odd monomials map to their halved form, everything else to zero.
    Distinct all-odd monomials have distinct images, so no folding occurs.
    """
    if isinstance(f, tuple) and f and all(isinstance(a, int) for a in f):
        f = (f,)
    acc: set[Monomial] = set()
    for m in f:
        down = kameko_down_monomial(tuple(m))
        if down is not None:
            acc.add(down)
    return frozenset(acc)
