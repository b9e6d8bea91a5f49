"""Two cheap filters and a catalog of forbidden windows.

Most monomials in a degree are reducible for reasons visible in their
weight sequences alone. The solver exploits that twice: whole weight
classes are discarded before any elimination, and small digit-matrix
patterns certify reducibility monomial by monomial.
"""
from math import comb, prod
from pathlib import Path

from hitcalc import (
    beta,
    catalog_inadmissible,
    delta_matches,
    minimal_spike,
    monomial_of_matrix,
    monomials_in_degree,
    strictly_inadmissible,
    survivor_data,
)
from hitcalc.verify import load_patterns

DATA = Path(__file__).resolve().parent.parent / "data"

# How much the weight filters remove, degree by degree. The first filter
# keys on the odd-exponent count, the second on the minimal spike.
print("  n   total  killed  survive   threshold  minimal spike")
for n in (6, 9, 14, 20, 24):
    data = survivor_data(4, n)
    total = comb(n + 3, 3)
    killed = sum(prod(comb(4, t) for t in cls) for cls in data.killed)
    print(f" {n:3d} {total:7d} {killed:7d} {total - killed:8d}"
          f"       b={beta(n)}     {minimal_spike(n, 4)}")

# A window is a short block of digit rows. If the block appears in the
# digit matrix of a monomial at any row offset, the monomial is reducible.
catalog = load_patterns(DATA / "windows" / "catalog.txt")
w = catalog[0]
print(f"\nfirst of {len(catalog)} catalog windows:")
for row in w:
    print("  ", "".join(str(b) for b in row))
print("strictly inadmissible:", strictly_inadmissible(w))

# Realize the window as a monomial and watch the match track doubling,
# which shifts every digit row down by one.
x = monomial_of_matrix(w)
print(f"\n{x} contains the window:", delta_matches(w, x))
doubled = tuple(2 * a for a in x)
print(f"{doubled} still contains it:", delta_matches(w, doubled))

# Scanning a whole degree against the full catalog.
marked = [m for m in monomials_in_degree(4, 9)
          if catalog_inadmissible(m, catalog)]
print(f"\ndegree 9: {len(marked)} of {comb(12, 3)} monomials carry "
      f"a catalog window, e.g. {marked[0]}")
