"""Digit matrices, weight sequences, and the monomial order.

The combinatorics that drive every dimension computation: each monomial is
read as a binary matrix, rows are summed into a weight sequence, and
monomials are compared weight-first.
"""
from hitcalc import (
    compare,
    epsilon_matrix,
    minimal_spike,
    monomials_in_degree,
    sigma,
    spikes_of_degree,
    tau,
)

m = (3, 5, 8, 6)
print("monomial", m)
print("digit rows (least significant first):")
for row in epsilon_matrix(m):
    print("  ", "".join(str(b) for b in row))
print("tau  ", tau(m))
print("sigma", sigma(m))

# Weight sequences order first; the exponent tuple only breaks ties.
a, b = (7, 0, 0, 0), (3, 3, 1, 0)
print(f"\ncompare {a} vs {b}: {compare(a, b)}")
print("  tau of the first :", tau(a))
print("  tau of the second:", tau(b))

# Spikes have every exponent of the form 2^s - 1. They are never hit, which
# makes them landmarks: the minimal spike of a degree sets the weight
# threshold below which everything is reducible.
print("\nspikes in degree 12, four variables:")
for s in spikes_of_degree(12, 4):
    print("  ", s, "tau", tau(s))

print("\nminimal spike by degree:")
for n in (2, 6, 12, 24, 58, 61):
    z = minimal_spike(n, 4)
    print(f"  n={n:3d}: {z if z is not None else 'none exists'}")

# Degree enumeration comes back sorted in the same order the solver uses.
ms = monomials_in_degree(4, 5)
print(f"\ndegree 5 holds {len(ms)} monomials; first three in order:")
for m in ms[:3]:
    print("  ", m, "tau", tau(m))
