"""Quotient dimensions degree by degree, and what the answer contains.

cohit() is the front door: it picks an engine, eliminates the hit space,
and returns a report with the dimension and the admissible monomial basis.
"""
import time

from hitcalc import CapacityError, cohit, is_hit, poly, qr_split, sq

print("four variables, low degrees:")
print("  n  monomials  hit rank  dimension")
for n in range(1, 11):
    r = cohit(4, n)
    print(f" {n:3d} {r.monomial_count:9d} {r.hit_rank:9d} {r.cohit_dimension:10d}")

# The report carries the basis itself.
r = cohit(4, 5)
print("\nadmissible basis in degree 5:")
print(" ", sorted(r.admissible)[:5], "...")

# Membership queries reuse the same elimination.
print("\nx^2 is hit:", is_hit(poly((2, 0, 0, 0))))
candidate = poly((2, 1, 1, 1)) ^ sq(1, poly((1, 1, 1, 1)))
print("(2,1,1,1) + Sq^1(1,1,1,1) is hit:", is_hit(candidate))

# Dimensions split by whether a monomial keeps all exponents positive.
q, rr = qr_split(4, 5)
print(f"\ndegree 5 split: {q} classes with a zero exponent, {rr} all positive")

# Large degrees switch engines automatically. Forcing the dense engine past
# its column cap is refused up front rather than attempted.
t0 = time.time()
big = cohit(4, 61, mode="auto")
print(f"\ndegree 61 dimension {big.cohit_dimension} "
      f"({big.monomial_count} monomials, {time.time() - t0:.1f}s)")
try:
    cohit(4, 95, mode="full")
except CapacityError as exc:
    print("degree 95 dense solve refused:", exc)
