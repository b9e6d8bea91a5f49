"""Steenrod squares acting on polynomials in a few variables.

Every computation here is exact arithmetic over GF(2). Monomials are
exponent tuples, polynomials are frozensets of monomials, and addition is
symmetric difference.
"""
from hitcalc import poly, poly_mul, sq, sq_power
from hitcalc.steenrod import hit_generator_images, kameko_down, kameko_phi

# On a single power x^a the square Sq^i either produces x^(a+i) or nothing,
# depending on the binomial coefficient C(a, i) mod 2. The parity comes from
# comparing binary digits, so survivors sit where the digits of i fit
# inside the digits of a: for a = 12 that means i in {0, 4, 8, 12}.
print("Sq^i on x^12 for i = 0..12:")
line = ""
for i in range(13):
    e = sq_power(i, 12)
    line += " ." if e is None else f" {e}"
print(line)

# Extended to several variables the square spreads over all ways to split
# its index, one factor per variable.
f = poly((3, 1))
print("\nSq^2 (x^3 y):", sorted(sq(2, f)))

# The product rule: applying Sq^4 to a product agrees with summing over
# splittings of 4 across the two factors.
g = poly((2, 2))
left = sq(4, poly_mul(f, g))
right = frozenset()
for a in range(5):
    right ^= poly_mul(sq(a, f), sq(4 - a, g))
print("product rule on (x^3 y)(x^2 y^2):", left == right)

# Top square and instability: Sq^deg squares the monomial, anything above
# kills it.
m = (2, 1, 3)
print("\nSq^6 (x^2 y z^3) is the square:", sq(6, m) == poly_mul(poly(m), poly(m)))
print("Sq^7 (x^2 y z^3) vanishes:", sq(7, m) == frozenset())

# The hit space in one degree is spanned by images of the squares with
# two-power index. hit_generator_images collects those rows.
images = hit_generator_images(3, 6)
print("\ngenerator rows in degree 6, three variables:")
for j, source, image in images.pairs():
    if image:
        print(f"  Sq^{1 << j} {source} = {sorted(image)}")
        break  # one sample per run is plenty, there are dozens

# The halving maps used for threshold degrees: phi doubles and adds one,
# down undoes it on all-odd monomials and kills the rest.
m = (3, 0, 12, 1)
print("\nphi", m, "=", kameko_phi(m))
print("down(phi(m)) == m:", kameko_down(kameko_phi(m)) == poly(m))
print("down kills mixed parity:", kameko_down(poly((2, 1, 1, 1))) == frozenset())
