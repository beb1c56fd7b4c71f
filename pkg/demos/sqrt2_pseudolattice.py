#!/usr/bin/env python
# The pseudo-lattice Z + Z*sqrt(2): endomorphisms, density, point counts.

from fractions import Fraction

from weilzeta import (PseudoLattice, RealNumberField, contains, coordinates,
                      density_witness, endo_matrix, endo_ring_basis,
                      is_endomorphism, point_count_from_frobenius)

K = RealNumberField.quadratic(2)
s = K.gen()
L = PseudoLattice(K, (K.one(), s))

x = K.element((Fraction(3), Fraction(2)))
print("3 + 2*sqrt(2) lies in L:", contains(L, x), " coordinates:", coordinates(L, x))

half = K.element((Fraction(0), Fraction(1, 2)))
print("multiplication by sqrt(2) preserves L:", is_endomorphism(L, s))
print("multiplication by sqrt(2)/2 does not:", is_endomorphism(L, half))
print("matrix of sqrt(2) on the generators:", endo_matrix(L, s))

print("endomorphism ring basis matrices:")
for e in endo_ring_basis(L):
    print("  ", endo_matrix(L, e))

# L is dense in R: continued fractions produce arbitrarily small elements
for eps in (Fraction(1, 1000), Fraction(1, 10**6)):
    w = density_witness(L, eps)
    print(f"witness below {eps}: {w.c0} + {w.c1}*sqrt(2) =", w.value.decimal_str(12))

omega = K.one() + s
print("fixed points of omega = 1 + sqrt(2) at q = 2:",
      point_count_from_frobenius(L, omega, 2))
