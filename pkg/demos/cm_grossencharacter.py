#!/usr/bin/env python
# Frobenius traces of y^2 = x^3 - x from Gaussian integers, no counting.
#
# For split primes p = 1 mod 4 the trace is 2*Re(psi(p)) where psi(p) is
# the primary Gaussian prime above p; inert primes give trace 0. Every
# value is cross-checked against the quadratic-character count.

from weilzeta import (cornacchia_two_squares, count_via_character, ec_count,
                      frobenius_eigenvalues, frobenius_trace,
                      grossencharacter_psi, grossencharacter_trace_d1,
                      primes_in_range)

for p in primes_in_range(5, 61):
    psi = grossencharacter_psi(p)
    a = grossencharacter_trace_d1(p)
    brute = frobenius_trace(-1, 0, p)
    assert a == brute
    assert count_via_character(a, p) == ec_count(-1, 0, p)
    tag = "split" if p % 4 == 1 else "inert"
    print(f"p = {p:2d} ({tag:5s}): psi = {psi}, trace = {a:3d}, |E(F_p)| = {p + 1 - a}")

print()
print("5 as a sum of two squares:", cornacchia_two_squares(5))
frob = frobenius_eigenvalues(frobenius_trace(-1, 0, 5), 5)
print("Frobenius eigenvalues over F_5:", frob.eigenvalue_str())
print("N_m for m = 1..5:", [frob.extension_count(m) for m in range(1, 6)])
