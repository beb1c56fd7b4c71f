#!/usr/bin/env python
# Dimension group of [[3, 1], [1, 1]]: exact traces, shift, unit check.

from weilzeta import (build, equivalent, frobenius_shift_matches_eigenvalue,
                      hecke_companion, make_matrix, minimal_polynomial, shift,
                      shift_inverse, trace_value, unit_decomposition)

T = make_matrix([[3, 1], [1, 1]], ell=2)
G = build(T)
print("matrix:", T.rows, " det:", T.det())
print("lambda =", G.lam.decimal_str(12), " minimal polynomial:",
      minimal_polynomial(G.lam))

x = ((1, 0), 0)
print("tau(e1, level 0) =", trace_value(G, x).decimal_str(12))
print("after one shift   =", trace_value(G, shift(G, x)).decimal_str(12))
print("shift then shift-inverse lands in the same class:",
      equivalent(G, shift_inverse(G, shift(G, x)), x))

u = unit_decomposition(G, 2)
print("lambda/2 minimal polynomial:", u.minpoly, " unit verified:", u.verified)

comp = hecke_companion(4, 2)
print("companion matrix for trace 4, degree 2:", comp.rows)
print("its lambda is the Frobenius eigenvalue root:",
      frobenius_shift_matches_eigenvalue(build(comp), 4, 2))
