#!/usr/bin/env python
# Zeta functions of projective spaces, built from raw point counts.
#
# P^n over F_p has (p^(m(n+1)) - 1) / (p^m - 1) points over F_{p^m}; the
# script never uses that formula, it just counts representatives and lets
# the rational reconstruction find Z(t) = 1 / ((1-t)(1-pt)...(1-p^n t)).

from weilzeta import (count_series, functional_equation_check,
                      pade_reconstruct, parse_variety, weight_split,
                      zeta_series)
from weilzeta.qpoly import poly_str

for p in (2, 3, 5):
    for n in (0, 1, 2):
        v = parse_variety(f"field p={p}\nambient projective dim={n} vardim={n}\n")
        counts = count_series(v, n + 1)
        z = pade_reconstruct(zeta_series(counts), 0, n + 1)
        fact = weight_split(z, p, n)
        sign = functional_equation_check(z, p, n, fact.chi)
        print(f"P^{n} over F_{p}: counts {counts.counts}")
        print(f"  Z(t) = ({poly_str(z.num)}) / ({poly_str(z.den)})")
        print(f"  euler characteristic {fact.chi}, functional equation sign {sign:+d}")
