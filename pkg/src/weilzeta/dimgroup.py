"""Dimension groups of primitive non-negative integer matrices.

A primitive matrix T generates a direct limit Z^b -> Z^b -> ... whose
elements are pairs (v, k) of an integer vector and a level, identified
under v ~ Tv at the next level. The Perron-Frobenius eigenvalue lambda
and a left eigenvector w with w_1 = 1 give an exact trace
(v, k) |-> <v, w> / lambda^k into the real subgroup Z[1/lambda]-span of
the w entries; the shift (v, k) |-> (Tv, k) scales the trace by lambda
and models a Frobenius action.

lambda is found from the exact characteristic polynomial: factor over the
rationals, isolate real roots with Sturm chains, take the largest. No
floating point enters any trusted value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import qpoly
from .errors import (DegenerateSpectrum, DimensionMismatch, InternalError,
                     InvalidInput, NotPrimitive, NotRepresentable, ParseError)
from .qlinalg import charpoly_int, det_int, mat_vec_int, solve_right
from .realalg import (RealAlgebraic, RealNumberField, minimal_polynomial,
                      same_number)

@dataclass(frozen=True)
class HeckeLikeMatrix:
    """Primitive non-negative integer matrix, optionally det/symmetry tagged.

    Primitivity means some power has strictly positive entries; by
    Wielandt's bound it suffices to look at exponents up to (b-1)^2 + 1.
    When ell is given the matrix must in addition be symmetric with
    determinant ell.
    """

    b: int
    rows: tuple
    ell: int | None = None

    def __post_init__(self):
        if self.b < 1 or len(self.rows) != self.b:
            raise DimensionMismatch(f"expected {self.b} rows")
        for row in self.rows:
            if len(row) != self.b:
                raise DimensionMismatch("matrix must be square")
            for v in row:
                if not isinstance(v, int) or v < 0:
                    raise InvalidInput(f"entries must be non-negative integers, got {v!r}")
        bound = (self.b - 1) ** 2 + 1
        positive = [[v > 0 for v in row] for row in self.rows]
        power = positive
        for _ in range(bound):
            if all(all(row) for row in power):
                break
            power = [[any(power[i][k] and positive[k][j] for k in range(self.b))
                      for j in range(self.b)] for i in range(self.b)]
        else:
            raise NotPrimitive(
                f"no power up to {bound} has all entries positive")
        if self.ell is not None:
            if any(self.rows[i][j] != self.rows[j][i]
                   for i in range(self.b) for j in range(self.b)):
                raise InvalidInput("determinant-tagged matrix must be symmetric")
            d = det_int(self.rows)
            if d != self.ell:
                raise InvalidInput(f"determinant is {d}, expected {self.ell}")

    def det(self):
        return det_int(self.rows)

    def apply(self, v):
        return tuple(mat_vec_int(self.rows, v))

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def make_matrix(rows, ell=None):
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    return HeckeLikeMatrix(b=len(rows), rows=rows, ell=ell)


def _largest_real_root(charpoly):
    """(irreducible factor, isolating interval) of the largest real root."""
    t = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(charpoly)), t, domain="ZZ")
    candidates = []
    for fac, _ in poly.factor_list()[1]:
        coeffs = qpoly.trim(tuple(int(v) for v in reversed(fac.all_coeffs())))
        roots = qpoly.isolate_real_roots(coeffs)
        if roots:
            candidates.append((coeffs, roots[-1]))
    if not candidates:
        raise InternalError("characteristic polynomial has no real root")
    best_poly, best = candidates[0]
    for other_poly, other in candidates[1:]:
        lo, hi = best
        olo, ohi = other
        # distinct irreducibles never share a root, so refinement separates
        while not (hi < olo or ohi < lo):
            if lo != hi:
                lo, hi = qpoly.refine_bracket(best_poly, lo, hi)
            if olo != ohi:
                olo, ohi = qpoly.refine_bracket(other_poly, olo, ohi)
        if olo > hi:
            best_poly, best = other_poly, (olo, ohi)
        else:
            best = (lo, hi)
    return best_poly, best


@dataclass(frozen=True)
class DimensionGroup:
    """Direct limit data: matrix, Perron-Frobenius lambda, left eigenvector."""

    matrix: HeckeLikeMatrix
    field: RealNumberField
    lam: RealAlgebraic
    w: tuple

    @property
    def b(self):
        return self.matrix.b


def build(T):
    """DimensionGroup of a primitive matrix.

    Exact pipeline: characteristic polynomial, factorization over Q,
    Sturm isolation of the largest real root lambda (DegenerateSpectrum
    unless lambda > 1), then the left eigenvector w with w_1 = 1 solved in
    Q(lambda) and re-verified entrywise, including positivity.
    """
    if not isinstance(T, HeckeLikeMatrix):
        T = make_matrix(T)
    chi = charpoly_int(T.rows)
    minpoly, interval = _largest_real_root(chi)
    field = RealNumberField(minpoly, interval, check=False)
    lam = field.gen()
    if not lam > 1:
        raise DegenerateSpectrum(
            "Perron-Frobenius eigenvalue must exceed 1 for a dense limit")
    b = T.b
    zero = field.zero()
    if b == 1:
        w = (field.one(),)
    else:
        # equations sum_i w_i T[i][j] = lam w_j with w_0 = 1 known
        rows = []
        rhs = []
        for j in range(b):
            row = []
            for i in range(1, b):
                coef = field.from_rational(T.rows[i][j])
                if i == j:
                    coef = coef - lam
                row.append(coef)
            rows.append(row)
            r = field.from_rational(-T.rows[0][j])
            if j == 0:
                r = r + lam
            rhs.append(r)
        sol = solve_right(rows, rhs, zero)
        if sol is None:
            raise InternalError("left eigenvector system is inconsistent")
        w = (field.one(),) + tuple(sol)
    for j in range(b):
        acc = zero
        for i in range(b):
            acc = acc + T.rows[i][j] * w[i]
        if acc != lam * w[j]:
            raise InternalError("wT = lambda w failed verification")
    for entry in w:
        if entry.sign() <= 0:
            raise InternalError("Perron-Frobenius eigenvector must be positive")
    return DimensionGroup(matrix=T, field=field, lam=lam, w=w)


def _check_element(G, x):
    v, k = x
    v = tuple(int(c) for c in v)
    if len(v) != G.b:
        raise DimensionMismatch(f"vector must have length {G.b}")
    if k < 0:
        raise InvalidInput("level must be non-negative")
    return v, int(k)


def trace_value(G, x):
    """<v, w> / lambda^k, exact in Q(lambda)."""
    v, k = _check_element(G, x)
    acc = G.field.zero()
    for c, entry in zip(v, G.w):
        acc = acc + c * entry
    if k:
        acc = acc * G.lam.inverse() ** k
    return acc


def shift(G, x):
    """(v, k) -> (Tv, k); multiplies the trace by lambda."""
    v, k = _check_element(G, x)
    return G.matrix.apply(v), k


def shift_inverse(G, x):
    """(v, k) -> (v, k+1); divides the trace by lambda."""
    v, k = _check_element(G, x)
    return v, k + 1


def equivalent(G, x, y):
    """Direct-limit equality of (v, j) and (v', k).

    Both elements are pushed to level m = max(j, k); for invertible T one
    comparison decides, otherwise levels up to j + k + b are tried.
    """
    v, j = _check_element(G, x)
    u, k = _check_element(G, y)
    m = max(j, k)
    for _ in range(m - j):
        v = G.matrix.apply(v)
    for _ in range(m - k):
        u = G.matrix.apply(u)
    if v == u:
        return True
    if G.matrix.det() != 0:
        return False
    for _ in range(m, j + k + G.b):
        v = G.matrix.apply(v)
        u = G.matrix.apply(u)
        if v == u:
            return True
    return False


@dataclass(frozen=True)
class UnitDecomposition:
    """lambda/ell with its minimal polynomial and the unit verdict."""

    lam_unit: RealAlgebraic
    minpoly: tuple
    verified: bool


def unit_decomposition(G, ell):
    """Check whether lambda = ell * (algebraic unit).

    lambda/ell is a unit iff its minimal polynomial is monic over the
    integers (algebraic integer) with constant term +-1 (invertible). The
    verdict is reported, never assumed; it fails for most matrices.
    """
    if ell < 2:
        raise InvalidInput("ell must be at least 2")
    lam_unit = G.lam * Fraction(1, ell)
    minpoly = minimal_polynomial(lam_unit)
    verified = minpoly[-1] == 1 and abs(minpoly[0]) == 1
    return UnitDecomposition(lam_unit=lam_unit, minpoly=minpoly, verified=verified)


def hecke_companion(a, ell):
    """Symmetric primitive matrix [[s, u], [u, t]] with trace a, det ell.

    Searches s + t = a, s*t - u^2 = ell with non-negative diagonal, u >= 1
    and entries at most a, taking the largest valid s first. Eigenvalues
    in the Hasse range a^2 < 4*ell admit no such matrix (a real symmetric
    matrix has real spectrum), reported as NotRepresentable.
    """
    from math import isqrt
    if ell < 2:
        raise InvalidInput("ell must be at least 2")
    if a * a < 4 * ell:
        raise NotRepresentable(
            f"x^2 - {a}x + {ell} has complex roots; no symmetric integer "
            f"matrix has that spectrum")
    if a < 0:
        raise NotRepresentable("non-negative entries force a non-negative trace")
    for s in range(a - 1, 0, -1):
        t = a - s
        u2 = s * t - ell
        if u2 < 1:
            continue
        u = isqrt(u2)
        if u * u != u2 or u > a:
            continue
        return make_matrix([[s, u], [u, t]], ell=ell)
    raise NotRepresentable(f"no symmetric matrix matches trace {a}, det {ell}")


def frobenius_shift_matches_eigenvalue(G, a, ell):
    """Whether lambda of G is exactly the largest root of x^2 - ax + ell.

    Exact test: the minimal polynomial of lambda must be that quadratic
    and the isolating intervals must select the same root.
    """
    quad = (ell, -a, 1)
    if a * a - 4 * ell < 0:
        return False
    if minimal_polynomial(G.lam) != qpoly.primitive_int(quad):
        return False
    root_poly, interval = _largest_real_root(quad)
    field = RealNumberField(root_poly, interval, check=False)
    return same_number(G.lam, field.gen())


def parse_matrix(text, path="<string>"):
    """Whitespace-separated integer rows, one per line; '#' lines skipped."""
    rows = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([int(v) for v in line.split()])
        except ValueError:
            raise ParseError(f"line {no}: entries must be integers") from None
    if not rows:
        raise ParseError(f"{path}: empty matrix")
    width = len(rows[0])
    for no, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(f"row {no}: expected {width} entries, got {len(row)}")
    if len(rows) != width:
        raise ParseError(f"{path}: matrix must be square, got {len(rows)}x{width}")
    return make_matrix(rows)


def load_matrix(path, ell=None):
    with open(path, "r", encoding="utf-8") as fh:
        T = parse_matrix(fh.read(), path=str(path))
    if ell is not None:
        T = make_matrix(T.rows, ell=ell)
    return T
