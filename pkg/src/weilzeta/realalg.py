"""Exact real algebraic numbers as elements of a designated number field.

A RealNumberField is Q(theta) for theta the unique real root of a monic
irreducible integer polynomial inside a rational isolating interval,
certified by a Sturm count at construction. Elements are rational
coordinate vectors in the power basis 1, theta, ..., theta^(D-1).

Arithmetic is exact. Comparisons are decided by an exact zero test on the
coordinates followed by interval refinement, never by fixed-precision
floating point. The isolating interval narrows monotonically as a shared
cache; the numeric identity of every value is immutable.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from math import floor as _floor

import sympy

from . import qpoly
from .errors import (DivisionByZero, FieldMismatch, InternalError,
                     InvalidInterval, NotIrreducible)
from .qlinalg import nullspace


def _interval_eval(p, lo, hi):
    """Enclosure of p over [lo, hi] by monomial interval arithmetic."""
    plo, phi = Fraction(1), Fraction(1)
    acc_lo, acc_hi = Fraction(0), Fraction(0)
    for c in p:
        if c:
            c = Fraction(c)
            term_lo = min(c * plo, c * phi)
            term_hi = max(c * plo, c * phi)
            acc_lo += term_lo
            acc_hi += term_hi
        cands = (plo * lo, plo * hi, phi * lo, phi * hi)
        plo, phi = min(cands), max(cands)
    return acc_lo, acc_hi


def is_irreducible_over_q(coeffs):
    """Irreducibility over the rationals via factorization."""
    coeffs = qpoly.trim(coeffs)
    if len(coeffs) <= 1:
        return False
    if len(coeffs) == 2:
        return True
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([int(c) for c in coeffs])), x)
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1


class RealNumberField:
    """Q(theta) with theta pinned by minpoly plus an isolating interval."""

    def __init__(self, minpoly, interval, check=True):
        minpoly = tuple(int(c) for c in qpoly.trim(minpoly))
        if not minpoly or minpoly[-1] != 1:
            raise NotIrreducible("minimal polynomial must be monic with integer coefficients")
        self.minpoly = minpoly
        self.degree = len(minpoly) - 1
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if self.degree == 1:
            root = Fraction(-minpoly[0])
            if not lo <= root <= hi:
                raise InvalidInterval(f"interval does not contain the root {root}")
            lo = hi = root
        else:
            if check and not is_irreducible_over_q(minpoly):
                raise NotIrreducible(f"{qpoly.poly_str(minpoly, 'x')} is reducible over Q")
            if lo >= hi:
                raise InvalidInterval("interval must satisfy lo < hi")
            if qpoly.eval_at(minpoly, lo) == 0 or qpoly.eval_at(minpoly, hi) == 0:
                raise InvalidInterval("interval endpoints must not be roots")
            if qpoly.count_roots(minpoly, lo, hi) != 1:
                raise InvalidInterval("interval must isolate exactly one real root")
        self._interval = [lo, hi]
        # reduction rows for theta^k, k = D .. 2D-2
        D = self.degree
        rows = []
        if D > 1:
            top = tuple(Fraction(-c) for c in minpoly[:D])
            rows.append(top)
            for _ in range(D - 2):
                shifted = (Fraction(0),) + rows[-1]
                carry = shifted[D]
                rows.append(tuple(shifted[k] + carry * top[k] for k in range(D)))
        self._red = tuple(rows)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RealNumberField):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        if self.degree == 1:
            return True
        # same polynomial: equal iff both intervals select the same root,
        # i.e. the overlap contains a root (each interval holds exactly one,
        # and construction forbids roots at endpoints)
        lo = max(self._interval[0], other._interval[0])
        hi = min(self._interval[1], other._interval[1])
        if lo >= hi:
            return False
        return qpoly.count_roots(self.minpoly, lo, hi) == 1

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        lo, hi = self._interval
        return f"RealNumberField({qpoly.poly_str(self.minpoly, 'x')}, root in [{lo}, {hi}])"

    @classmethod
    def rationals(cls):
        """The degree-1 field Q, generator 0."""
        return cls((0, 1), (0, 0))

    @classmethod
    def quadratic(cls, d):
        """Q(sqrt(d)) for a non-square integer d >= 2."""
        from math import isqrt
        r = isqrt(d)
        if r * r == d:
            raise NotIrreducible(f"{d} is a perfect square")
        return cls((-d, 0, 1), (r, r + 1))

    def refine(self):
        """Halve the isolating interval of theta (monotone cache update)."""
        lo, hi = self._interval
        if lo == hi:
            return
        lo2, hi2 = qpoly.refine_bracket(self.minpoly, lo, hi)
        self._interval = [lo2, hi2]

    def interval(self):
        return tuple(self._interval)

    def zero(self):
        return RealAlgebraic(self, (Fraction(0),) * self.degree)

    def one(self):
        return RealAlgebraic(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def gen(self):
        """theta itself."""
        if self.degree == 1:
            return self.from_rational(self._interval[0])
        cs = [Fraction(0)] * self.degree
        cs[1] = Fraction(1)
        return RealAlgebraic(self, tuple(cs))

    def from_rational(self, r):
        cs = [Fraction(0)] * self.degree
        cs[0] = Fraction(r)
        return RealAlgebraic(self, tuple(cs))

    def element(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise FieldMismatch(f"expected {self.degree} coordinates, got {len(coords)}")
        return RealAlgebraic(self, coords)

    def _reduce(self, conv):
        """Reduce a convolution of length <= 2D-1 modulo the minimal polynomial."""
        D = self.degree
        out = list(conv[:D]) + [Fraction(0)] * (D - len(conv[:D]))
        for k in range(D, len(conv)):
            c = conv[k]
            if c:
                row = self._red[k - D]
                for t in range(D):
                    out[t] += c * row[t]
        return tuple(out)


class RealAlgebraic:
    """Immutable exact real number inside a RealNumberField."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("RealAlgebraic is immutable")

    # --- coercion helpers ---

    def _coerce(self, other):
        if isinstance(other, RealAlgebraic):
            if other.field != self.field:
                raise FieldMismatch("elements of different real number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # --- ring operations ---

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RealAlgebraic(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return RealAlgebraic(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        D = f.degree
        if D == 1:
            return RealAlgebraic(f, (self.coords[0] * o.coords[0],))
        conv = [Fraction(0)] * (2 * D - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        conv[i + j] += a * b
        return RealAlgebraic(f, f._reduce(conv))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        f = self.field
        if f.degree == 1:
            return RealAlgebraic(f, (1 / self.coords[0],))
        g, u, _ = qpoly.ext_gcd_poly(qpoly.trim(self.coords), f.minpoly)
        assert qpoly.degree(g) == 0
        inv_coords = qpoly.divmod_poly(u, f.minpoly)[1]
        cs = tuple(inv_coords) + (Fraction(0),) * (f.degree - len(inv_coords))
        return RealAlgebraic(f, cs[:f.degree])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # --- exact predicates and comparisons ---

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coords[0]

    def sign(self):
        """Exact sign in {-1, 0, 1}."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coords[0] > 0 else -1
        f = self.field
        while True:
            lo, hi = f._interval
            vlo, vhi = _interval_eval(self.coords, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            f.refine()

    def interval(self):
        """Current rational enclosure of the value (refinable)."""
        lo, hi = self.field._interval
        return _interval_eval(self.coords, lo, hi)

    def refine_to_width(self, width):
        """Shrink the enclosure below the given rational width."""
        lo, hi = self.interval()
        while hi - lo >= width:
            self.field.refine()
            lo, hi = self.interval()
        return lo, hi

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return not self.is_zero()

    def __floor__(self):
        if self.is_rational():
            return _floor(self.coords[0])
        lo, hi = self.interval()
        while _floor(lo) != _floor(hi):
            self.field.refine()
            lo, hi = self.interval()
        return _floor(lo)

    def floor(self):
        return self.__floor__()

    def decimal_str(self, digits=30):
        """Deterministic decimal rendering with the given significant digits."""
        if self.is_zero():
            return "0"
        if self.sign() < 0:
            return "-" + (-self).decimal_str(digits)
        lo, hi = self.interval()
        while lo <= 0:
            self.field.refine()
            lo, hi = self.interval()
        target = lo * Fraction(10) ** -(digits + 3)
        lo, hi = self.refine_to_width(target)
        mid = (lo + hi) / 2
        with localcontext() as ctx:
            ctx.prec = digits
            d = Decimal(mid.numerator) / Decimal(mid.denominator)
            return str(d)

    def __repr__(self):
        cs = ", ".join(str(c) for c in self.coords)
        return f"RealAlgebraic(({cs}))"


def minimal_polynomial(x):
    """Primitive integer minimal polynomial of x over Q, positive leading
    coefficient, coefficients low degree first.

    Computed exactly: the powers 1, x, ..., x^k are tested for the first
    rational linear dependence.
    """
    f = x.field
    D = f.degree
    powers = [f.one().coords]
    cur = f.one()
    for k in range(1, D + 1):
        cur = cur * x
        powers.append(cur.coords)
        # columns: coordinates of 1, x, .., x^k; dependence = kernel vector
        A = [[powers[j][d] for j in range(k + 1)] for d in range(D)]
        basis = nullspace(A, Fraction(0), Fraction(1))
        if basis:
            # take the dependence involving the highest power
            vec = next((v for v in basis if v[-1] != 0), None)
            if vec is not None:
                monic = tuple(Fraction(c) / vec[-1] for c in vec)
                return qpoly.primitive_int(monic)
    raise InternalError("no minimal polynomial found below field degree")


def same_number(x, y):
    """Exact equality across possibly different fields."""
    if isinstance(x, RealAlgebraic) and isinstance(y, RealAlgebraic) and x.field == y.field:
        return x == y
    mx = minimal_polynomial(x)
    my = minimal_polynomial(y)
    if mx != my:
        return False
    if len(mx) == 2:
        return True  # both equal the unique rational root
    while True:
        ax, bx = x.interval()
        ay, by = y.interval()
        if bx < ay or by < ax:
            return False
        lo, hi = min(ax, ay), max(bx, by)
        count = qpoly.count_roots(mx, lo, hi)
        if count == 1:
            return True
        x.field.refine()
        y.field.refine()
