"""Frobenius data for elliptic curves and the d=1 Grossencharacter.

For y^2 = x^3 + Ax + B over F_p the Frobenius trace a = p + 1 - |E(F_p)|
determines the eigenvalue pair as roots of lambda^2 - a*lambda + q, stored
exactly as rational part plus rational multiple of sqrt(|a^2 - 4q|). For
the curve y^2 = x^3 - x, which has complex multiplication by the Gaussian
integers, the trace is also computable without counting points: write
p = a^2 + b^2 with a odd and a + b = 1 (mod 4), then the trace is 2a.
Both routes are kept separate so one can cross-check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import HasseViolation, InternalError, InvalidInput, InvalidPrime
from .ffield import is_prime
from .variety import ec_count


@dataclass(frozen=True)
class GaussianInt:
    """Element re + im*i of Z[i]."""

    re: int
    im: int

    def __add__(self, other):
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def conjugate(self):
        return GaussianInt(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def trace(self):
        return 2 * self.re

    def __str__(self):
        if self.im >= 0:
            return f"{self.re} + {self.im}i"
        return f"{self.re} - {-self.im}i"


@dataclass(frozen=True)
class FrobeniusData:
    """Eigenvalue pair rat +- rad*sqrt(|disc|) (times i when disc < 0).

    Exact invariants: the pair sums to a and multiplies to q.
    """

    a: int
    q: int
    disc: int
    rat: Fraction
    rad: Fraction

    def __post_init__(self):
        if 2 * self.rat != self.a:
            raise InternalError("eigenvalues must sum to the trace")
        if self.rat ** 2 - self.rad ** 2 * self.disc != self.q:
            raise InternalError("eigenvalues must multiply to q")

    def power_sum(self, m):
        """s_m = lambda1^m + lambda2^m by the integer recurrence."""
        if m < 0:
            raise InvalidInput("power sum index must be non-negative")
        s_prev, s_cur = 2, self.a
        if m == 0:
            return 2
        for _ in range(m - 1):
            s_prev, s_cur = s_cur, self.a * s_cur - self.q * s_prev
        return s_cur

    def extension_count(self, m):
        """N_m = q^m + 1 - (lambda1^m + lambda2^m)."""
        return self.q ** m + 1 - self.power_sum(m)

    def eigenvalue_str(self):
        rat, rad = self.rat, self.rad
        if self.disc == 0 or rad == 0:
            return f"{rat} (double)"
        unit = f"sqrt({abs(self.disc)})" if self.disc > 0 else f"i*sqrt({abs(self.disc)})"
        mag = abs(rad)
        coef = unit if mag == 1 else f"{mag}*{unit}"
        return f"{rat} +- {coef}"


def frobenius_trace(A, B, p):
    """a = p + 1 - |E(F_p)| for y^2 = x^3 + Ax + B."""
    return p + 1 - ec_count(A, B, p)


def frobenius_eigenvalues(a, q):
    """Roots of lambda^2 - a*lambda + q as exact FrobeniusData."""
    return FrobeniusData(a=a, q=q, disc=a * a - 4 * q,
                         rat=Fraction(a, 2), rad=Fraction(1, 2))


def cornacchia_two_squares(p):
    """Deterministic (x, y) with x^2 + y^2 = p for a prime p = 1 mod 4.

    Finds a square root r of -1 mod p from the smallest quadratic
    non-residue, then runs the descending Euclid step until the remainder
    drops below sqrt(p).
    """
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if p % 4 != 1:
        raise InvalidInput(f"{p} is not 1 mod 4")
    r = None
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            r = pow(n, (p - 1) // 4, p)
            break
    if r is None or (r * r + 1) % p != 0:
        raise InternalError(f"no square root of -1 mod {p}")
    a, b = p, r
    bound = isqrt(p)
    while b > bound:
        a, b = b, a % b
    y2 = p - b * b
    y = isqrt(y2)
    if y * y != y2:
        raise InternalError(f"Cornacchia failed for {p}")
    return b, y


def grossencharacter_psi(p):
    """Primary Gaussian prime a + bi over p for y^2 = x^3 - x.

    Normalization: a odd, b even, b > 0, a + b = 1 (mod 4). The value 0
    (not a unit times a prime) is returned for the supersingular primes
    p = 3 (mod 4), where the trace vanishes.
    """
    if not is_prime(p) or p <= 3:
        raise InvalidPrime(f"need a prime p > 3, got {p}")
    if p % 4 == 3:
        return GaussianInt(0, 0)
    x, y = cornacchia_two_squares(p)
    a, b = (x, y) if x % 2 == 1 else (y, x)
    b = abs(b)
    if (a + b) % 4 != 1:
        a = -a
    if (a + b) % 4 != 1:
        raise InternalError(f"primary normalization failed for {p}")
    return GaussianInt(a, b)


def grossencharacter_trace_d1(p):
    """psi + psibar for y^2 = x^3 - x: 0 for p = 3 mod 4, else 2a."""
    return grossencharacter_psi(p).trace()


def count_via_character(a, q):
    """|E(F_q)| = 1 - a + q from the trace, guarded by the Hasse bound."""
    if q < 1:
        raise HasseViolation(f"Hasse bound needs q >= 1, got q={q}")
    if a * a > 4 * q:
        raise HasseViolation(f"|a| = {abs(a)} exceeds 2*sqrt({q})")
    return 1 - a + q
