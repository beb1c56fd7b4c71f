"""Finite fields F_{p^m} with exact, reproducible arithmetic.

Fields are described by a FieldSpec holding the characteristic p, the
degree m and a monic irreducible modulus over F_p, chosen as the
lexicographically smallest one so identical inputs always give identical
fields. Elements are coefficient vectors reduced mod p, low degree first.
"""

from __future__ import annotations

from itertools import product

from .errors import (DivisionByZero, EnumerationBudgetExceeded, FieldMismatch,
                     InternalError, InvalidDegree, InvalidPrime)

DEFAULT_BUDGET = 1 << 24

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin; exact for every n below 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo, hi):
    """Primes p with lo <= p <= hi, ascending."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


# --- polynomial helpers over F_p, coefficients as int tuples ---

def _ptrim(cs):
    while cs and cs[-1] == 0:
        cs = cs[:-1]
    return cs


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(tuple(((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % p
                        for k in range(n)))


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(tuple(((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % p
                        for k in range(n)))


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(tuple(c % p for c in out))


def _pmod(a, f, p):
    """a mod f with f monic."""
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1] % p
        if c:
            k = len(a) - 1 - df
            for j in range(df + 1):
                a[k + j] = (a[k + j] - c * f[j]) % p
        a.pop()
    return _ptrim(tuple(a))


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod_nonmonic(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(c * inv % p for c in a)
    return a


def _pmod_nonmonic(a, b, p):
    inv = pow(b[-1], -1, p)
    monic = tuple(c * inv % p for c in b)
    return _pmod(a, monic, p)


def _ppowmod(base, e, f, p):
    result = (1,)
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f, p):
    """Deterministic test for monic f over F_p.

    Checks x^(p^m) = x mod f and gcd(x^(p^i) - x, f) = 1 for i <= m/2.
    """
    m = len(f) - 1
    if m == 1:
        return True
    if f[0] == 0:
        return False  # divisible by x
    x = (0, 1)
    xp = x
    for i in range(1, m // 2 + 1):
        xp = _ppowmod(xp, p, f, p)
        g = _pgcd(f, _psub(xp, x, p), p)
        if g != (1,):
            return False
    for i in range(m // 2 + 1, m + 1):
        xp = _ppowmod(xp, p, f, p)
    return xp == x


class FieldSpec:
    """Immutable description of F_{p^m} plus element constructors."""

    __slots__ = ("p", "m", "q", "modulus", "_red", "_zero", "_one")

    def __init__(self, p, m, modulus):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", p ** m)
        object.__setattr__(self, "modulus", tuple(c % p for c in modulus))
        # reduction table for x^k, k = m .. 2m-2, in the power basis
        red = []
        if m > 1:
            top = tuple((-c) % p for c in self.modulus[:m])
            red.append(top)
            for _ in range(m - 2):
                prev = red[-1]
                shifted = (0,) + prev
                carry = shifted[m] if len(shifted) > m else 0
                nxt = tuple((shifted[k] + carry * top[k]) % p for k in range(m))
                red.append(nxt)
        object.__setattr__(self, "_red", tuple(red))
        object.__setattr__(self, "_zero", FFElement(self, (0,) * m))
        object.__setattr__(self, "_one", FFElement(self, (1,) + (0,) * (m - 1)))

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def element(self, coeffs):
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise FieldMismatch(f"expected {self.m} coefficients, got {len(coeffs)}")
        return FFElement(self, coeffs)

    def from_int(self, c):
        """Embed the prime-field value c."""
        return FFElement(self, (c % self.p,) + (0,) * (self.m - 1))

    def from_index(self, idx):
        """Element number idx in enumeration order (base-p digits of idx)."""
        cs = []
        for _ in range(self.m):
            cs.append(idx % self.p)
            idx //= self.p
        return FFElement(self, tuple(cs))


class FFElement:
    """Element of a FieldSpec; supports +, -, *, /, ** and equality."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FFElement is immutable")

    def _check(self, other):
        if not isinstance(other, FFElement):
            raise TypeError(f"cannot combine FFElement with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch("elements of different fields")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return (isinstance(other, FFElement) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        p, m = f.p, f.m
        if m == 1:
            return FFElement(f, (self.coeffs[0] * other.coeffs[0] % p,))
        conv = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        out = [c % p for c in conv[:m]]
        for k in range(m, 2 * m - 1):
            c = conv[k] % p
            if c:
                row = f._red[k - m]
                for t in range(m):
                    out[t] = (out[t] + c * row[t]) % p
        return FFElement(f, tuple(out))

    def inv(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        f = self.field
        if f.m == 1:
            return FFElement(f, (pow(self.coeffs[0], -1, f.p),))
        # extended euclid in F_p[x] against the modulus
        p = f.p
        a, b = _ptrim(self.coeffs), f.modulus
        ua, ub = (1,), ()
        while b:
            inv_lead = pow(b[-1], -1, p)
            monic_b = tuple(c * inv_lead % p for c in b)
            q, r = _pdivmod(a, monic_b, p)
            q = tuple(c * inv_lead % p for c in q)
            a, b = b, r
            ua, ub = ub, _psub(ua, _pmul(q, ub, p), p)
        lead_inv = pow(a[-1], -1, p)
        ua = tuple(c * lead_inv % p for c in ua)
        ua = ua + (0,) * (f.m - len(ua))
        return FFElement(f, ua[:f.m])

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def index(self):
        """Position in enumeration order (base-p value of the coefficients)."""
        idx = 0
        for c in reversed(self.coeffs):
            idx = idx * self.field.p + c
        return idx

    def __repr__(self):
        return f"FFElement({list(self.coeffs)} mod p={self.field.p})"


def _pdivmod(a, b, p):
    """Division with remainder by monic b over F_p."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), _ptrim(tuple(a))
    q = [0] * (len(a) - db)
    while len(a) - 1 >= db:
        c = a[-1] % p
        k = len(a) - 1 - db
        if c:
            q[k] = c
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % p
        a.pop()
    return _ptrim(tuple(q)), _ptrim(tuple(a))


def make_field(p, m):
    """Field with the lexicographically smallest monic irreducible modulus.

    Coefficient tuples (c_0, ..., c_{m-1}) of candidate moduli are compared
    low degree first; for m = 1 the modulus is x by convention.
    """
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if m < 1:
        raise InvalidDegree(f"extension degree must be >= 1, got {m}")
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    for tail in product(range(p), repeat=m):
        f = tail + (1,)
        if _is_irreducible(f, p):
            return FieldSpec(p, m, f)
    raise InternalError(f"no irreducible polynomial of degree {m} over F_{p}")


def field_arithmetic(a, b, op):
    """Named-operation wrapper: op is add, sub, mul, inv or pow.

    For inv the second argument is ignored; for pow it is a non-negative
    integer exponent.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown field operation {op!r}")


def enumerate_field(spec, budget=DEFAULT_BUDGET):
    """Yield all q elements in lexicographic coefficient order, 0 first."""
    if spec.q > budget:
        raise EnumerationBudgetExceeded(
            f"field size {spec.q} exceeds enumeration budget {budget}")
    for tail in product(range(spec.p), repeat=spec.m):
        # itertools.product varies the last position fastest; coefficient
        # order wants c_0 fastest, so reverse the tuple
        yield FFElement(spec, tail[::-1])
