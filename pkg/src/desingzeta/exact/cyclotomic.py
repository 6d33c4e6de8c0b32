"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(n)-1) with
Fraction coefficients, reduced modulo the n-th cyclotomic polynomial, so
equality of reduced vectors is equality of field elements and rationality
is "all non-constant coefficients zero".
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from ..errors import ParameterError

__all__ = [
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "as_unit_root_exponent",
]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ParameterError("order must be a positive integer")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_int_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic-leading after scaling
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("non-exact polynomial division")
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-zero remainder in exact division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ParameterError("order must be a positive integer")
    if n == 1:
        return (-1, 1)
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_int_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _field(n: int):
    """Per-order data: (phi(n), Phi_n coefficients, reduction table).

    table[m - phi] is the reduced integer vector of zeta^m for
    m = phi .. 2*phi - 2, which is all a product of two reduced
    elements can reach.
    """
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    vec = [0] * phi
    vec[0] = 1
    table = []
    for m in range(2 * phi - 1):
        if m >= phi:
            table.append(tuple(vec))
        top = vec[phi - 1]
        vec = [0] + vec[: phi - 1]
        if top:
            for j in range(phi):
                vec[j] -= top * poly[j]
    return phi, poly, tuple(table)


def _reduce_int(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient list (any length < 2*phi) mod Phi_n."""
    phi, _poly, table = _field(n)
    out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
    for m in range(phi, len(coeffs)):
        c = coeffs[m]
        if c:
            row = table[m - phi]
            for j in range(phi):
                out[j] += c * row[j]
    return out


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


class CyclotomicNumber:
    """Immutable element of Q(zeta_n) on the power basis mod Phi_n."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = _field(order)[0]
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ParameterError(
                f"need phi({order}) = {phi} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, q, order: int = 1) -> "CyclotomicNumber":
        phi = _field(order)[0]
        return cls(order, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicNumber":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CyclotomicNumber":
        return cls.from_rational(1, order)

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and self.is_rational()

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ParameterError("element is not rational")
        return self.coeffs[0]

    # -- field embeddings ----------------------------------------------
    def promote(self, order: int) -> "CyclotomicNumber":
        """Image under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n)."""
        n = self.order
        if order == n:
            return self
        if order % n != 0:
            raise ParameterError(f"{n} does not divide {order}")
        step = order // n
        phi_m = _field(order)[0]
        # integer convolution path: common denominator
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            ints[step * i] = int(c * den)
        # long vector may exceed 2*phi-2; reduce by repeated folding
        red = _reduce_long(ints, order)
        return CyclotomicNumber(order, [Fraction(v, den) for v in red[:phi_m]])

    def galois(self, a: int) -> "CyclotomicNumber":
        """Apply zeta_n -> zeta_n^a; requires gcd(a, n) = 1."""
        n = self.order
        if n == 1:
            return self
        if math.gcd(a % n, n) != 1:
            raise ParameterError("galois exponent must be coprime to the order")
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [0] * n
        for i, c in enumerate(self.coeffs):
            ints[(a * i) % n] += int(c * den)
        red = _reduce_long(ints, n)
        return CyclotomicNumber(n, [Fraction(v, den) for v in red])

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(self.order - 1 if self.order > 1 else 1)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            m = math.lcm(self.order, other.order)
            return self.promote(m), other.promote(m)
        q = _as_fraction(other)
        if q is None:
            return None, None
        return self, CyclotomicNumber.from_rational(q, self.order)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CyclotomicNumber(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        q = _as_fraction(other)
        if q is not None:
            return CyclotomicNumber(self.order, [c * q for c in self.coeffs])
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        # integer convolution with common denominators (fast path)
        da = math.lcm(*(c.denominator for c in a.coeffs))
        db = math.lcm(*(c.denominator for c in b.coeffs))
        ia = [int(c * da) for c in a.coeffs]
        ib = [int(c * db) for c in b.coeffs]
        prod = [0] * (len(ia) + len(ib) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    if y:
                        prod[i + j] += x * y
        red = _reduce_int(prod, a.order)
        d = da * db
        return CyclotomicNumber(a.order, [Fraction(v, d) for v in red])

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.coeffs[0], self.order)
        n = self.order
        poly = [Fraction(c) for c in cyclotomic_polynomial(n)]
        inv = _poly_modinv(list(self.coeffs), poly)
        phi = _field(n)[0]
        inv = inv + [Fraction(0)] * (phi - len(inv))
        return CyclotomicNumber(n, inv[:phi])

    def __truediv__(self, other):
        q = _as_fraction(other)
        if q is not None:
            return self * (Fraction(1) / q)
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        q = _as_fraction(other)
        if q is None:
            return NotImplemented
        return self.inverse() * q

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        q = _as_fraction(other)
        if q is not None:
            return self.is_rational() and self.coeffs[0] == q
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        m = math.lcm(self.order, other.order)
        return self.promote(m).coeffs == other.promote(m).coeffs

    def __hash__(self):
        # Rational values hash like their Fraction so x == Fraction(...) is
        # hash-consistent.  Irrational elements hash by (order, coeffs);
        # library code always compares within one field after promotion.
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicNumber({self.coeffs[0]})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(f"({c})*z{self.order}^{i}" if i > 1 else f"({c})*z{self.order}")
        return " + ".join(parts) or "0"

    def key(self):
        """Canonical hashable key (memoisation helper)."""
        return (self.order, self.coeffs)


def _reduce_long(ints: list[int], n: int) -> list[int]:
    """Reduce an arbitrarily long integer coefficient vector mod Phi_n."""
    phi, poly, _ = _field(n)
    ints = list(ints)
    for m in range(len(ints) - 1, phi - 1, -1):
        c = ints[m]
        if c:
            ints[m] = 0
            for j in range(phi):
                ints[m - phi + j] -= c * poly[j]
    out = ints[:phi] + [0] * max(0, phi - len(ints))
    return out


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        for j, d in enumerate(b):
            a[i + j] -= c * d
    return q, _poly_trim(a[: len(b) - 1])


def _poly_modinv(a, mod):
    """Inverse of polynomial a modulo mod over Q (extended Euclid)."""
    r0, r1 = list(mod), _poly_trim(list(a))
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        # t0 - q*t1
        prod = [Fraction(0)] * (len(q) + len(t1) - 1) if t1 else []
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(t1):
                    prod[i + j] += x * y
        new_t = [Fraction(0)] * max(len(t0), len(prod))
        for i, x in enumerate(t0):
            new_t[i] += x
        for i, x in enumerate(prod):
            new_t[i] -= x
        t0, t1 = t1, _poly_trim(new_t)
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible (gcd has positive degree)")
    c = r0[0]
    return [x / c for x in t0]


def root_of_unity(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_n^k as an element of Q(zeta_m) with m the exact order n/gcd(n,k)."""
    if n < 1:
        raise ParameterError("order must be positive")
    k %= n
    g = math.gcd(n, k) if k else n
    m, e = n // g, k // g
    if m == 1:
        return CyclotomicNumber.one()
    phi = _field(m)[0]
    ints = [0] * (e + 1)
    ints[e] = 1
    red = _reduce_long(ints, m)
    return CyclotomicNumber(m, [Fraction(v) for v in red[:phi]])


@lru_cache(maxsize=None)
def _unit_root_table(n: int):
    return tuple(root_of_unity(n, k).promote(n) for k in range(n))


def as_unit_root_exponent(x) -> tuple[int, int]:
    """Return (k, n) with x = exp(2*pi*i*k/n) in lowest terms.

    Accepts exact inputs (int, Fraction, CyclotomicNumber) and complex
    floats close to a root of unity of order <= 64.
    """
    q = _as_fraction(x)
    if q is not None:
        if q == 1:
            return (0, 1)
        if q == -1:
            return (1, 2)
        raise ParameterError(f"{x} is not a root of unity")
    if isinstance(x, CyclotomicNumber):
        n = x.order
        for k, w in enumerate(_unit_root_table(n)):
            if x.coeffs == w.coeffs:
                g = math.gcd(k, n) if k else n
                return (k // g, n // g) if k else (0, 1)
        raise ParameterError("cyclotomic element is not a root of unity")
    z = complex(x)
    if abs(abs(z) - 1.0) > 1e-9:
        raise ParameterError(f"{x!r} is not on the unit circle")
    for n in range(1, 65):
        for k in range(n):
            if math.gcd(k, n) == 1 or (k == 0 and n == 1):
                if abs(z - cmath.exp(2j * cmath.pi * k / n)) < 1e-12:
                    return (k, n)
    raise ParameterError("only roots of unity of order <= 64 are supported")
