"""Twisted multiple Bernoulli numbers and p-adic multiple L-values at
non-positive integers.

The twisted numbers are the Taylor coefficients of

    xi_1 e^(y_1) / (1 - xi_1 e^(y_1)) * prod_{j=2}^r 1 / (1 - xi_j e^(y_j)),

with y_j = t_j + ... + t_r, all xi_j != 1.  The p-adic L-value at
(-n_1, ..., -n_r) with tame twist by the character lifting is the finite
exact sum of these numbers over c-th roots of unity, with inclusion-
exclusion corrections by p-th root twists scaled by powers of -1/p.
Everything is computed exactly over Q(zeta_{cp}); the final value is
asserted rational and returned as a Fraction.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, RationalityError
from .exact import CyclotomicNumber, bernoulli, lerch_neg_coeff, root_of_unity

__all__ = [
    "TwistedBernoulliKey",
    "PadicLRequest",
    "twisted_multi_bernoulli",
    "padic_L_nonpos",
    "padic_L_sum_cyclotomic",
    "kubota_leopoldt_check",
    "is_prime",
    "enumeration_count",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _as_cyclo(x) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, tuple):
        return root_of_unity(int(x[1]), int(x[0]))
    if x == 1:
        return CyclotomicNumber.one()
    if x == -1:
        return root_of_unity(2, 1)
    raise ParameterError(f"twist {x!r} must be an exact root of unity")


@dataclass(frozen=True)
class TwistedBernoulliKey:
    """Index vector and twist vector, all twists != 1, in a common field."""

    n: tuple
    xi: tuple

    def __post_init__(self):
        n = tuple(int(v) for v in self.n)
        xi = tuple(_as_cyclo(x) for x in self.xi)
        if len(n) != len(xi) or not n:
            raise ParameterError("need matching index and twist vectors")
        if any(v < 0 for v in n):
            raise ParameterError("indices must be non-negative")
        order = math.lcm(*(x.order for x in xi))
        xi = tuple(x.promote(order) for x in xi)
        if any(x.is_one() for x in xi):
            raise ParameterError(
                "degenerate factor: every twist must differ from 1"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "xi", xi)

    @property
    def r(self) -> int:
        return len(self.n)

    def cache_key(self):
        return tuple(x.key() for x in self.xi)


_expansion_lock = threading.Lock()
_expansion_cache: dict = {}


def _factor_poly(xi: CyclotomicNumber, var: int, r: int, caps, subtract_one: bool):
    """Multivariate truncation of 1/(1 - xi e^(y)) with y = t_var+...+t_r,
    distributed over the t variables (per-variable degree caps).
    ``subtract_one`` turns the first factor into xi e^y/(1 - xi e^y)."""
    span = list(range(var, r))
    max_k = sum(caps[v] for v in span)
    poly: dict[tuple, CyclotomicNumber] = {}
    for k in range(max_k + 1):
        coef = lerch_neg_coeff(k, xi) * Fraction(1, math.factorial(k))
        if subtract_one and k == 0:
            coef = coef - 1
        if coef == 0:
            continue
        # distribute y^k = (t_var + ... + t_r)^k multinomially
        for comp in _bounded_compositions(k, [caps[v] for v in span]):
            w = Fraction(math.factorial(k))
            for part in comp:
                w /= math.factorial(part)
            exps = [0] * r
            for v, part in zip(span, comp):
                exps[v] = part
            key = tuple(exps)
            contrib = coef * w
            cur = poly.get(key)
            poly[key] = contrib if cur is None else cur + contrib
    return poly


def _bounded_compositions(total: int, caps: list[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    head = caps[0]
    for first in range(min(total, head) + 1):
        for rest in _bounded_compositions(total - first, caps[1:]):
            yield (first,) + rest


def _poly_mul(a: dict, b: dict, caps) -> dict:
    out: dict = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(x > c for x, c in zip(e, caps)):
                continue
            prod = va * vb
            cur = out.get(e)
            out[e] = prod if cur is None else cur + prod
    return {e: v for e, v in out.items() if not (isinstance(v, CyclotomicNumber) and v.is_zero()) and v != 0}


def _expansion(key: TwistedBernoulliKey, caps: tuple) -> dict:
    """Taylor coefficients (of prod t^n/n!) up to per-variable caps,
    cached per twist vector and grown on demand."""
    ck = key.cache_key()
    with _expansion_lock:
        entry = _expansion_cache.get(ck)
        if entry is not None:
            old_caps, table = entry
            if all(o >= c for o, c in zip(old_caps, caps)):
                return table
            caps = tuple(max(o, c) for o, c in zip(old_caps, caps))
    r = key.r
    poly = _factor_poly(key.xi[0], 0, r, caps, subtract_one=True)
    for j in range(1, r):
        poly = _poly_mul(poly, _factor_poly(key.xi[j], j, r, caps, False), caps)
    table = {}
    for e, v in poly.items():
        scale = Fraction(1)
        for x in e:
            scale *= math.factorial(x)
        table[e] = v * scale
    with _expansion_lock:
        _expansion_cache[ck] = (caps, table)
    return table


def twisted_multi_bernoulli(key: TwistedBernoulliKey) -> CyclotomicNumber:
    """Coefficient of prod t_j^{n_j}/n_j! of the twisted generating
    function; an element of the common cyclotomic field of the twists."""
    table = _expansion(key, key.n)
    val = table.get(key.n)
    if val is None:
        return CyclotomicNumber.zero(key.xi[0].order)
    if not isinstance(val, CyclotomicNumber):
        val = CyclotomicNumber.from_rational(Fraction(val), key.xi[0].order)
    return val


@dataclass(frozen=True)
class PadicLRequest:
    """Evaluation point (-n_1, ..., -n_r), tame modulus c > 1, prime p
    not dividing c."""

    n: tuple
    c: int
    p: int

    def __post_init__(self):
        n = tuple(int(v) for v in self.n)
        if not n or any(v < 0 for v in n):
            raise ParameterError("n must be non-empty with n_j >= 0")
        if self.c <= 1:
            raise ParameterError("c must exceed 1")
        if not is_prime(self.p):
            raise ParameterError(f"{self.p} is not prime")
        if self.c % self.p == 0:
            raise ParameterError("p must not divide c")
        object.__setattr__(self, "n", n)

    @property
    def r(self) -> int:
        return len(self.n)


def _subsets(r: int):
    for mask in range(1, 1 << r):
        yield [i for i in range(r) if mask >> i & 1]


def enumeration_count(r: int, c: int, p: int) -> int:
    """Number of twisted-Bernoulli terms the main formula enumerates."""
    return (c - 1) ** r * (1 + p) ** r


def padic_L_sum_cyclotomic(req: PadicLRequest) -> CyclotomicNumber:
    """The full enumerated sum in Q(zeta_{cp}) before the rationality
    projection (Galois-stable by construction)."""
    r, c, p = req.r, req.c, req.p
    order = c * p
    zc = root_of_unity(order, p)      # primitive c-th root inside Q(zeta_cp)
    zp = root_of_unity(order, c)      # primitive p-th root
    xi_pow = [CyclotomicNumber.one(order)]
    for _ in range(c - 1):
        xi_pow.append((xi_pow[-1] * zc))
    rho_pow = [CyclotomicNumber.one(order)]
    for _ in range(p - 1):
        rho_pow.append((rho_pow[-1] * zp))

    total = CyclotomicNumber.zero(order)
    from itertools import product as iproduct

    for xi_idx in iproduct(range(1, c), repeat=r):
        xi = [xi_pow[a] for a in xi_idx]
        total = total + twisted_multi_bernoulli(TwistedBernoulliKey(req.n, tuple(xi)))
        for subset in _subsets(r):
            d = len(subset)
            scale = Fraction(-1, p) ** d
            for rho_idx in iproduct(range(p), repeat=d):
                twisted = list(xi)
                for i_l, rho_a in zip(subset, rho_idx):
                    rho = rho_pow[rho_a]
                    for j in range(i_l + 1):
                        twisted[j] = twisted[j] * rho
                for t in twisted:
                    if t.is_one():
                        raise RationalityError(
                            "degenerate twist encountered; mu_c and mu_p "
                            "should intersect trivially"
                        )
                contrib = twisted_multi_bernoulli(
                    TwistedBernoulliKey(req.n, tuple(twisted)))
                total = total + contrib * scale
    return total


def padic_L_nonpos(req: PadicLRequest) -> Fraction:
    """p-adic multiple L-value at (-n_1, ..., -n_r) with the matching
    character twists, as an exact rational.

    Working field Q(zeta_{cp}).  Outer sum over xi_j in mu_c minus 1;
    corrections over index subsets and p-th roots of unity, the j-th
    twist picking up every selected rho_{i_l} with j <= i_l.  The
    cyclotomic total is asserted rational before projecting.
    """
    total = padic_L_sum_cyclotomic(req)
    if not total.is_rational():
        raise RationalityError(
            "p-adic L-value did not project to the rationals; "
            "internal consistency failure"
        )
    return total.rational_value()


def kubota_leopoldt_check(n: int, c: int, p: int) -> tuple[bool, Fraction, Fraction]:
    """Depth-1 consistency: the enumerated value against the classical
    closed form (1 - c^(n+1)) (1 - p^n) B_{n+1}/(n+1), which is 0 at n = 0."""
    if n < 0:
        raise ParameterError("n must be non-negative")
    lhs = padic_L_nonpos(PadicLRequest((n,), c, p))
    if n == 0:
        rhs = Fraction(0)
    else:
        rhs = (1 - Fraction(c) ** (n + 1)) * (1 - Fraction(p) ** n) \
            * bernoulli(n + 1) / (n + 1)
    return lhs == rhs, lhs, rhs
