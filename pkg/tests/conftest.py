"""Shared test oracles, all deliberately independent of the library's
computation paths (naive series inversion, brute-force summation)."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from desingzeta.exact import CyclotomicNumber


def series_inverse_oracle(denominator, order):
    """Coefficients of 1/denominator through `order`, by the naive
    triangular recursion; works over Fractions and CyclotomicNumbers."""
    d0 = denominator[0]
    inv0 = (Fraction(1) / d0) if isinstance(d0, Fraction) else d0.inverse()
    out = [inv0]
    for k in range(1, order + 1):
        acc = None
        for i in range(k):
            if k - i < len(denominator):
                piece = out[i] * denominator[k - i]
                acc = piece if acc is None else acc + piece
        if acc is None:
            out.append(inv0 * Fraction(0))
        else:
            out.append(-(acc * inv0) if isinstance(d0, Fraction) else -(inv0 * acc))
    return out


def bernoulli_oracle(order):
    """B_0..B_order from dividing y by (e^y - 1), independently."""
    den = [Fraction(1, math.factorial(j + 1)) for j in range(order + 1)]
    inv = series_inverse_oracle(den, order)
    return [inv[k] * math.factorial(k) for k in range(order + 1)]


def lerch_coeff_oracle(xi, order):
    """Coefficients of t^k/k! in 1/(1 - xi e^t) via naive inversion."""
    den = [1 - xi] + [-(xi * Fraction(1, math.factorial(k)))
                      for k in range(1, order + 1)]
    inv = series_inverse_oracle(den, order)
    return [inv[k] * math.factorial(k) for k in range(order + 1)]


def kernel_coeff_oracle(xi, order):
    """Coefficients of y^n/n! in 1/(e^y - xi), xi != 1, via naive inversion."""
    den = [1 - xi] + [Fraction(1, math.factorial(k)) * CyclotomicNumber.one()
                      if isinstance(xi, CyclotomicNumber) else
                      Fraction(1, math.factorial(k))
                      for k in range(1, order + 1)]
    inv = series_inverse_oracle(den, order)
    return [inv[k] * math.factorial(k) for k in range(order + 1)]


# ---------------------------------------------------------------------------
# multivariate truncated series over cyclotomic coefficients, for the
# brute-force twisted-Bernoulli oracle


def _zero_like(order):
    return CyclotomicNumber.zero(order)


def mseries_mul(a, b, caps):
    out = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(x > c for x, c in zip(e, caps)):
                continue
            p = va * vb
            out[e] = out[e] + p if e in out else p
    return out


def _graded_monomials(caps):
    from itertools import product

    monos = sorted(product(*[range(c + 1) for c in caps]), key=lambda e: (sum(e), e))
    return monos


def mseries_inv(b, caps, order):
    """Inverse of a multivariate truncated series with invertible
    constant term, solved degree by degree."""
    zero = tuple(0 for _ in caps)
    inv0 = b[zero].inverse()
    q = {zero: inv0}
    for e in _graded_monomials(caps):
        if e == zero:
            continue
        acc = None
        for f, bv in b.items():
            if f == zero or any(x > y for x, y in zip(f, e)):
                continue
            rest = tuple(x - y for x, y in zip(e, f))
            if rest in q:
                piece = bv * q[rest]
                acc = piece if acc is None else acc + piece
        if acc is not None:
            q[e] = -(inv0 * acc)
        else:
            q[e] = _zero_like(inv0.order)
    return {e: v for e, v in q.items() if not v.is_zero()}


def exp_sum_series(span, caps, order):
    """exp(sum of t_v for v in span) truncated per-variable."""
    from itertools import product

    out = {}
    r = len(caps)
    ranges = [range(caps[v] + 1) if v in span else range(1) for v in range(r)]
    for e in product(*ranges):
        w = Fraction(1)
        for v in span:
            w /= math.factorial(e[v])
        out[e] = CyclotomicNumber.from_rational(w, order)
    return out


def twisted_bernoulli_oracle(n, xi):
    """Brute-force coefficient of prod t^n/n! of the twisted generating
    function, by full multivariate expansion and inversion."""
    r = len(n)
    caps = tuple(n)
    order = math.lcm(*(x.order for x in xi))
    xi = [x.promote(order) for x in xi]
    total = {tuple(0 for _ in range(r)): CyclotomicNumber.one(order)}
    for j in range(r):
        span = set(range(j, r))
        E = exp_sum_series(span, caps, order)
        one_minus = {e: -(xi[j] * v) for e, v in E.items()}
        zero = tuple(0 for _ in range(r))
        one_minus[zero] = one_minus[zero] + 1
        inv = mseries_inv(one_minus, caps, order)
        if j == 0:
            num = {e: xi[0] * v for e, v in E.items()}
            factor = mseries_mul(num, inv, caps)
        else:
            factor = inv
        total = mseries_mul(total, factor, caps)
    coeff = total.get(caps, CyclotomicNumber.zero(order))
    scale = Fraction(1)
    for v in caps:
        scale *= math.factorial(v)
    return coeff * scale


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240814)
