"""Bernoulli numbers, Lerch coefficients at non-positive integers,
Frobenius-Euler numbers, and the Taylor coefficients of the
pole-subtracted integral kernel.

Conventions
-----------
* ``bernoulli``: y/(e^y - 1) = sum B_n y^n / n!   (so B_1 = -1/2).
* ``lerch_neg_coeff(k, xi)``: coefficient of t^k/k! in 1/(1 - xi e^t).
  Its constant term is 1/(1 - xi).  The *analytic* Lerch continuation
  takes the value xi/(1 - xi) at 0 instead; the numeric layer owns that
  convention, this module owns the series one.
* ``frobenius_euler(k, xi)``: H_k(xi^{-1}) = (1 - xi) * phi(-k, xi).
* ``f_delta_coeff(n, xi)``: coefficient of y^n/n! in 1/(e^y - xi) for
  xi != 1, and B_{n+1} for xi = 1 (the kernel with its double pole
  subtracted).  Both branches are computed by direct series division
  and asserted against the closed forms.

All values are memoised; the caches are guarded by a lock so the pure
functions stay thread-safe.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from ..errors import ParameterError, XiOneError
from .cyclotomic import CyclotomicNumber
from .series import PowerSeries1

__all__ = [
    "bernoulli",
    "zeta_neg_int",
    "lerch_neg_coeff",
    "frobenius_euler",
    "f_delta_coeff",
]

_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n in the convention y/(e^y - 1) = sum B_n y^n/n!."""
    if n < 0:
        raise ParameterError("Bernoulli index must be non-negative")
    with _lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            # sum_{j=0}^{m} binom(m+1, j) B_j = 0  for m >= 1
            acc = Fraction(0)
            for j in range(m):
                acc += math.comb(m + 1, j) * _bernoulli_cache[j]
            _bernoulli_cache.append(-acc / (m + 1))
        return _bernoulli_cache[n]


def zeta_neg_int(k: int) -> Fraction:
    """Analytic zeta(-k) for k >= 0: zeta(0) = -1/2, else -B_{k+1}/(k+1).

    (At k = 0 the raw expression -B_1 would give +1/2 under this
    module's B_1 = -1/2 convention; the analytic value is -1/2.)
    """
    if k < 0:
        raise ParameterError("argument must be -k with k >= 0")
    if k == 0:
        return Fraction(-1, 2)
    return -bernoulli(k + 1) / (k + 1)


def _is_one(xi) -> bool:
    if isinstance(xi, CyclotomicNumber):
        return xi.is_one()
    return xi == 1


def _xi_key(xi):
    if isinstance(xi, CyclotomicNumber):
        return xi.key()
    return ("q", Fraction(xi))


_lerch_cache: dict = {}


def _lerch_series(xi, order: int) -> PowerSeries1:
    # 1 - xi*e^t has coefficients (1 - xi), then -xi/k!
    den = [1 - xi] + [-xi * Fraction(1, math.factorial(k)) for k in range(1, order + 1)]
    num = [Fraction(1)] + [Fraction(0)] * order
    return PowerSeries1(num) / PowerSeries1(den)


def lerch_neg_coeff(k: int, xi) -> CyclotomicNumber | Fraction:
    """Coefficient of t^k/k! in 1/(1 - xi e^t) for a twist xi != 1."""
    if k < 0:
        raise ParameterError("index must be non-negative")
    if _is_one(xi):
        raise XiOneError(
            "xi = 1: use the zeta-at-negative-integers path "
            "(series convention zeta(-k) = -B_{k+1}/(k+1))"
        )
    key = _xi_key(xi)
    with _lock:
        cached = _lerch_cache.get(key)
        if cached is None or cached.order < k:
            order = max(k, 2 * (cached.order if cached else 0), 8)
            cached = _lerch_series(xi, order)
            _lerch_cache[key] = cached
        return cached[k] * math.factorial(k)


def frobenius_euler(k: int, xi) -> CyclotomicNumber | Fraction:
    """H_k(xi^{-1}) = (1 - xi) * phi(-k, xi); undefined at xi = 1."""
    if _is_one(xi):
        raise ParameterError("Frobenius-Euler numbers are undefined at xi = 1")
    return (1 - xi) * lerch_neg_coeff(k, xi) if isinstance(xi, CyclotomicNumber) \
        else (1 - Fraction(xi)) * lerch_neg_coeff(k, xi)


_f_cache: dict = {}


def _f_series_xi(xi, order: int) -> PowerSeries1:
    # 1/(e^y - xi): denominator (1 - xi) + sum_{k>=1} y^k/k!
    den = [1 - xi if isinstance(xi, CyclotomicNumber) else Fraction(1) - Fraction(xi)]
    den += [Fraction(1, math.factorial(k)) for k in range(1, order + 1)]
    num = [Fraction(1)] + [Fraction(0)] * order
    return PowerSeries1(num) / PowerSeries1(den)


def _f_series_one(order: int) -> PowerSeries1:
    # 1/(e^y - 1) - y e^y/(e^y - 1)^2 = (e^y - 1 - y e^y) / (e^y - 1)^2
    # numerator starts at y^2: sum_{k>=2} (1-k)/k! y^k
    n2 = [Fraction(1 - (j + 2), math.factorial(j + 2)) for j in range(order + 1)]
    g = PowerSeries1([Fraction(1, math.factorial(j + 1)) for j in range(order + 1)])
    return PowerSeries1(n2) / (g * g)


def _invert(xi):
    if isinstance(xi, CyclotomicNumber):
        return xi.inverse()
    return Fraction(1) / Fraction(xi)


def f_delta_coeff(n: int, xi) -> CyclotomicNumber | Fraction:
    """Taylor coefficient (of y^n/n!) of the desingularized kernel factor."""
    if n < 0:
        raise ParameterError("index must be non-negative")
    one_branch = _is_one(xi)
    key = ("one",) if one_branch else _xi_key(xi)
    with _lock:
        cached = _f_cache.get(key)
        if cached is None or cached.order < n:
            order = max(n, 2 * (cached.order if cached else 0), 8)
            series = _f_series_one(order) if one_branch else _f_series_xi(xi, order)
            _f_cache[key] = cached = series
        value = cached[n] * math.factorial(n)
    # closed forms are cheap; assert them every time the series grows
    if one_branch:
        assert value == bernoulli(n + 1), "kernel series disagrees with B_{n+1}"
        return bernoulli(n + 1)
    closed = frobenius_euler(n, _invert(xi)) / (
        (1 - xi) if isinstance(xi, CyclotomicNumber) else (Fraction(1) - Fraction(xi))
    )
    assert value == closed, "kernel series disagrees with the Frobenius-Euler form"
    return value
