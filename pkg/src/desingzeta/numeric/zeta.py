"""Riemann/Hurwitz zeta via Euler-Maclaurin and the analytic Lerch zeta.

The Lerch function here is the analytic continuation of
sum_{m>=1} xi^m m^{-s}; for a root of unity xi = e^(2 pi i a/c) it is
assembled from Hurwitz zetas as c^{-s} sum_{j=1}^{c} xi^j zeta(s, j/c).
Its value at s = 0 (xi != 1) is xi/(1-xi) -- this deliberately differs
from the series-coefficient convention of the exact layer, whose
constant term is 1/(1-xi).

Deep left of the critical strip (Re s < -1) the Riemann zeta switches to
the reflection formula: the Euler-Maclaurin partial sum there grows like
n^(-Re s) and would lose the (small) value to cancellation.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import gamma as _cgamma

from ..errors import ParameterError, PoleError
from ..exact import as_unit_root_exponent, bernoulli
from . import kernels
from .config import DEFAULT_CONFIG, EvalConfig, EvalResult

__all__ = [
    "riemann_zeta",
    "hurwitz_zeta",
    "lerch_phi",
    "lerch_phi_batch",
    "zeta_batch",
    "em_parameters",
    "bern_fac_table",
    "zeta_exact_nonpos",
]

_MAX_K = 64
_REFLECT_RE = -1.0


@lru_cache(maxsize=1)
def bern_fac_table() -> np.ndarray:
    """b2k[k] = B_{2k}/(2k)! as floats, k = 0.._MAX_K+1."""
    return np.array(
        [float(bernoulli(2 * k) / Fraction(math.factorial(2 * k)))
         for k in range(_MAX_K + 2)],
        dtype=np.float64,
    )


def em_parameters(s, cfg: EvalConfig) -> tuple[int, int]:
    """Adaptive Euler-Maclaurin (N, K) for one or many s values.

    N grows with |Im s| (the correction series needs (|s|/(2 pi N))^2 < 1)
    and K grows as Re s moves left of 1.  For Re s < 0 the base N stays
    small: partial-sum terms grow like n^(-Re s) and a long sum would
    lose the result to cancellation.
    """
    s = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    max_im = float(np.max(np.abs(s.imag)))
    min_re = float(np.min(s.real))
    K = max(cfg.em_bernoulli_order, int(math.ceil((1.5 - min_re) / 2)) + 2)
    if K > _MAX_K:
        raise ParameterError(
            f"Re s = {min_re} too far left for the Euler-Maclaurin table"
        )
    base = cfg.em_terms if min_re >= -0.5 else 12
    N = max(base, int(0.6 * max_im) + 8, (int(max(0.0, -min_re)) + 2 * K) // 5 + 4)
    return N, K


def _cancellation_noise(s: complex, a: float, N: int) -> float:
    # double-precision rounding in the partial sum, dominant for Re s < 0
    return 3e-16 * (a + N) ** max(0.0, -s.real) * min(N + 1.0, 40.0)


def hurwitz_zeta(s, a, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """zeta(s, a) = sum_{n>=0} (n+a)^{-s}, continued by Euler-Maclaurin."""
    a = float(a)
    if not 0 < a <= 1:
        raise ParameterError("offset a must lie in (0, 1]")
    s = complex(s)
    if abs(s - 1.0) < 1e-13:
        raise PoleError("zeta has its pole at s = 1")
    if a == 1.0 and abs(s.imag) < 1e-15 and s.real <= 0 \
            and abs(s.real - round(s.real)) < 1e-15:
        return EvalResult(complex(float(zeta_exact_nonpos(round(s.real)))),
                          0.0, "direct")
    if a == 1.0 and s.real < _REFLECT_RE:
        val = _reflect_scalar(s, cfg)
        return EvalResult(val, 1e-14 * (abs(val) + 1.0), "direct")
    N, K = em_parameters(s, cfg)
    val, bound = kernels.hurwitz_single(s, a, N, K, bern_fac_table())
    bound += 1e-15 * abs(val) + _cancellation_noise(s, a, N)
    return EvalResult(val, bound, "direct")


def riemann_zeta(s, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    return hurwitz_zeta(s, 1.0, cfg)


def _reflect_scalar(s: complex, cfg: EvalConfig) -> complex:
    # zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), Re(1-s) > 2
    N, K = em_parameters(1 - s, cfg)
    z1, _ = kernels.hurwitz_single(1 - s, 1.0, N, K, bern_fac_table())
    return (
        2.0**s * cmath.pi ** (s - 1) * cmath.sin(cmath.pi * s / 2)
        * complex(_cgamma(1 - s)) * z1
    )


def zeta_batch(s_array, a: float, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorised Hurwitz zeta with shared adaptive parameters.

    For a = 1 the deep-left part of the batch goes through the
    reflection formula, the rest through Euler-Maclaurin.
    """
    s = np.ascontiguousarray(s_array, dtype=np.complex128)
    a = float(a)
    out = np.empty_like(s)
    left = (s.real < _REFLECT_RE) if a == 1.0 else np.zeros(s.shape, dtype=bool)
    if left.any():
        sl = s[left]
        N, K = em_parameters(1 - sl, cfg)
        z1 = kernels.hurwitz_batch(np.ascontiguousarray(1 - sl), 1.0, N, K,
                                   bern_fac_table())
        out[left] = (
            np.exp(sl * math.log(2.0)) * np.exp((sl - 1) * math.log(math.pi))
            * np.sin(np.pi * sl / 2) * _cgamma(1 - sl) * z1
        )
    if (~left).any():
        sr = s[~left]
        N, K = em_parameters(sr, cfg)
        out[~left] = kernels.hurwitz_batch(np.ascontiguousarray(sr), a, N, K,
                                           bern_fac_table())
    return out


def _unit_root(xi) -> tuple[int, int]:
    if isinstance(xi, tuple):
        k, n = int(xi[0]), int(xi[1])
        k %= n
        if k == 0:
            return (0, 1)
        g = math.gcd(k, n)
        return (k // g, n // g)
    return as_unit_root_exponent(xi)


def lerch_phi(s, xi, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Analytic Lerch zeta sum_{m>=1} xi^m m^{-s} for xi a root of unity.

    xi may be a CyclotomicNumber, an exact (power, order) pair, +-1, or a
    complex float close to a root of unity of order <= 64.  Left of
    Re s = -1 the periodic-zeta functional equation takes over, as in
    the Riemann case.
    """
    k, c = _unit_root(xi)
    s = complex(s)
    if c == 1:
        return riemann_zeta(s, cfg)
    if s.real < _REFLECT_RE:
        val = complex(_lerch_reflect(np.array([s]), k, c, cfg)[0])
        return EvalResult(val, 1e-14 * (abs(val) + 1.0), "direct")
    if abs(s - 1.0) < _NEAR_ONE:
        val = complex(_lerch_near_one(np.array([s]), k, c, cfg)[0])
        return EvalResult(val, 1e-13 * (abs(val) + 1.0), "direct")
    N, K = em_parameters(s, cfg)
    table = bern_fac_table()
    total = 0.0 + 0.0j
    bound = 0.0
    for j in range(1, c + 1):
        w = cmath.exp(2j * cmath.pi * k * j / c)
        v, b = kernels.hurwitz_single(s, j / c, N, K, table)
        total += w * v
        bound += b + _cancellation_noise(s, j / c, N)
    scale = cmath.exp(-s * math.log(c))
    return EvalResult(scale * total, abs(scale) * bound, "direct")


def _hurwitz_tilde_batch(s: np.ndarray, a: float, cfg: EvalConfig) -> np.ndarray:
    """zeta(s, a) - 1/(s - 1): the pole-free part, stable through s = 1.

    Euler-Maclaurin with the polar term replaced by
    (w^(1-s) - 1)/(s - 1) = -log(w) * expm1(u)/u, u = (1-s) log w.
    """
    s = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    N, K = em_parameters(s, cfg)
    table = bern_fac_table()
    n = np.arange(N, dtype=np.float64) + a
    P = np.exp(np.multiply.outer(-np.log(n), s)).sum(axis=0) if N else 0.0
    w = a + N
    lw = math.log(w)
    u = (1.0 - s) * lw
    ratio = np.where(np.abs(u) < 1e-8, 1.0 + u / 2.0, np.expm1(u) / np.where(u == 0, 1, u))
    val = P - lw * ratio + 0.5 * np.exp(-s * lw)
    poch = s.copy()
    wpow = np.exp((-s - 1.0) * lw)
    winv2 = w**-2.0
    for kk in range(1, K + 1):
        val += float(table[kk]) * poch * wpow
        poch = poch * (s + (2 * kk - 1)) * (s + 2 * kk)
        wpow = wpow * winv2
    return val


def _lerch_near_one(s: np.ndarray, k: int, c: int, cfg: EvalConfig) -> np.ndarray:
    # sum_j xi^j of the pole-free Hurwitz parts; the 1/(s-1) poles cancel
    # exactly because the non-trivial twist powers sum to zero
    total = np.zeros_like(np.atleast_1d(np.asarray(s, dtype=np.complex128)))
    for j in range(1, c + 1):
        wj = cmath.exp(2j * cmath.pi * k * j / c)
        total = total + wj * _hurwitz_tilde_batch(s, j / c, cfg)
    return np.exp(-np.asarray(s, dtype=np.complex128) * math.log(c)) * total


_NEAR_ONE = 0.05


def _lerch_reflect(s: np.ndarray, k: int, c: int, cfg: EvalConfig) -> np.ndarray:
    # phi(s, e^(2 pi i x)) = Gamma(1-s)/(2 pi)^(1-s) *
    #   ( e^(i pi (1-s)/2) zeta(1-s, x) + e^(-i pi (1-s)/2) zeta(1-s, 1-x) ),
    # 0 < x < 1; here x = k/c.
    x = k / c
    u = 1.0 - s
    za = zeta_batch(u, x, cfg)
    zb = zeta_batch(u, 1.0 - x, cfg)
    pref = _cgamma(u) * np.exp(-u * math.log(2 * math.pi))
    return pref * (np.exp(0.5j * math.pi * u) * za + np.exp(-0.5j * math.pi * u) * zb)


def lerch_phi_batch(s_array, xi, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorised analytic Lerch zeta over an array of s."""
    k, c = _unit_root(xi)
    s = np.ascontiguousarray(s_array, dtype=np.complex128)
    if c == 1:
        return zeta_batch(s, 1.0, cfg)
    out = np.empty_like(s)
    left = s.real < _REFLECT_RE
    near = (~left) & (np.abs(s - 1.0) < _NEAR_ONE)
    rest = ~(left | near)
    if left.any():
        out[left] = _lerch_reflect(s[left], k, c, cfg)
    if near.any():
        out[near] = _lerch_near_one(s[near], k, c, cfg)
    if rest.any():
        sr = s[rest]
        N, K = em_parameters(sr, cfg)
        total = np.zeros_like(sr)
        for j in range(1, c + 1):
            w = cmath.exp(2j * cmath.pi * k * j / c)
            total += w * kernels.hurwitz_batch(np.ascontiguousarray(sr), j / c, N, K,
                                               bern_fac_table())
        out[rest] = np.exp(-sr * math.log(c)) * total
    return out


def zeta_exact_nonpos(arg) -> Fraction:
    """Exact analytic zeta at an integer argument <= 0."""
    arg = int(arg)
    if arg > 0:
        raise ParameterError("exact zeta values only at non-positive integers")
    from ..exact import zeta_neg_int

    return zeta_neg_int(-arg)
