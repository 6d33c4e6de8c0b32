"""Pure-Python (numpy) implementations of the numeric hot loops.

Semantics must match ``_ckernels.pyx`` exactly: the package selects one
of the two at import time and the test-suite runs against either.

All Euler-Maclaurin routines share the convention

    zeta(s, a) = sum_{n=0}^{N-1} (a+n)^{-s} + w^{1-s}/(s-1) + w^{-s}/2
                 + sum_{k=1}^{K} b2k[k] * (s)_{2k-1} * w^{-s-2k+1} + R,

with w = a + N and b2k[k] = B_{2k}/(2k)! as floats; the returned bound
estimates |R| by the first omitted correction term scaled by the
standard |s + 2K + 1| / (sigma + 2K + 1) factor.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def hurwitz_batch(s, a: float, N: int, K: int, b2k) -> np.ndarray:
    """Euler-Maclaurin Hurwitz zeta for an array of s at fixed a > 0."""
    s = np.asarray(s, dtype=np.complex128)
    n = np.arange(N, dtype=np.float64) + a
    # partial sum: sum over n of n^(-s)
    P = np.exp(np.multiply.outer(-np.log(n), s)).sum(axis=0) if N else 0.0
    w = a + N
    lw = np.log(w)
    val = P + np.exp((1.0 - s) * lw) / (s - 1.0) + 0.5 * np.exp(-s * lw)
    poch = s.copy()
    winv2 = w ** -2.0
    wpow = np.exp((-s - 1.0) * lw)
    for k in range(1, K + 1):
        val += b2k[k] * poch * wpow
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        wpow = wpow * winv2
    return val


def hurwitz_single(s: complex, a: float, N: int, K: int, b2k):
    """Scalar Euler-Maclaurin Hurwitz zeta; returns (value, remainder bound)."""
    s = complex(s)
    P = 0.0 + 0.0j
    for n in range(N):
        P += (a + n) ** (-s)
    w = a + N
    lw = np.log(w)
    val = P + np.exp((1.0 - s) * lw) / (s - 1.0) + 0.5 * np.exp(-s * lw)
    poch = s
    wpow = np.exp((-s - 1.0) * lw)
    winv2 = w ** -2.0
    for k in range(1, K + 1):
        val += b2k[k] * poch * wpow
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        wpow = wpow * winv2
    sigma = s.real
    guard = abs(s + (2 * K + 1)) / (sigma + 2 * K + 1)
    bound = abs(b2k[K + 1]) * abs(poch) * w ** (-sigma - 2 * K - 1) * guard
    return complex(val), float(bound)


def ez2_partial(s1: complex, s2: complex, zeta_s2: complex, N: int) -> complex:
    """sum_{m=1}^{N} m^{-s1} * (zeta(s2) - sum_{n<=m} n^{-s2}).

    The bracket is the inner tail sum_{n>m} n^{-s2} of the nested double
    series, written through the precomputed zeta(s2).
    """
    m = np.arange(1, N + 1, dtype=np.float64)
    logm = np.log(m)
    inner = zeta_s2 - np.cumsum(np.exp(-s2 * logm))
    return complex(np.sum(np.exp(-s1 * logm) * inner))


def hl1_partial(s, beta, gamma, xi: complex, N: int) -> complex:
    """Truncated rank-1 sum: sum_{m=0}^{N-1} xi^m prod_j (beta_j + gamma_j m)^(-s_j)."""
    s = np.asarray(s, dtype=np.complex128)
    beta = np.asarray(beta, dtype=np.complex128)
    gamma = np.asarray(gamma, dtype=np.complex128)
    m = np.arange(N, dtype=np.float64)
    acc = np.ones(N, dtype=np.complex128)
    if xi != 1:
        acc = np.power(complex(xi), m)
    for j in range(len(s)):
        acc = acc * np.exp(-s[j] * np.log(beta[j] + gamma[j] * m))
    return complex(acc.sum())


def hl2_partial(s, beta, g1, g2, xi1: complex, xi2: complex,
                N1: int, N2: int, block: int = 256) -> complex:
    """Truncated rank-2 sum over m1 in [0, N1), m2 in [0, N2)."""
    s = np.asarray(s, dtype=np.complex128)
    beta = np.asarray(beta, dtype=np.complex128)
    g1 = np.asarray(g1, dtype=np.complex128)
    g2 = np.asarray(g2, dtype=np.complex128)
    m2 = np.arange(N2, dtype=np.float64)
    x2 = np.power(complex(xi2), m2) if xi2 != 1 else np.ones(N2, np.complex128)
    total = 0.0 + 0.0j
    for start in range(0, N1, block):
        m1 = np.arange(start, min(start + block, N1), dtype=np.float64)
        x1 = np.power(complex(xi1), m1) if xi1 != 1 else np.ones(len(m1), np.complex128)
        acc = np.multiply.outer(x1, x2)
        for j in range(len(s)):
            den = beta[j] + np.multiply.outer(g1[j] * m1, np.ones_like(m2)) \
                + np.multiply.outer(np.ones_like(m1), g2[j] * m2)
            acc = acc * np.exp(-s[j] * np.log(den))
        total += acc.sum()
    return complex(total)
