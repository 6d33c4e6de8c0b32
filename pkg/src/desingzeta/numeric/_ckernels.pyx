# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled numeric hot loops; semantics mirror ``_kernels_py`` exactly."""

import numpy as np

from libc.math cimport log, pow as fpow

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double cabs(double complex)

BACKEND_NAME = "cython"


cdef inline double complex _rpow(double base, double complex expo) nogil:
    # base ** expo for base > 0
    return cexp(expo * log(base))


def hurwitz_batch(s, double a, int N, int K, b2k):
    s_arr = np.ascontiguousarray(s, dtype=np.complex128)
    b_arr = np.ascontiguousarray(b2k, dtype=np.float64)
    logs = np.log(a + np.arange(N, dtype=np.float64)) if N else np.empty(0)
    out = np.empty(s_arr.shape[0], dtype=np.complex128)
    cdef double complex[::1] sv = s_arr
    cdef double[::1] bv = b_arr
    cdef double[::1] lv = np.ascontiguousarray(logs, dtype=np.float64)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n
    cdef int k
    cdef double complex si, P, val, poch, wpow
    cdef double w = a + N
    cdef double lw = log(w)
    cdef double winv2 = 1.0 / (w * w)
    with nogil:
        for i in range(sv.shape[0]):
            si = sv[i]
            P = 0
            for n in range(N):
                P = P + cexp(-si * lv[n])
            val = P + cexp((1.0 - si) * lw) / (si - 1.0) + 0.5 * cexp(-si * lw)
            poch = si
            wpow = cexp((-si - 1.0) * lw)
            for k in range(1, K + 1):
                val = val + bv[k] * poch * wpow
                poch = poch * (si + (2 * k - 1)) * (si + 2 * k)
                wpow = wpow * winv2
            ov[i] = val
    return out


def hurwitz_single(s, double a, int N, int K, b2k):
    cdef double complex si = s
    b_arr = np.ascontiguousarray(b2k, dtype=np.float64)
    cdef double[::1] bv = b_arr
    cdef double complex P = 0, val, poch, wpow
    cdef double w = a + N
    cdef double lw = log(w)
    cdef double winv2 = 1.0 / (w * w)
    cdef Py_ssize_t n
    cdef int k
    for n in range(N):
        P = P + _rpow(a + n, -si)
    val = P + _rpow(w, 1.0 - si) / (si - 1.0) + 0.5 * _rpow(w, -si)
    poch = si
    wpow = _rpow(w, -si - 1.0)
    for k in range(1, K + 1):
        val = val + bv[k] * poch * wpow
        poch = poch * (si + (2 * k - 1)) * (si + 2 * k)
        wpow = wpow * winv2
    cdef double sigma = si.real
    cdef double guard = cabs(si + (2 * K + 1)) / (sigma + 2 * K + 1)
    cdef double bound = abs(bv[K + 1]) * cabs(poch) * fpow(w, -sigma - 2 * K - 1) * guard
    return complex(val), bound


def ez2_partial(s1, s2, zeta_s2, int N):
    cdef double complex a1 = s1, a2 = s2, z2 = zeta_s2
    cdef double complex total = 0, prefix = 0
    cdef double lm
    cdef Py_ssize_t m
    with nogil:
        for m in range(1, N + 1):
            lm = log(<double> m)
            prefix = prefix + cexp(-a2 * lm)
            total = total + cexp(-a1 * lm) * (z2 - prefix)
    return complex(total)


def hl1_partial(s, beta, gamma, xi, int N):
    s_arr = np.ascontiguousarray(s, dtype=np.complex128)
    b_arr = np.ascontiguousarray(beta, dtype=np.complex128)
    g_arr = np.ascontiguousarray(gamma, dtype=np.complex128)
    cdef double complex[::1] sv = s_arr
    cdef double complex[::1] bv = b_arr
    cdef double complex[::1] gv = g_arr
    cdef double complex x = xi
    cdef double complex total = 0, term, xpow = 1
    cdef Py_ssize_t m, j, d = sv.shape[0]
    with nogil:
        for m in range(N):
            term = xpow
            for j in range(d):
                term = term * cexp(-sv[j] * clog(bv[j] + gv[j] * m))
            total = total + term
            xpow = xpow * x
    return complex(total)


def hl2_partial(s, beta, g1, g2, xi1, xi2, int N1, int N2, int block=256):
    # `block` is accepted for API parity with the fallback; the scalar
    # loop needs no blocking.
    s_arr = np.ascontiguousarray(s, dtype=np.complex128)
    b_arr = np.ascontiguousarray(beta, dtype=np.complex128)
    g1_arr = np.ascontiguousarray(g1, dtype=np.complex128)
    g2_arr = np.ascontiguousarray(g2, dtype=np.complex128)
    cdef double complex[::1] sv = s_arr
    cdef double complex[::1] bv = b_arr
    cdef double complex[::1] g1v = g1_arr
    cdef double complex[::1] g2v = g2_arr
    cdef double complex x1 = xi1, x2 = xi2
    cdef double complex total = 0, term, x1pow = 1, x2pow
    cdef Py_ssize_t m1, m2, j, d = sv.shape[0]
    with nogil:
        for m1 in range(N1):
            x2pow = x1pow
            for m2 in range(N2):
                term = x2pow
                for j in range(d):
                    term = term * cexp(-sv[j] * clog(bv[j] + g1v[j] * m1 + g2v[j] * m2))
                total = total + term
                x2pow = x2pow * x2
            x1pow = x1pow * x1
    return complex(total)
