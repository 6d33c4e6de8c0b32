"""Direct multiple sums and the Mellin-Barnes continuation."""

import math
from fractions import Fraction

import numpy as np
import pytest

from desingzeta.errors import PoleError, RegionError
from desingzeta.exact import root_of_unity, zeta_neg_int
from desingzeta.models import ezl_data, mt2_data
from desingzeta.numeric import (
    DEFAULT_CONFIG,
    ezl2_continued,
    hl_zeta_direct,
    lerch_phi,
    riemann_zeta,
)
from desingzeta.numeric.multizeta import hl_zeta_continued, mb_shift_order


def _naive_ez2(s1, s2, N):
    m1 = np.arange(1.0, N + 1)
    total = 0.0
    for a in m1:
        m2 = np.arange(a + 1.0, a + N + 1)
        total += a ** -s1 * np.sum(m2 ** -s2)
    return total


def test_direct_ez2_against_naive_window():
    d = ezl_data((1, 1), (1, 1))
    v = hl_zeta_direct(d, (3.0, 2.0))
    naive = _naive_ez2(3.0, 2.0, 4000)
    # the naive truncation undershoots by at most zeta(3)/4000
    assert naive < v.value.real < naive + 1.21 / 4000 + 1e-9
    assert v.error_bound < 1e-10


def test_direct_region_errors():
    d = ezl_data((1, 1), (1, 1))
    with pytest.raises(RegionError):
        hl_zeta_direct(d, (0.5, 0.5))
    with pytest.raises(RegionError):
        hl_zeta_direct(d, (5.0, 1.0))
    dm, _ = mt2_data()
    with pytest.raises(RegionError):
        hl_zeta_direct(dm, (2.0, 2.0, 0.5))


def test_direct_ez2_wide_region():
    # (0, 3) lies inside the triangular region though sigma_1 <= 1
    d = ezl_data((1, 1), (1, 1))
    v = hl_zeta_direct(d, (0.0, 3.0))
    expect = riemann_zeta(2.0).value - riemann_zeta(3.0).value
    assert abs(v.value - expect) < 1e-11


def test_direct_rank1():
    d = ezl_data((Fraction(-1),), (1,))
    v = hl_zeta_direct(d, (2.5,))
    # HL normalization: sum_{m>=0} (-1)^m (1+m)^-s = -phi(s, -1)
    expect = -lerch_phi(2.5, Fraction(-1)).value
    assert abs(v.value - expect) < 1e-9


def test_direct_mt2_against_extrapolated_oracle():
    dm, _ = mt2_data()
    v = hl_zeta_direct(dm, (2.0, 2.0, 2.0))

    def partial(N):
        m1 = np.arange(1.0, N + 1)
        tot = 0.0
        for a in m1:
            m2 = np.arange(1.0, N + 1)
            tot += np.sum(a**-2 * m2**-2.0 * (a + m2) ** -2.0)
        return tot

    s1, s2 = partial(800), partial(1600)
    oracle = (8 * s2 - s1) / 7  # kills the 1/N^3 tail term
    assert abs(v.value - oracle) < 5e-11
    w = hl_zeta_direct(dm, (4.0, 4.0, 4.0))
    assert w.error_bound < 1e-11 and abs(w.value.imag) < 1e-14
    assert 0.0 < w.value.real < 0.1


def test_direct_rank3():
    # the last-variable tail of the triple sum only decays like N^(-3/2)
    # at this point, so the certified bound is modest; the value itself
    # is bracketed by a naive nested truncation
    d3 = ezl_data((1, 1, 1), (1, 1, 1))
    v = hl_zeta_direct(d3, (2.5, 2.5, 2.5))

    def naive(N):
        total = 0.0
        for a in range(1, N):
            for b in range(a + 1, a + N):
                c = np.arange(b + 1.0, b + N)
                total += a**-2.5 * b**-2.5 * np.sum(c**-2.5)
        return total

    n = naive(60)
    assert n < v.value.real < n + 0.05
    assert v.error_bound < 1e-3


def test_continued_matches_direct_in_region():
    d = ezl_data((1, 1), (1, 1))
    for s in [(3.0, 2.0), (2.2, 4.8), (4.9, 2.1)]:
        a = hl_zeta_direct(d, s)
        b = ezl2_continued((1, 1), (1, 1), s)
        assert abs(a.value - b.value) < 1e-11


def test_continued_complex_arguments():
    d = ezl_data((1, 1), (1, 1))
    s = (2.5 + 0.8j, 3.1 - 0.4j)
    a = hl_zeta_direct(d, s)
    b = ezl2_continued((1, 1), (1, 1), s)
    assert abs(a.value - b.value) < 1e-10


def test_continued_second_argument_zero_closed_form():
    # zeta_2(s, 0) = -zeta(s-1) - zeta(s)/2
    for s in (2.5, 3.25, 2.0 + 1.5j):
        v = ezl2_continued((1, 1), (1, 1), (s, 0.0))
        expect = -riemann_zeta(s - 1).value - riemann_zeta(s).value / 2
        assert abs(v.value - expect) < 1e-11, s


def test_continued_nonpositive_integer_snap():
    # at s2 = -N the representation is the finite residue sum
    for s, N in [(2.5, 3), (3.7, 4), (1.8, 2), (2.2 + 1j, 1)]:
        v = ezl2_continued((1, 1), (1, 1), (s, float(-N)))
        closed = -1 / (N + 1) * riemann_zeta(s - N - 1).value + sum(
            math.comb(N, k) * riemann_zeta(s - N + k).value
            * float(zeta_neg_int(k)) for k in range(N + 1)
        )
        assert abs(v.value - closed) < 1e-11, (s, N)


def test_continued_pole_errors():
    with pytest.raises(PoleError):
        ezl2_continued((1, 1), (1, 1), (2.0, 1.0))
    with pytest.raises(PoleError):
        ezl2_continued((1, 1), (1, 1), (0.5, 1.5))  # sum = 2
    with pytest.raises(PoleError):
        ezl2_continued((1, 1), (1, 1), (1.5, -1.5))  # sum = 0
    # twisted catalog: sum = 1 singular for (1, -1), s2 = 1 is not
    with pytest.raises(PoleError):
        ezl2_continued((1, Fraction(-1)), (1, 1), (0.5, 0.5))
    v = ezl2_continued((1, Fraction(-1)), (1, 1), (2.0, 1.0))
    assert np.isfinite(v.value.real)


def test_continued_twisted_against_direct():
    i4 = root_of_unity(4, 1)
    cases = [
        ((1, Fraction(-1)), (3.0, 2.5)),
        ((Fraction(-1), Fraction(-1)), (2.2, 3.1)),
        ((1, i4), (2.5, 2.5)),
        ((root_of_unity(3, 1), 1), (2.5, 3.5)),
        ((i4, root_of_unity(3, 1)), (2.4, 2.9)),
    ]
    for xi, s in cases:
        data = ezl_data(xi, (1, 1))
        a = hl_zeta_direct(data, s)
        b = hl_zeta_continued(data, s)
        tol = max(1e-9, a.error_bound + b.error_bound)
        assert abs(a.value - b.value) < tol, (xi, s)


def test_continued_generic_gammas():
    g = (Fraction(1, 2), Fraction(3, 2))
    data = ezl_data((1, 1), g)
    s = (3.0, 2.5)
    a = hl_zeta_direct(data, s)
    b = hl_zeta_continued(data, s)
    assert abs(a.value - b.value) < max(1e-9, a.error_bound * 3)


def test_arakawa_kaneko_residue():
    # (s2 - 1) zeta_2(N, s2) -> zeta(N); linear extrapolation of the probes
    for N in (2, 3, 4):
        diffs = []
        for k in (3, 4, 5, 6):
            s2 = 1.0 + 10.0**-k
            z = ezl2_continued((1, 1), (1, 1), (float(N), s2))
            diffs.append(abs((s2 - 1.0) * z.value - riemann_zeta(float(N)).value))
        assert all(d2 < d1 for d1, d2 in zip(diffs, diffs[1:]))
        f5 = (1e-5) and ezl2_continued((1, 1), (1, 1), (float(N), 1.0 + 1e-5))
        f6 = ezl2_continued((1, 1), (1, 1), (float(N), 1.0 + 1e-6))
        g5 = (1e-5) * f5.value
        g6 = (1e-6) * f6.value
        limit = (10.0 * g6 - g5) / 9.0
        assert abs(limit - riemann_zeta(float(N)).value) < 1e-6


def test_mb_shift_order():
    cfg = DEFAULT_CONFIG
    assert mb_shift_order(3 + 0j, 2 + 0j, cfg) == 1
    assert mb_shift_order(2 + 0j, -3 + 0j, cfg) >= 4
    assert mb_shift_order(-4 + 0j, -4 + 0j, cfg) >= 10


def test_harmonic_relation_on_lines():
    # zeta_2(a,b) + zeta_2(b,a) = zeta(a) zeta(b) - zeta(a+b)
    from desingzeta.numeric import ez2_neg_args

    for s, N in [(2.5, 0), (3.2, 1), (2.8, 3)]:
        a = ez2_neg_args("second", s, N).value
        b = ez2_neg_args("first", s, N).value
        expect = (riemann_zeta(s).value * float(zeta_neg_int(N))
                  - riemann_zeta(s - N).value)
        assert abs(a + b - expect) < 1e-9, (s, N)
