"""Acceptance gate: one test per criterion, each printing a PASS line
with its measured runtime.  Tolerances are pinned here and nowhere else.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import time
from fractions import Fraction
from itertools import product

import numpy as np

from desingzeta.desing import desing_identity, grouped_coefficients
from desingzeta.exact import (
    bernoulli,
    f_delta_coeff,
    frobenius_euler,
    lerch_neg_coeff,
    root_of_unity,
    zeta_neg_int,
)
from desingzeta.models import builtin_data, mt2_data
from desingzeta.numeric import (
    ez2_des,
    ez2_des_exact,
    ez2_des_neg_line,
    ezl2_continued,
    evaluate_identity,
    hl_zeta_direct,
    riemann_zeta,
    verify_trivial_relations,
)
from desingzeta.numeric.dzeta2 import Poly1
from desingzeta.padic import PadicLRequest, kubota_leopoldt_check, padic_L_nonpos

MINUS_ONE = Fraction(-1)


def _report(n, detail, t0):
    print(f"ACCEPTANCE {n}: PASS — {detail} ({time.monotonic() - t0:.2f}s)")


def test_criterion_1_exact_paper_values():
    t0 = time.monotonic()
    expected = {
        (0, 0): Fraction(1, 4),
        (-1, -1): Fraction(1, 36),
        (0, -2): Fraction(1, 18),
        (1, -3): Fraction(1, 20),
        (-1, 1): Fraction(1, 8),
        (1, 1): Fraction(1, 2),
    }
    for point, value in expected.items():
        tick = time.monotonic()
        assert ez2_des_exact(*point) == value, point
        assert time.monotonic() - tick < 1.0, f"value at {point} too slow"
    _report(1, "six exact special values, exact rational equality", t0)


def test_criterion_2_closed_form_lines():
    t0 = time.monotonic()
    e = ez2_des_neg_line(3, "second")
    assert e.poly_for_shift(-3) == Poly1([Fraction(-2), Fraction(1, 2)])
    assert e.poly_for_shift(-2) == Poly1([Fraction(-3, 2), Fraction(1, 2)])
    assert e.poly_for_shift(0) == Poly1([Fraction(1, 30), Fraction(-1, 30)])
    assert e.shifts() == [-3, -2, 0]
    f = ez2_des_neg_line(1, "first")
    assert f.poly_for_shift(-2) == Poly1([Fraction(1), Fraction(-7, 12),
                                          Fraction(1, 12)])
    assert f.poly_for_shift(-1) == Poly1([Fraction(-1), Fraction(1, 2)])
    assert f.poly_for_shift(0) == Poly1([Fraction(0), Fraction(1, 12),
                                         Fraction(-1, 12)])
    assert f.shifts() == [-2, -1, 0]
    _report(2, "line expressions reproduce both coefficient lists exactly", t0)


def test_criterion_3_mixed_exact_numeric():
    t0 = time.monotonic()
    z2 = riemann_zeta(2.0).value
    z3 = riemann_zeta(3.0).value
    z4 = riemann_zeta(4.0).value
    z5 = riemann_zeta(5.0).value
    assert abs(ez2_des(2.0, 1.0).value - (2 * z3 - z2)) < 1e-9
    assert abs(ez2_des(3.0, 1.0).value - (2 * z3 - Fraction(5, 4) * z4)) < 1e-9
    assert abs(ez2_des(4.0, 1.0).value
               - (3 * z4 + 2 * z5 - 2 * z2 * z3)) < 1e-9
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0
    _report(3, "three second-argument-1 values within 1e-9", t0)


def test_criterion_4_identity_regeneration():
    t0 = time.monotonic()
    from desingzeta.desing import MultiPoly

    def var(d, j):
        return MultiPoly.var(d, j)

    data, c = builtin_data("ez2")
    s1, s2 = var(2, 0), var(2, 1)
    grouped = grouped_coefficients(desing_identity(data, c).terms, 2)
    assert grouped == {
        (0, 0): (s1 - 1) * (s2 - 1),
        (-1, 1): s2 * (s2 + 1 - s1),
        (-2, 2): -1 * (s2 * (s2 + 1)),
    }
    dm, family = mt2_data()
    s1, s2, s3 = var(3, 0), var(3, 1), var(3, 2)
    grouped = grouped_coefficients(desing_identity(dm, family(0, 0)).terms, 3)
    assert grouped == {
        (0, 0, 0): (s1 - 1) * (s2 - 1),
        (0, -1, 1): s3 * (s1 - 1),
        (-1, 0, 1): s3 * (s2 - 1),
        (-1, -1, 2): s3 * (s3 + 1),
    }
    _report(4, "both identities regenerate term-for-term symbolically", t0)


def test_criterion_5_oracle_equivalence():
    t0 = time.monotonic()
    data, c = builtin_data("ez2")
    rng = np.random.default_rng(20240812)
    worst_direct = 0.0
    for _ in range(50):
        s = (rng.uniform(2.0, 5.0), rng.uniform(2.0, 5.0))
        a = hl_zeta_direct(data, s).value
        b = ezl2_continued((1, 1), (1, 1), s).value
        worst_direct = max(worst_direct, abs(a - b))
    assert worst_direct < 1e-9

    ident = desing_identity(data, c)
    worst_ident = 0.0
    count = 0
    while count < 20:
        s1 = rng.uniform(1.3, 4.0)
        s2 = rng.uniform(-0.6, 3.0)
        if min(abs(s2 - 1), abs(s2), abs(s2 + 1)) < 0.05:
            continue
        if min(abs(s1 + s2 - v) for v in (2, 1, 0, -2)) < 0.05:
            continue
        a = evaluate_identity(ident, (s1, s2)).value
        b = ez2_des(s1, s2).value
        worst_ident = max(worst_ident, abs(a - b))
        count += 1
    assert worst_ident < 1e-9
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _report(5, f"worst deviations {worst_direct:.2e} (50 pts), "
               f"{worst_ident:.2e} (20 pts)", t0)


def test_criterion_6_trivial_relations():
    t0 = time.monotonic()
    rng = np.random.default_rng(99)
    worst = 0.0
    for _ in range(10):
        pt = tuple(rng.uniform(5.0, 6.5) for _ in range(3))
        r1, r2 = verify_trivial_relations(pt)
        worst = max(worst, r1, r2)
    assert worst < 1e-8
    _report(6, f"both relations vanish at 10 points, worst {worst:.2e}", t0)


def test_criterion_7_singularity_behavior():
    t0 = time.monotonic()
    # residue of the double zeta at its last-variable pole
    for N in (2, 3, 4):
        probes = []
        for k in (3, 4, 5, 6):
            eps = 10.0**-k
            z = ezl2_continued((1, 1), (1, 1), (float(N), 1.0 + eps)).value
            probes.append((eps, eps * z))
        diffs = [abs(v - riemann_zeta(float(N)).value) for _, v in probes]
        assert all(b < a for a, b in zip(diffs, diffs[1:])), diffs
        (e1, f1), (e2, f2) = probes[-2], probes[-1]
        limit = (e1 * f2 - e2 * f1) / (e1 - e2)
        assert abs(limit - riemann_zeta(float(N)).value) < 1e-6, N
    # continuity of the entire function across the sum hyperplane
    for k in (3, 4, 5, 6):
        for sgn in (+1, -1):
            v = ez2_des(1.0 + sgn * 10.0**-k, 1.0).value
            assert abs(v - 0.5) < 2.5 * 10.0**-k, (k, sgn)
    assert abs(ez2_des(1.0 + 1e-6, 1.0).value - 0.5) < 1e-6
    assert abs(ez2_des(1.0 - 1e-6, 1.0).value - 0.5) < 1e-6
    _report(7, "pole residues and cross-hyperplane continuity verified", t0)


def test_criterion_8_padic():
    t0 = time.monotonic()
    for (c, p) in [(2, 3), (2, 5), (3, 5), (4, 7)]:
        for n in range(21):
            ok, lhs, rhs = kubota_leopoldt_check(n, c, p)
            assert ok, (n, c, p, lhs, rhs)
    pairs = [(c, p) for c in (2, 3, 4) for p in (3, 5, 7) if c % p != 0]
    # descending order lets the expansion caches warm at the deepest index
    grid = sorted(product(range(5), repeat=2), key=lambda t: -sum(t))
    for c, p in pairs:
        for n in range(4, -1, -1):
            v = padic_L_nonpos(PadicLRequest((n,), c, p))
            assert isinstance(v, Fraction)
        for n1, n2 in grid:
            v = padic_L_nonpos(PadicLRequest((n1, n2), c, p))
            assert isinstance(v, Fraction)
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    _report(8, f"depth-1 consistency (n <= 20, 4 pairs) and rationality "
               f"sweep over {len(pairs)} (c, p) pairs", t0)


def test_criterion_9_coefficient_layer():
    t0 = time.monotonic()
    tests = {
        "one": 1,
        "minus one": MINUS_ONE,
        "order 3": root_of_unity(3, 1),
        "order 4": root_of_unity(4, 1),
        "order 6": root_of_unity(6, 1),
    }
    for name, xi in tests.items():
        for k in range(21):
            if name == "one":
                v = zeta_neg_int(k)
                vanish = k >= 2 and k % 2 == 0
            else:
                v = lerch_neg_coeff(k, xi)
                vanish = name == "minus one" and k >= 2 and k % 2 == 0
            assert (v == 0) == vanish, (name, k)
    # kernel coefficients: closed form equals direct expansion
    for name, xi in tests.items():
        for n in range(21):
            coeff = f_delta_coeff(n, xi)
            if name == "one":
                assert coeff == bernoulli(n + 1)
            else:
                inv_xi = Fraction(1) / xi if isinstance(xi, Fraction) \
                    else xi.inverse()
                one_minus = (1 - xi) if not isinstance(xi, (int, Fraction)) \
                    else Fraction(1) - Fraction(xi)
                assert coeff * one_minus == frobenius_euler(n, inv_xi)
    _report(9, "vanishing pattern and kernel closed form, k <= 20", t0)
