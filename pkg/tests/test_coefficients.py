"""Coefficient families: Bernoulli, Lerch at non-positive integers,
Frobenius-Euler, and the desingularized-kernel Taylor coefficients.

Expected values for the derived cases are produced by the independent
series-inversion oracle in conftest and frozen below where small.
"""

import math
from fractions import Fraction

import pytest

from conftest import bernoulli_oracle, kernel_coeff_oracle, lerch_coeff_oracle
from desingzeta.errors import ParameterError, XiOneError
from desingzeta.exact import (
    CyclotomicNumber,
    PowerSeries1,
    bernoulli,
    euler_phi,
    f_delta_coeff,
    frobenius_euler,
    lerch_neg_coeff,
    root_of_unity,
    zeta_neg_int,
)

MINUS_ONE = Fraction(-1)


def test_bernoulli_basics():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    oracle = bernoulli_oracle(14)
    assert bernoulli(12) == oracle[12] == Fraction(-691, 2730)
    for n in range(15):
        assert bernoulli(n) == oracle[n]
    with pytest.raises(ParameterError):
        bernoulli(-1)


def test_zeta_neg_int_analytic_convention():
    assert zeta_neg_int(0) == Fraction(-1, 2)
    assert zeta_neg_int(1) == Fraction(-1, 12)
    assert zeta_neg_int(2) == 0
    assert zeta_neg_int(3) == Fraction(1, 120)


def test_lerch_examples():
    assert lerch_neg_coeff(0, MINUS_ONE) == Fraction(1, 2)
    assert lerch_neg_coeff(2, MINUS_ONE) == 0
    i = root_of_unity(4, 1)
    oracle = lerch_coeff_oracle(i, 3)
    assert lerch_neg_coeff(3, i) == oracle[3]
    assert lerch_neg_coeff(3, i) == 1  # frozen from the oracle
    with pytest.raises(XiOneError):
        lerch_neg_coeff(2, 1)


def test_alternating_lerch_is_scaled_bernoulli():
    # phi(-k, -1) = (2^(1+k) - 1) * (-B_{k+1}/(k+1)); the raw Bernoulli
    # expression, which at k = 0 gives +1/2 under B_1 = -1/2
    for k in range(21):
        expect = (2 ** (1 + k) - 1) * (-bernoulli(k + 1) / (k + 1))
        assert lerch_neg_coeff(k, MINUS_ONE) == expect


def test_lerch_vanishing_pattern():
    # +-1: zero exactly at even k >= 2; other roots of unity: never zero
    for k in range(21):
        v = lerch_neg_coeff(k, MINUS_ONE)
        assert (v == 0) == (k >= 2 and k % 2 == 0)
    for n in range(3, 13):
        for a in range(1, n):
            if math.gcd(a, n) != 1:
                continue
            xi = root_of_unity(n, a)
            if xi == 1 or xi == MINUS_ONE:
                continue
            for k in range(21):
                assert not (lerch_neg_coeff(k, xi) == 0), (n, a, k)


def test_frobenius_euler():
    z3 = root_of_unity(3, 1)
    assert frobenius_euler(0, MINUS_ONE) == 1
    assert frobenius_euler(0, z3) == 1
    # derived: (1 - xi) * series coefficient
    oracle = lerch_coeff_oracle(MINUS_ONE, 1)
    assert frobenius_euler(1, MINUS_ONE) == 2 * oracle[1] == Fraction(-1, 2)
    assert frobenius_euler(2, MINUS_ONE) == 0
    with pytest.raises(ParameterError):
        frobenius_euler(1, 1)


def test_kernel_coefficients():
    assert f_delta_coeff(0, MINUS_ONE) == Fraction(1, 2)
    assert f_delta_coeff(0, 1) == bernoulli(1) == Fraction(-1, 2)
    assert f_delta_coeff(1, MINUS_ONE) == Fraction(-1, 4)
    for n in range(12):
        assert f_delta_coeff(n, 1) == bernoulli(n + 1)


@pytest.mark.parametrize("n_order", [2, 3, 4, 5, 6, 8, 12])
def test_kernel_closed_form_vs_series(n_order):
    """Series division of 1/(e^y - xi) against the Frobenius-Euler closed
    form, for a primitive root of each order, all n <= 20."""
    xi = MINUS_ONE if n_order == 2 else root_of_unity(n_order, 1)
    oracle = kernel_coeff_oracle(xi, 20)
    for n in range(21):
        coeff = f_delta_coeff(n, xi)
        assert coeff == oracle[n]
        inv = Fraction(1) / (1 - xi) if isinstance(xi, Fraction) \
            else (1 - xi).inverse()
        h = frobenius_euler(n, Fraction(1) / xi if isinstance(xi, Fraction)
                            else xi.inverse())
        assert coeff == h * inv


def test_power_series_division_props():
    a = PowerSeries1([Fraction(1), Fraction(2), Fraction(3), Fraction(-1)])
    b = PowerSeries1([Fraction(2), Fraction(-1), Fraction(5), Fraction(7)])
    assert (a * b) / b == a
    q = a / b
    assert (q * b).coeffs == a.coeffs
    with pytest.raises(ZeroDivisionError):
        a / PowerSeries1([Fraction(0), Fraction(1), Fraction(0), Fraction(0)])


def test_power_series_over_cyclotomics():
    z3 = root_of_unity(3, 1)
    den = [1 - z3] + [-(z3 * Fraction(1, math.factorial(k))) for k in range(1, 6)]
    one = [Fraction(1)] + [Fraction(0)] * 5
    q = PowerSeries1(one) / PowerSeries1(den)
    assert q[0] == (1 - z3).inverse()
    for k in range(6):
        assert q[k] * math.factorial(k) == lerch_neg_coeff(k, z3)


def test_memo_growth_is_consistent():
    z5 = root_of_unity(5, 1)
    low = lerch_neg_coeff(2, z5)
    high = lerch_neg_coeff(17, z5)  # forces a recomputation at higher order
    assert lerch_neg_coeff(2, z5) == low
    assert isinstance(high, CyclotomicNumber)
    assert euler_phi(5) == len(high.coeffs)
