"""Exact arithmetic foundation: rationals (stdlib Fraction), cyclotomic
numbers, truncated power series, and the coefficient families feeding
the special-value and p-adic layers."""

from .coefficients import (
    bernoulli,
    f_delta_coeff,
    frobenius_euler,
    lerch_neg_coeff,
    zeta_neg_int,
)
from .cyclotomic import (
    CyclotomicNumber,
    as_unit_root_exponent,
    cyclotomic_polynomial,
    euler_phi,
    root_of_unity,
)
from .series import PowerSeries1

__all__ = [
    "CyclotomicNumber",
    "PowerSeries1",
    "as_unit_root_exponent",
    "bernoulli",
    "cyclotomic_polynomial",
    "euler_phi",
    "f_delta_coeff",
    "frobenius_euler",
    "lerch_neg_coeff",
    "root_of_unity",
    "zeta_neg_int",
]
