"""Evaluation of the desingularized Euler-Zagier double zeta.

The function is entire, expressible as a three-term combination of
shifted double zetas.  On the integer lines (one argument a
non-positive integer, or the second equal to 1) it collapses to finite
combinations of Riemann zetas with polynomial coefficients; those
expressions are built exactly here (``ZetaLineExpr``), evaluate at any
complex point with removable pole-times-zero products handled by
synthetic division, and evaluate to exact rationals whenever every
surviving zeta argument is a non-positive integer.

Everywhere else the three-term combination is evaluated through the
continued double zeta; points too close to a constituent singular
hyperplane go through a short extrapolation along a generic direction
(the function is entire, so the limit is direction-independent).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import (
    BackendError,
    ExactnessError,
    ParameterError,
    PoleError,
    RegionError,
)
from ..exact import CyclotomicNumber, zeta_neg_int
from ..desing import DesingIdentity, trivial_relation_terms
from ..models import mt2_data
from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .multizeta import ezl2_continued, hl_zeta_continued, hl_zeta_direct
from .zeta import riemann_zeta

__all__ = [
    "Poly1",
    "ZetaLineExpr",
    "ez2_second_neg_line",
    "ez2_first_neg_line",
    "ez2_des_neg_line",
    "ez2_neg_args",
    "ez2_des",
    "ez2_des_exact",
    "evaluate_identity",
    "verify_trivial_relations",
]

_EULER_GAMMA_0 = 0.5772156649015329
_EULER_GAMMA_1 = -0.07281584548367672


class Poly1:
    """Univariate polynomial with Fraction coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, v):
        return cls([v])

    @classmethod
    def linear(cls, a0, a1):
        """a0 + a1 * s"""
        return cls([a0, a1])

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return Poly1(out)

    def __mul__(self, other):
        if isinstance(other, Poly1):
            if self.is_zero() or other.is_zero():
                return Poly1([])
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly1(out)
        return Poly1([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __call__(self, s):
        if isinstance(s, (int, Fraction)):
            acc = Fraction(0)
        else:
            acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * s + (c if isinstance(s, (int, Fraction)) else complex(c))
        return acc

    def value_at(self, s0: Fraction) -> Fraction:
        return self(Fraction(s0))

    def deflate(self, s0: Fraction) -> "Poly1":
        """Quotient by (s - s0); requires the value at s0 to vanish."""
        s0 = Fraction(s0)
        if self.value_at(s0) != 0:
            raise ParameterError("polynomial does not vanish at the root")
        # synthetic division, highest degree first; the running values are
        # the quotient coefficients, the last one the (zero) remainder
        q = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * s0 + c
            q.append(acc)
        return Poly1(list(reversed(q[:-1])))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c})" + ("" if i == 0 else f"*s^{i}" if i > 1 else "*s")
            for i, c in enumerate(self.coeffs) if c != 0
        )


def _pole_window(x: complex) -> bool:
    return abs(x - 1.0) < 1e-8


def _zeta_near_one_scaled(x: complex) -> complex:
    # (x - 1) * zeta(x) for |x - 1| tiny
    d = x - 1.0
    return 1.0 + _EULER_GAMMA_0 * d - _EULER_GAMMA_1 * d * d


class ZetaLineExpr:
    """Finite combination sum_a P_a(s) * zeta(s + a) with exact polynomial
    coefficients (rational zeta constants already folded in)."""

    def __init__(self, terms: dict):
        self.terms = {int(a): p for a, p in terms.items() if not p.is_zero()}

    def poly_for_shift(self, a: int) -> Poly1:
        return self.terms.get(int(a), Poly1([]))

    def shifts(self):
        return sorted(self.terms)

    def evaluate(self, s, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
        s = complex(s)
        total = 0.0 + 0.0j
        bound = 0.0
        for a, P in self.terms.items():
            arg = s + a
            if _pole_window(arg):
                s0 = Fraction(1 - a)
                if P.value_at(s0) != 0:
                    raise PoleError(
                        f"zeta(s{a:+d}) pole at s = {s0} with non-vanishing "
                        "coefficient"
                    )
                Q = P.deflate(s0)
                total += Q(s) * _zeta_near_one_scaled(arg)
                bound += abs(Q(s)) * 1e-14
            else:
                z = riemann_zeta(arg, cfg)
                total += P(s) * z.value
                bound += abs(P(s)) * z.error_bound
        return EvalResult(total, bound + 1e-15 * abs(total), "closed-form")

    def evaluate_exact(self, s) -> Fraction:
        """Exact value at an integer s; every surviving zeta argument must
        be <= 1, with arg = 1 only against a vanishing coefficient."""
        s = Fraction(s)
        if s.denominator != 1:
            raise ExactnessError("exact line evaluation needs an integer point")
        total = Fraction(0)
        for a, P in self.terms.items():
            arg = s + a
            if arg == 1:
                s0 = Fraction(1 - a)
                if P.value_at(s0) != 0:
                    raise PoleError(f"pole of zeta(s{a:+d}) at s = {s0}")
                total += P.deflate(s0).value_at(s)  # lim (x-1) zeta(x) = 1
            elif arg > 1:
                if P.value_at(s) != 0:
                    raise ExactnessError(
                        f"value involves the irrational zeta({arg})"
                    )
            else:
                total += P.value_at(s) * zeta_neg_int(int(-arg))
        return total


def _binom(n: int, k: int) -> Fraction:
    return Fraction(math.comb(n, k))


def ez2_second_neg_line(N: int) -> ZetaLineExpr:
    """zeta_2(s, -N) as a zeta combination (second argument frozen)."""
    if N < 0:
        raise ParameterError("N must be non-negative")
    terms: dict[int, Poly1] = {}

    def add(shift, poly):
        terms[shift] = terms.get(shift, Poly1([])) + poly

    add(-N - 1, Poly1.const(Fraction(-1, N + 1)))
    for k in range(N + 1):
        zk = zeta_neg_int(k)
        if zk:
            add(-N + k, Poly1.const(_binom(N, k) * zk))
    return ZetaLineExpr(terms)


def ez2_first_neg_line(N: int) -> ZetaLineExpr:
    """zeta_2(-N, s) as a zeta combination (first argument frozen)."""
    if N < 0:
        raise ParameterError("N must be non-negative")
    terms: dict[int, Poly1] = {}

    def add(shift, poly):
        terms[shift] = terms.get(shift, Poly1([])) + poly

    add(-N - 1, Poly1.const(Fraction(1, N + 1)))
    for k in range(N + 1):
        zk = zeta_neg_int(k)
        if zk:
            add(-N + k, Poly1.const(-_binom(N, k) * zk))
    add(0, Poly1.const(zeta_neg_int(N)))
    add(-N, Poly1.const(-1))
    return ZetaLineExpr(terms)


def ez2_des_neg_line(N: int, which: str = "second") -> ZetaLineExpr:
    """The desingularized double zeta on an integer line, as an exact
    zeta combination in the remaining variable.

    which = "second": zeta_2^des(s, -N); which = "first": zeta_2^des(-N, s).
    """
    if N < 0:
        raise ParameterError("N must be non-negative")
    terms: dict[int, Poly1] = {}

    def add(shift, poly):
        terms[shift] = terms.get(shift, Poly1([])) + poly

    if which == "second":
        # -sum_k binom(N,k) (k+1) (s - N + k - 1) zeta(s-N+k) zeta(-k)
        for k in range(N + 1):
            zk = zeta_neg_int(k)
            if zk:
                add(-N + k,
                    Poly1.linear(-N + k - 1, 1) * (-_binom(N, k) * (k + 1) * zk))
        return ZetaLineExpr(terms)
    if which == "first":
        add(-N - 1,
            Poly1.linear(-N - 3, 1) * Poly1.linear(-N - 2, 1)
            * Fraction(1, (N + 3) * (N + 2)))
        for k in range(N + 2):
            zk = zeta_neg_int(k)
            if zk:
                poly = (Poly1.linear(N - k + 2, k) * Poly1.linear(-N + k - 1, 1)
                        * (Fraction(1, N + 2) * _binom(N + 2, k) * zk))
                add(-N + k, poly)
        add(0, Poly1.linear(-1, 1) * Fraction(-(N + 1)) * zeta_neg_int(N))
        add(1, Poly1.linear(0, 1) * Poly1.linear(N + 1, 1) * zeta_neg_int(N + 1))
        add(-N, Poly1.linear(-N - 1, 1))
        return ZetaLineExpr(terms)
    raise ParameterError("which must be 'second' or 'first'")


def ez2_neg_args(which: str, s, N: int, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Ordinary double zeta with one argument a non-positive integer -N,
    evaluated from its finite zeta combination."""
    expr = ez2_second_neg_line(N) if which == "second" else ez2_first_neg_line(N)
    return expr.evaluate(s, cfg)


# ---------------------------------------------------------------------------
# the entire desingularized double zeta


_EQ_EX_TERMS = (
    # (coefficient, its d/ds2, shift); the derivative feeds the limit of
    # coefficient-zero times second-argument pole products
    (lambda s1, s2: (s1 - 1.0) * (s2 - 1.0), lambda s1, s2: s1 - 1.0, (0, 0)),
    (lambda s1, s2: s2 * (s2 + 1.0 - s1), lambda s1, s2: 2 * s2 + 1.0 - s1, (-1, 1)),
    (lambda s1, s2: -s2 * (s2 + 1.0), lambda s1, s2: -2 * s2 - 1.0, (-2, 2)),
)

_SUM_CATALOG_TOP = 2  # sum-hyperplanes at 2, 1, 0, -2, -4, ...


def _near_int(x: complex, tol: float = 1e-12):
    if abs(x.imag) > tol:
        return None
    n = round(x.real)
    return n if abs(x.real - n) <= tol * max(1.0, abs(x.real)) else None


def _hyperplane_distance(s1: complex, s2: complex) -> float:
    """Distance to the nearest singular hyperplane of any constituent of
    the three-term combination: s2 in {1, 0, -1} and the catalogued
    values of s1 + s2 (common to all three terms)."""
    d = min(abs(s2 - 1.0), abs(s2), abs(s2 + 1.0))
    total = s1 + s2
    d = min(d, abs(total - 2.0), abs(total - 1.0))
    # even non-positive values 0, -2, -4, ...
    re = total.real
    if re <= 0.5:
        nearest = 2.0 * round(re / 2.0)
        if nearest > 0:
            nearest = 0.0
        d = min(d, abs(total - nearest))
    else:
        d = min(d, abs(total))
    return d


def _eq_ex_eval(s1: complex, s2: complex, cfg: EvalConfig) -> EvalResult:
    total = 0.0 + 0.0j
    bound = 0.0
    for coeff_fn, dcoeff_fn, (m1, m2) in _EQ_EX_TERMS:
        c = coeff_fn(s1, s2)
        if abs(s2 + m2 - 1.0) < 1e-12:
            # the shifted double zeta has a simple pole in its second
            # argument with residue zeta(first argument); the coefficient
            # vanishes there and the product tends to d(coeff)/ds2 * residue
            res = riemann_zeta(s1 + m1, cfg)
            dc = dcoeff_fn(s1, s2)
            total += dc * res.value
            bound += abs(dc) * res.error_bound
            continue
        if c == 0:
            continue
        z = ezl2_continued((1, 1), (1.0, 1.0), (s1 + m1, s2 + m2), cfg)
        total += c * z.value
        bound += abs(c) * z.error_bound
    return EvalResult(total, bound, "mb")


def _neville_limit(f, h_values):
    """Polynomial extrapolation of f(h) to h = 0; the error estimate is
    the last extrapolation correction."""
    hs = list(h_values)
    vals = [f(h) for h in hs]
    n = len(vals)
    tab = list(vals)
    prev_top = None
    for level in range(1, n):
        new = []
        for i in range(n - level):
            num = hs[i] * tab[i + 1] - hs[i + level] * tab[i]
            new.append(num / (hs[i] - hs[i + level]))
        prev_top = tab[0]
        tab = new
    err = abs(tab[0] - prev_top) if prev_top is not None else math.inf
    return tab[0], err


def _limit_eval(s1: complex, s2: complex, cfg: EvalConfig) -> EvalResult:
    # generic direction with irrational slope: cannot stay on a hyperplane
    w1, w2 = 1.0, math.sqrt(2.0)
    eta = cfg.near_singularity_eta

    def f(h):
        return _eq_ex_eval(s1 + h * w1, s2 + h * w2, cfg).value

    value, err = _neville_limit(f, [m * eta for m in (2, 3, 4, 6, 8, 12)])
    return EvalResult(value, max(err, 1e-9), "limit")


def _s2_one_line(s1: complex, cfg: EvalConfig) -> EvalResult:
    """zeta_2^des(s1, 1): residue of the double zeta times (s1 - 1), plus
    two shifted convergent double zetas.  Valid for s1 not 1 and not a
    non-positive integer (those are dispatched earlier)."""
    z1 = riemann_zeta(s1, cfg)
    za = ezl2_continued((1, 1), (1.0, 1.0), (s1 - 1.0, 2.0), cfg)
    zb = ezl2_continued((1, 1), (1.0, 1.0), (s1 - 2.0, 3.0), cfg)
    val = (s1 - 1.0) * z1.value + (2.0 - s1) * za.value - 2.0 * zb.value
    bound = (abs(s1 - 1.0) * z1.error_bound + abs(2.0 - s1) * za.error_bound
             + 2.0 * zb.error_bound)
    # the zeta(s1)-sized parts cancel; account for the lost digits
    bound += 1e-15 * (abs(z1.value) + abs(za.value) + abs(zb.value))
    return EvalResult(val, bound, "closed-form")


def ez2_des(s1, s2, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """The desingularized Euler-Zagier double zeta, everywhere.

    Dispatch: exact integer lines first (finite zeta combinations),
    then the second-argument-1 line, then the generic three-term
    combination, with a short extrapolation when a constituent
    singular hyperplane is closer than the configured eta.
    """
    s1, s2 = complex(s1), complex(s2)
    n1, n2 = _near_int(s1, 1e-12), _near_int(s2, 1e-12)
    if n2 is not None and n2 <= 0:
        return ez2_des_neg_line(-n2, "second").evaluate(s1, cfg)
    if n1 is not None and n1 <= 0:
        return ez2_des_neg_line(-n1, "first").evaluate(s2, cfg)
    if n1 == 1 and n2 == 1:
        return EvalResult(0.5 + 0.0j, 0.0, "closed-form")
    if n2 == 1:
        return _s2_one_line(s1, cfg)
    if _hyperplane_distance(s1, s2) < cfg.near_singularity_eta:
        return _limit_eval(s1, s2, cfg)
    return _eq_ex_eval(s1, s2, cfg)


def ez2_des_exact(s1, s2) -> Fraction:
    """Exact rational value at an integer point, when one exists.

    Raises ExactnessError when the value involves zeta at an integer
    >= 2 (use the numeric path), ParameterError off the integer lattice.
    """
    s1, s2 = Fraction(s1), Fraction(s2)
    if s1.denominator != 1 or s2.denominator != 1:
        raise ParameterError("exact values live on the integer lattice")
    if s2 <= 0:
        return ez2_des_neg_line(int(-s2), "second").evaluate_exact(s1)
    if s1 <= 0:
        return ez2_des_neg_line(int(-s1), "first").evaluate_exact(s2)
    if s1 == 1 and s2 == 1:
        return Fraction(1, 2)
    raise ExactnessError(
        "both arguments positive: the value involves irrational zetas"
    )


# ---------------------------------------------------------------------------
# identity evaluation


def _pochhammer(s: complex, k: int) -> complex:
    out = 1.0 + 0.0j
    for i in range(k):
        out *= s + i
    return out


def _alpha_complex(alpha) -> complex:
    if isinstance(alpha, CyclotomicNumber):
        return alpha.to_complex()
    return complex(Fraction(alpha))


def evaluate_identity(identity: DesingIdentity, s,
                      cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Numeric value of the right-hand side of a combination identity:
    sum alpha * prod (s_j)_{l_j} * zeta_r((s_j + m_j))."""
    data = identity.base
    s = tuple(complex(x) for x in s)
    if len(s) != data.d:
        raise ParameterError("need one component per linear form")
    use_continuation = data.r == 2 and data.ezl_gammas() is not None
    total = 0.0 + 0.0j
    bound = 0.0
    method = "direct"
    for t in identity.terms:
        coef = _alpha_complex(t.alpha)
        for j in range(data.d):
            coef *= _pochhammer(s[j], t.l[j])
        if coef == 0:
            continue
        point = tuple(s[j] + t.m[j] for j in range(data.d))
        try:
            if use_continuation:
                z = hl_zeta_continued(data, point, cfg)
                method = "mb"
            else:
                z = hl_zeta_direct(data, point, cfg)
        except (RegionError, PoleError) as exc:
            raise BackendError(
                f"term alpha={t.alpha} l={t.l} m={t.m} not evaluable at "
                f"{point}: {exc}"
            ) from exc
        total += coef * z.value
        bound += abs(coef) * z.error_bound
    return EvalResult(total, bound, method)


def verify_trivial_relations(point, cfg: EvalConfig = DEFAULT_CONFIG
                             ) -> tuple[float, float]:
    """|LHS| of the two identically-vanishing Mordell-Tornheim relations
    at a point where every shifted argument is directly summable."""
    data, family = mt2_data()
    rels = trivial_relation_terms(data, family)
    out = []
    for name in ("a", "ab"):
        ident = DesingIdentity(data, rels[name])
        res = evaluate_identity(ident, point, cfg)
        out.append(abs(res.value))
    return out[0], out[1]
