"""Direct summation of multiple zeta series and the Mellin-Barnes
continuation of the rank-2 triangular family.

``hl_zeta_direct`` sums the defining series inside its convergence
region and returns a value with a computable tail bound.  The plain
Euler-Zagier case rides a fast path: the inner sum is a Hurwitz zeta
and the outer tail is completed by its asymptotic expansion, which
brings the truncation error down to Euler-Maclaurin remainder size.

``ezl2_continued`` continues the rank-2 triangular zeta to the whole
plane (off the singular hyperplanes): residue terms plus a vertical
line integral evaluated by composite Gauss-Legendre panels, the
half-length grown until the last panel is negligible.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.special import gamma as _cgamma

from ..errors import (
    AccuracyError,
    ParameterError,
    PoleError,
    RegionError,
)
from ..exact import CyclotomicNumber, lerch_neg_coeff, root_of_unity
from ..models import HLData, singular_hyperplanes
from . import kernels
from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .zeta import (
    bern_fac_table,
    em_parameters,
    hurwitz_zeta,
    lerch_phi,
    lerch_phi_batch,
    zeta_exact_nonpos,
)

__all__ = [
    "hl_zeta_direct",
    "hl_zeta_continued",
    "ezl2_continued",
    "lerch_at_neg_int",
    "mb_shift_order",
]

_MAX_HALFLENGTH = 256.0
_PANEL_WIDTH = 2.0
_GL_NODES = 24


def lerch_at_neg_int(k: int, xi) -> complex:
    """Analytic Lerch value at s = -k for a root of unity twist.

    For k >= 1 the analytic continuation and the series-coefficient
    convention agree; at k = 0 the analytic value is xi/(1-xi), one
    less than the series constant term 1/(1-xi).
    """
    if k < 0:
        raise ParameterError("k must be non-negative")
    if isinstance(xi, tuple):
        xi = root_of_unity(xi[1], xi[0])
    if not isinstance(xi, CyclotomicNumber):
        xi = root_of_unity(2, 1) if xi == -1 else (
            CyclotomicNumber.one() if xi == 1 else xi)
    if isinstance(xi, CyclotomicNumber):
        if xi.is_one():
            return complex(float(zeta_exact_nonpos(-k)))
        if k == 0:
            z = xi.to_complex()
            return z / (1 - z)
        v = lerch_neg_coeff(k, xi)
        return v.to_complex() if isinstance(v, CyclotomicNumber) else complex(float(v))
    z = complex(xi)
    if k == 0:
        return z / (1 - z)
    raise ParameterError("negative-integer Lerch values need an exact root of unity")


def _binom_neg(s: complex, k: int) -> complex:
    # binomial(-s, k) = (-s)(-s-1)...(-s-k+1)/k!
    out = 1.0 + 0.0j
    for i in range(k):
        out *= -s - i
    return out / math.factorial(k)


# ---------------------------------------------------------------------------
# direct summation


def _sigma(s) -> list[float]:
    return [complex(x).real for x in s]


def _xi_complex(x) -> complex:
    if isinstance(x, CyclotomicNumber):
        return x.to_complex()
    return complex(x)


def _tail_zeta(x: float, offset: float) -> float:
    # elementary bound: sum_{m >= offset} m^-x <= offset^(1-x)/(x-1) + offset^-x
    if x <= 1:
        raise RegionError("tail exponent must exceed 1")
    return offset ** (1.0 - x) / (x - 1.0) + offset ** -x


def _ez_fast_eligible(data: HLData) -> bool:
    g = data.ezl_gammas()
    return (
        g is not None
        and data.r == 2
        and all(x == 1 for x in g)
        and all(data.delta)
    )


def _ez2_fast(s1: complex, s2: complex, cfg: EvalConfig) -> EvalResult:
    """Plain Euler-Zagier rank 2: sum_{m>=1} m^-s1 zeta(s2, m+1).

    The first N outer terms are summed with the inner Hurwitz zeta read
    off a cumulative sum of zeta(s2); the outer tail is completed by the
    large-offset expansion zeta(s2, m+1) ~ m^(1-s2)/(s2-1) - m^(-s2)/2
    + corrections, each of which sums to a Hurwitz zeta at offset N+1.
    """
    N, K = 100, 12
    z2 = hurwitz_zeta(s2, 1.0, cfg)
    partial = kernels.ez2_partial(s1, s2, z2.value, N)
    table = bern_fac_table()
    w = s1 + s2

    def zeta_offset(x: complex) -> complex:
        # sum_{m > N} m^-x, well inside Re x > 1
        _, kx = em_parameters(x, cfg)
        v, _ = kernels.hurwitz_single(x, float(N + 1), 24, kx, table)
        return v

    tail = zeta_offset(w - 1) / (s2 - 1.0) - 0.5 * zeta_offset(w)
    poch = s2
    for k in range(1, K + 1):
        tail += float(table[k]) * poch * zeta_offset(w + 2 * k - 1)
        poch = poch * (s2 + (2 * k - 1)) * (s2 + 2 * k)
    guard = abs(s2 + 2 * K + 1) / (s2.real + 2 * K + 1)
    rem = abs(float(table[K + 1])) * abs(poch) * _tail_zeta(
        w.real + 2 * K + 1, N + 1) * guard
    noise = 1e-14 * (abs(partial) + abs(tail) + 1.0) + N * z2.error_bound
    return EvalResult(partial + tail, rem + noise, "direct")


def _twist_gap(x) -> float:
    """|1 - xi| for a twist, 0.0 meaning xi = 1 (no alternation to exploit)."""
    z = _xi_complex(x)
    return abs(1.0 - z)


def _tail_one_direction(data: HLData, sig, k: int, N: int) -> float:
    """Bound on |sum over m_k >= N, all other m >= 0| of the series terms.

    Rows with a positive gamma in column k are bounded by
    (gamma_jk m_k)^(-sigma_j); for every other variable one controlling
    row is reserved (preferring rows not involving m_k), contributing a
    one-dimensional convergent sum.  A reserved row that does involve
    m_k splits its exponent evenly between the tail variable and its own
    sum (x + y >= 2 sqrt(xy)).  Remaining rows fall back to their beta
    floor.  A twist on m_k earns an Abel-summation factor 2/|1 - xi_k|
    and relaxes the tail-exponent requirement to > 0.
    """
    gap = _twist_gap(data.xi[k])
    reserved: dict[int, int] = {}
    for k2 in range(data.r):
        if k2 == k:
            continue
        candidates = [j for j in range(data.d)
                      if complex(data.gamma[j][k2]).real > 0
                      and j not in reserved.values()]
        if not candidates:
            return math.inf
        candidates.sort(
            key=lambda j: (complex(data.gamma[j][k]).real > 0, -sig[j])
        )
        j = candidates[0]
        shared = complex(data.gamma[j][k]).real > 0
        if (sig[j] / 2 if shared else sig[j]) <= 1:
            return math.inf
        reserved[k2] = j
    coef = 1.0
    a_k = 0.0
    for j in range(data.d):
        if j in reserved.values():
            continue
        gjk = complex(data.gamma[j][k]).real
        if gjk > 0:
            coef *= gjk ** (-sig[j])
            a_k += sig[j]
        else:
            coef *= complex(data.beta[j]).real ** (-sig[j])
    for k2, j in reserved.items():
        b = complex(data.beta[j]).real
        g2 = complex(data.gamma[j][k2]).real
        gk = complex(data.gamma[j][k]).real
        if gk > 0:
            half = sig[j] / 2
            coef *= (2.0 * math.sqrt(gk)) ** (-sig[j])
            a_k += half
            coef *= b ** (-half) + g2 ** (-half) * (1 + _tail_zeta(half, 1.0))
        else:
            coef *= b ** (-sig[j]) + g2 ** (-sig[j]) * (1 + _tail_zeta(sig[j], 1.0))
    if gap > 1e-9:
        if a_k <= 0:
            return math.inf
        return coef * (2.0 / gap) * float(N) ** (-a_k)
    if a_k <= 1:
        return math.inf
    return coef * _tail_zeta(a_k, float(N))


_WORK_BUDGET = 3.0e7  # total lattice points a direct sum may touch


def _direct_caps(data: HLData, sig, cfg: EvalConfig) -> tuple[list[int], float]:
    r = data.r
    caps = [16] * r

    def tails():
        out = []
        for k in range(r):
            b = _tail_one_direction(data, sig, k, caps[k])
            if b is math.inf:
                raise RegionError(
                    "no computable tail bound at this point; move deeper "
                    "into the convergence region or use the continuation"
                )
            out.append(b)
        return out

    while True:
        bs = tails()
        if sum(bs) < cfg.target_tol / 2:
            break
        order = sorted(range(r), key=lambda k: -bs[k])
        grew = False
        for k in order:
            if caps[k] >= cfg.direct_sum_cap:
                continue
            work = 1.0
            for k2 in range(r):
                work *= caps[k2] * (2 if k2 == k else 1)
            if work > _WORK_BUDGET:
                continue
            caps[k] = min(2 * caps[k], cfg.direct_sum_cap)
            grew = True
            break
        if not grew:
            break
    return caps, sum(tails())


def hl_zeta_direct(data: HLData, s, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Truncated multiple sum inside the convergence region.

    Region: all Re s_j > 1 in general; the triangular family uses its
    larger region (partial sums of trailing sigmas exceed the count).
    The plain Euler-Zagier rank-2 case is summed with a completed tail;
    everything else returns the truncation with a computable bound.
    """
    s = tuple(complex(x) for x in s)
    if len(s) != data.d:
        raise ParameterError("need one s_j per linear form")
    sig = _sigma(s)
    g = data.ezl_gammas()
    if g is not None:
        for j in range(1, data.r + 1):
            if sum(sig[-j:]) <= j:
                raise RegionError(
                    f"outside the triangular convergence region: "
                    f"sum of last {j} sigmas must exceed {j}"
                )
    elif any(x <= 1 for x in sig):
        raise RegionError("direct summation needs Re s_j > 1 for all j")

    if _ez_fast_eligible(data):
        return _ez2_fast(s[0], s[1], cfg)

    if g is None or all(x > 1 for x in sig):
        return _direct_generic(data, s, cfg)
    raise RegionError(
        "twisted triangular data outside Re s_j > 1: use the continuation"
    )


def _direct_generic(data: HLData, s, cfg: EvalConfig) -> EvalResult:
    sig = _sigma(s)
    caps, bound = _direct_caps(data, sig, cfg)
    xi = [_xi_complex(x) for x in data.xi]
    beta = [complex(b) for b in data.beta]
    if data.r == 1:
        gam = [complex(data.gamma[j][0]) for j in range(data.d)]
        val = kernels.hl1_partial(np.array(s), np.array(beta), np.array(gam),
                                  xi[0], caps[0])
    elif data.r == 2:
        g1 = [complex(data.gamma[j][0]) for j in range(data.d)]
        g2 = [complex(data.gamma[j][1]) for j in range(data.d)]
        val = kernels.hl2_partial(np.array(s), np.array(beta), np.array(g1),
                                  np.array(g2), xi[0], xi[1], caps[0], caps[1])
    elif data.r == 3:
        g1 = [complex(data.gamma[j][0]) for j in range(data.d)]
        g2 = [complex(data.gamma[j][1]) for j in range(data.d)]
        g3 = [complex(data.gamma[j][2]) for j in range(data.d)]
        val = 0.0 + 0.0j
        x1 = 1.0 + 0.0j
        for m1 in range(caps[0]):
            beta_m = [beta[j] + g1[j] * m1 for j in range(data.d)]
            val += x1 * kernels.hl2_partial(
                np.array(s), np.array(beta_m), np.array(g2), np.array(g3),
                xi[1], xi[2], caps[1], caps[2])
            x1 *= xi[0]
    else:
        raise ParameterError("direct summation implemented for rank <= 3")
    val = complex(val)
    return EvalResult(val, bound + 1e-14 * (abs(val) + 1.0), "direct")


# ---------------------------------------------------------------------------
# Mellin-Barnes continuation (rank 2, triangular)


def mb_shift_order(s1: complex, s2: complex, cfg: EvalConfig) -> int:
    """Smallest contour shift putting the point inside the convergent
    region with margin 1/2."""
    eps = cfg.mb_epsilon
    m1 = math.ceil(eps - s2.real + 0.5)
    m2 = math.ceil(1 + eps - (s1.real + s2.real) + 0.5)
    return max(cfg.mb_M, m1, m2, 1)


def _near_int(x: complex, tol: float = 1e-13):
    if abs(x.imag) > tol:
        return None
    n = round(x.real)
    return n if abs(x.real - n) <= tol * max(1.0, abs(x.real)) else None


def _pole_check(xi_pair, s1: complex, s2: complex):
    total = s1 + s2
    depth = max(0, int(math.ceil(2 - total.real))) + 2
    catalog = singular_hyperplanes(xi_pair, depth)
    scale = 1e-12 * max(1.0, abs(s1), abs(s2))
    if catalog.has_sr_pole() and abs(s2 - 1.0) < scale:
        raise PoleError("s_2 = 1 is a singular hyperplane")
    for v in catalog.sum_values(1):
        if abs(total - v) < scale:
            raise PoleError(f"s_1 + s_2 = {v} is a singular hyperplane")


def ezl2_continued(xi, gamma, s, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Rank-2 triangular zeta continued to (s_1, s_2) off the catalog.

    Built from the shifted-contour representation: a polar term when
    the last twist is 1, residue terms with analytic Lerch values at
    non-positive integers, and a vertical-line integral on
    Re z = M - epsilon evaluated by Gauss-Legendre panels.
    """
    xi1, xi2 = xi
    g1, g2 = float(gamma[0]), float(gamma[1])
    if g1 <= 0 or g2 <= 0:
        raise ParameterError("gamma must be positive for the continuation")
    s1, s2 = complex(s[0]), complex(s[1])
    _pole_check((xi1, xi2), s1, s2)
    xi2_is_one = _is_one_twist(xi2)

    neg_int = _near_int(s2)
    s2_nonpos_int = neg_int is not None and neg_int <= 0
    M = mb_shift_order(s1, s2, cfg)
    if s2_nonpos_int:
        s2 = complex(neg_int)  # snap; the representation is exact there
        M = max(M, -neg_int + 2)

    w = s1 + s2
    total = 0.0 + 0.0j
    bound = 0.0

    def zeta1(arg: complex) -> tuple[complex, float]:
        r = lerch_phi(arg, xi1, cfg)
        scale = cmath.exp(-arg * math.log(g1))
        return scale * r.value, abs(scale) * r.error_bound

    if xi2_is_one:
        v, b = zeta1(w - 1.0)
        x = v / (g2 * (s2 - 1.0))
        total += x
        bound += b / abs(g2 * (s2 - 1.0))

    for k in range(M):
        phik = lerch_at_neg_int(k, xi2)
        if phik == 0:
            continue
        coef = _binom_neg(s2, k) * (g2 ** k) * phik
        if coef == 0:
            continue
        v, b = zeta1(w + k)
        total += coef * v
        bound += abs(coef) * b

    if not s2_nonpos_int:
        z_val, z_bound = _mb_integral(xi1, xi2, g1, g2, s1, s2, M, cfg)
        total += z_val
        bound += z_bound

    return EvalResult(total, bound, "mb")


def _is_one_twist(x) -> bool:
    if isinstance(x, CyclotomicNumber):
        return x.is_one()
    if isinstance(x, tuple):
        return x[0] % x[1] == 0
    return x == 1


def _mb_integral(xi1, xi2, g1: float, g2: float, s1: complex, s2: complex,
                 M: int, cfg: EvalConfig):
    x0 = M - cfg.mb_epsilon
    gs2 = complex(_cgamma(s2))
    nodes, weights = np.polynomial.legendre.leggauss(_GL_NODES)
    tol = cfg.target_tol
    total = 0.0 + 0.0j
    abs_mass = 0.0
    t_lo = 0.0
    last = math.inf
    while t_lo < _MAX_HALFLENGTH:
        # the integrand's poles sit on Re t = 0 (at distance >= epsilon
        # from the contour), so the panels near the origin are graded fine
        width = 0.25 if t_lo < 2.0 else _PANEL_WIDTH
        t_hi = t_lo + width
        contrib = 0.0 + 0.0j
        for sign in (+1.0, -1.0):
            t = sign * (t_lo + 0.5 * width * (nodes + 1.0))
            z = x0 + 1j * t
            gam = _cgamma(s2 + z) * _cgamma(-z) / gs2
            arg = s1 + s2 + z
            z1 = lerch_phi_batch(arg, xi1, cfg) * np.exp(-arg * math.log(g1))
            l2 = lerch_phi_batch(-z, xi2, cfg)
            f = gam * z1 * np.exp(z * math.log(g2)) * l2
            vals = f * (0.5 * width / (2 * math.pi))
            contrib += np.dot(weights, vals)
            abs_mass += float(np.dot(weights, np.abs(vals)))
        total += contrib
        last = abs(contrib)
        if t_hi >= min(cfg.mb_line_halflength, 8.0) and last < tol / 10.0:
            break
        t_lo = t_hi
    else:
        raise AccuracyError(
            "line integral did not decay below tolerance before the "
            f"half-length cap {_MAX_HALFLENGTH}",
            achieved_bound=last,
        )
    # tail beyond the last panel: integrand decays like exp(-pi t)
    decay = math.exp(-math.pi * _PANEL_WIDTH)
    tail_est = last * decay / (1.0 - decay)
    return total, tail_est + 1e-13 * abs_mass


def hl_zeta_continued(data: HLData, s, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Continuation of a rank-2 triangular bundle in the m >= 0
    normalization of the parameter data.

    The nested-from-1 series carries an extra prod_k xi_k relative to
    the m >= 0 series; the factor is divided back out here so values
    are directly comparable with ``hl_zeta_direct``.
    """
    g = data.ezl_gammas()
    if g is None or data.r != 2:
        raise ParameterError("continuation is available for rank-2 triangular data")
    nested = ezl2_continued((data.xi[0], data.xi[1]), (float(g[0]), float(g[1])),
                            s, cfg)
    factor = _xi_complex(data.xi[0]) * _xi_complex(data.xi[1])
    return EvalResult(nested.value / factor, nested.error_bound / abs(factor),
                      nested.method)
