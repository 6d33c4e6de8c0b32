"""Symbolic desingularization layer.

Builds the generating Laurent polynomial G(u, v) attached to a parameter
bundle and a c-matrix, reads off the combination identity expressing the
desingularized zeta-function as a finite sum of shifted ordinary
zeta-functions, and evaluates exact special values at non-positive
integer points from the kernel Taylor coefficients.

Monomial semantics: u_j^l becomes the rising factorial (s_j)_l and
v_j^m becomes the argument shift s_j -> s_j + m.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import ParameterError
from .exact import CyclotomicNumber, f_delta_coeff
from .models import CMatrix, HLData, mt2_data

__all__ = [
    "LaurentSeriesPoly",
    "Term",
    "DesingIdentity",
    "MultiPoly",
    "generating_function",
    "desing_identity",
    "special_value_nonpos",
    "trivial_relation_terms",
    "grouped_coefficients",
    "pochhammer_poly",
    "term_count_bound",
]


class LaurentSeriesPoly:
    """Polynomial in u_1..u_d (exponents >= 0) and v_1..v_d (integer
    exponents), keyed by (l, m) exponent pairs; zero coefficients are
    never stored."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms=None):
        self.d = d
        self.terms = {}
        if terms:
            for key, val in terms.items():
                self._add(key, val)

    def _add(self, key, val):
        cur = self.terms.get(key)
        new = val if cur is None else cur + val
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    @classmethod
    def constant(cls, d: int, value) -> "LaurentSeriesPoly":
        p = cls(d)
        if value != 0:
            p.terms[((0,) * d, (0,) * d)] = value
        return p

    @classmethod
    def monomial(cls, d: int, value, l=None, m=None) -> "LaurentSeriesPoly":
        p = cls(d)
        l = tuple(l) if l is not None else (0,) * d
        m = tuple(m) if m is not None else (0,) * d
        if value != 0:
            p.terms[(l, m)] = value
        return p

    def __add__(self, other):
        if not isinstance(other, LaurentSeriesPoly):
            other = LaurentSeriesPoly.constant(self.d, other)
        out = LaurentSeriesPoly(self.d, dict(self.terms))
        for key, val in other.terms.items():
            out._add(key, val)
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentSeriesPoly):
            other = LaurentSeriesPoly.constant(self.d, other)
        out = LaurentSeriesPoly(self.d, dict(self.terms))
        for key, val in other.terms.items():
            out._add(key, -val)
        return out

    def __rsub__(self, other):
        return LaurentSeriesPoly.constant(self.d, other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentSeriesPoly):
            other = LaurentSeriesPoly.constant(self.d, other)
        out = LaurentSeriesPoly(self.d)
        for (l1, m1), v1 in self.terms.items():
            for (l2, m2), v2 in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(l1, l2)),
                    tuple(a + b for a, b in zip(m1, m2)),
                )
                out._add(key, v1 * v2)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LaurentSeriesPoly) and self.terms == other.terms

    def max_u_degree(self) -> int:
        return max((sum(l) for (l, _m) in self.terms), default=0)

    def __repr__(self):
        return f"LaurentSeriesPoly(d={self.d}, {len(self.terms)} terms)"


@dataclass(frozen=True)
class Term:
    """alpha * prod_j (s_j)_{l_j} * zeta((s_j + m_j))."""

    alpha: object
    l: tuple
    m: tuple


@dataclass(frozen=True)
class DesingIdentity:
    """zeta^des((s_j)) = sum of terms; term order is lexicographic in
    (m, l) so serialization is deterministic."""

    base: HLData
    terms: tuple

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "terms": [_term_to_json(t) for t in self.terms],
        }

    @classmethod
    def from_json(cls, doc) -> "DesingIdentity":
        if isinstance(doc, str):
            doc = json.loads(doc)
        base = HLData.from_json(doc["base"])
        return cls(base, tuple(_term_from_json(t) for t in doc["terms"]))

    def render_text(self, zeta_symbol: str = "Z") -> str:
        return _render(self, zeta_symbol, latex=False)

    def render_latex(self) -> str:
        return _render(self, r"\zeta", latex=True)


def _term_to_json(t: Term) -> dict:
    if isinstance(t.alpha, CyclotomicNumber):
        alpha = {
            "order": t.alpha.order,
            "coeffs": [{"num": c.numerator, "den": c.denominator} for c in t.alpha.coeffs],
        }
    else:
        q = Fraction(t.alpha)
        alpha = {"num": q.numerator, "den": q.denominator}
    return {"alpha": alpha, "l": list(t.l), "m": list(t.m)}


def _term_from_json(doc) -> Term:
    a = doc["alpha"]
    if "order" in a:
        alpha = CyclotomicNumber(
            a["order"], [Fraction(c["num"], c["den"]) for c in a["coeffs"]]
        )
    else:
        alpha = Fraction(a["num"], a["den"])
    return Term(alpha, tuple(doc["l"]), tuple(doc["m"]))


def generating_function(data: HLData, c: CMatrix) -> LaurentSeriesPoly:
    """Product over k of 1 - delta(k) * (1 + sum_j c_kj (v_j^{-1} - beta_j))
    * (sum_j gamma_jk u_j v_j), fully expanded."""
    if not data.is_exact():
        raise ParameterError("generating function needs exact (rational) data")
    d, r = data.d, data.r
    delta = data.delta
    G = LaurentSeriesPoly.constant(d, Fraction(1))
    for k in range(r):
        if not delta[k]:
            continue
        bracket = LaurentSeriesPoly.constant(
            d, Fraction(1) - sum(Fraction(c.c[k][j]) * Fraction(data.beta[j]) for j in range(d))
        )
        for j in range(d):
            if c.c[k][j] != 0:
                m = [0] * d
                m[j] = -1
                bracket = bracket + LaurentSeriesPoly.monomial(d, Fraction(c.c[k][j]), m=m)
        forms = LaurentSeriesPoly(d)
        for j in range(d):
            g = Fraction(data.gamma[j][k])
            if g != 0:
                l = [0] * d
                l[j] = 1
                m = [0] * d
                m[j] = 1
                forms = forms + LaurentSeriesPoly.monomial(d, g, l=l, m=m)
        G = G * (LaurentSeriesPoly.constant(d, Fraction(1)) - bracket * forms)
    return G


def term_count_bound(data: HLData) -> int:
    """Crude sanity bound on the number of identity terms."""
    bound = 1
    for k in range(data.r):
        if data.delta[k]:
            nonzero = sum(1 for j in range(data.d) if data.gamma[j][k] != 0)
            bound *= (data.d + 1) * nonzero + 1
    return bound


def desing_identity(data: HLData, c: CMatrix) -> DesingIdentity:
    """Identity of the desingularized zeta as a finite shifted combination."""
    G = generating_function(data, c)
    terms = [Term(alpha, l, m) for (l, m), alpha in G.terms.items()]
    terms.sort(key=lambda t: (t.m, t.l))
    return DesingIdentity(data, tuple(terms))


def _compositions(total: int, parts: int):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def special_value_nonpos(data: HLData, lam) -> Fraction | CyclotomicNumber:
    """Exact value of zeta^des at s_j = -lambda_j, lambda_j >= 0.

    Finite sum over the splittings m_j + nu_j1 + ... + nu_jr = lambda_j,
    with kernel coefficients F^{n_k}(xi_k) taken at the column sums
    n_k = nu_1k + ... + nu_dk and D_j = sum_k gamma_jk - beta_j.
    Convention 0^0 = 1 throughout (zero gammas with nu = 0 contribute 1).
    """
    lam = tuple(int(x) for x in lam)
    if len(lam) != data.d or any(x < 0 for x in lam):
        raise ParameterError("lambda must be d non-negative integers")
    if not data.is_exact():
        raise ParameterError(
            "exact special values need rational data; use the numeric module"
        )
    d, r = data.d, data.r
    delta = data.delta
    D = [sum(Fraction(data.gamma[j][k]) for k in range(r)) - Fraction(data.beta[j])
         for j in range(d)]
    prefactor = Fraction(1)
    for j in range(d):
        prefactor *= Fraction((-1) ** lam[j]) * math.factorial(lam[j])

    # per-j splittings (m_j, nu_j1..nu_jr); prune zero gammas with nu > 0
    per_j = []
    for j in range(d):
        opts = []
        for comp in _compositions(lam[j], r + 1):
            m_j, nus = comp[0], comp[1:]
            if any(data.gamma[j][k] == 0 and nus[k] > 0 for k in range(r)):
                continue
            if D[j] == 0 and m_j > 0:
                continue
            w = Fraction(D[j]) ** m_j / math.factorial(m_j) if m_j else Fraction(1)
            for k in range(r):
                if nus[k]:
                    w *= Fraction(data.gamma[j][k]) ** nus[k] / math.factorial(nus[k])
            opts.append((nus, w))
        per_j.append(opts)

    total = Fraction(0)
    for choice in product(*per_j):
        weight = prefactor
        for _nus, w in choice:
            weight *= w
        n = [sum(choice[j][0][k] for j in range(d)) for k in range(r)]
        fprod = weight
        for k in range(r):
            fprod = fprod * f_delta_coeff(n[k], 1 if delta[k] else data.xi[k])
        total = total + fprod
    if isinstance(total, CyclotomicNumber) and total.is_rational():
        return total.rational_value()
    return total


def trivial_relation_terms(data: HLData, c_family) -> dict[str, tuple]:
    """Formal relations (right-hand side zero) hidden in the c-freedom of
    the Mordell-Tornheim bundle: the a-, b- and ab-coefficients of the
    generating function.  Each vanishes identically (provable by partial
    fractions; here they are verified numerically elsewhere)."""
    ref, _family = mt2_data()
    if data != ref:
        raise ParameterError("trivial relations are shipped for the MT2 bundle only")

    def g(a, b):
        return generating_function(data, c_family(a, b))

    g00, g10, g01, g11 = g(0, 0), g(1, 0), g(0, 1), g(1, 1)
    ga = g10 - g00
    gb = g01 - g00
    gab = g11 - g10 - g01 + g00

    def to_terms(poly):
        terms = [Term(alpha, l, m) for (l, m), alpha in poly.terms.items()]
        terms.sort(key=lambda t: (t.m, t.l))
        return tuple(terms)

    return {"a": to_terms(ga), "b": to_terms(gb), "ab": to_terms(gab)}


# ---------------------------------------------------------------------------
# rendering / symbolic comparison helpers


class MultiPoly:
    """Sparse polynomial in s_1..s_d with Fraction coefficients."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs=None):
        self.d = d
        self.coeffs = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.coeffs[tuple(e)] = v

    @classmethod
    def constant(cls, d: int, v) -> "MultiPoly":
        return cls(d, {(0,) * d: Fraction(v)})

    @classmethod
    def var(cls, d: int, j: int) -> "MultiPoly":
        e = [0] * d
        e[j] = 1
        return cls(d, {tuple(e): Fraction(1)})

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.d, other)
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            nv = out.get(e, Fraction(0)) + v
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
        return MultiPoly(self.d, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.d, {e: -v for e, v in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.d, other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.constant(self.d, other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.d, other)
        out = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nv = out.get(e, Fraction(0)) + v1 * v2
                if nv:
                    out[e] = nv
                else:
                    out.pop(e, None)
        return MultiPoly(self.d, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.d == other.d and self.coeffs == other.coeffs

    def evaluate(self, s):
        total = 0
        for e, v in self.coeffs.items():
            term = complex(v)
            for j, k in enumerate(e):
                if k:
                    term *= s[j] ** k
            total += term
        return total

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            v = self.coeffs[e]
            mono = "*".join(
                f"s{j+1}" + (f"^{k}" if k > 1 else "")
                for j, k in enumerate(e) if k
            )
            parts.append(f"({v})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def pochhammer_poly(d: int, j: int, l: int) -> MultiPoly:
    """(s_j)_l = s_j (s_j + 1) ... (s_j + l - 1) as a MultiPoly."""
    out = MultiPoly.constant(d, 1)
    s = MultiPoly.var(d, j)
    for i in range(l):
        out = out * (s + i)
    return out


def grouped_coefficients(terms, d: int) -> dict[tuple, MultiPoly]:
    """Collect terms by shift vector m; coefficients become polynomials in s.

    Cyclotomic alphas must be rational for this symbolic view.
    """
    grouped: dict[tuple, MultiPoly] = {}
    for t in terms:
        alpha = t.alpha
        if isinstance(alpha, CyclotomicNumber):
            alpha = alpha.rational_value()
        poly = MultiPoly.constant(d, alpha)
        for j, l in enumerate(t.l):
            if l:
                poly = poly * pochhammer_poly(d, j, l)
        grouped[t.m] = grouped.get(t.m, MultiPoly(d)) + poly
    return {m: p for m, p in grouped.items() if p.coeffs}


def _render(identity: DesingIdentity, zeta_symbol: str, latex: bool) -> str:
    d = identity.base.d
    grouped = grouped_coefficients(identity.terms, d)
    parts = []
    for m in sorted(grouped, reverse=True):
        poly = grouped[m]
        args = ", ".join(
            f"s_{j+1}" + (f"{shift:+d}" if shift else "")
            for j, shift in enumerate(m)
        )
        if latex:
            parts.append(rf"\left({poly}\right){zeta_symbol}({args})")
        else:
            parts.append(f"({poly}) {zeta_symbol}({args})")
    joiner = " + " if not latex else " + "
    return joiner.join(parts)
