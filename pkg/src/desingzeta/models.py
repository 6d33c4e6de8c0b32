"""Parameter bundles for the zeta families and their standard constructors.

An ``HLData`` collects the data of a multiple zeta-function of
Hurwitz-Lerch type: d linear forms beta_j + sum_k gamma_jk m_k raised to
-s_j, with unit twists xi_k on r summation indices m_k >= 0.  The
Euler-Zagier-Lerch family embeds via a triangular gamma matrix, the
Mordell-Tornheim double zeta and rank-2 root systems via explicit
pairing data.

Also here: the exact solver for the linear-combination constants c_mj
with sum_j c_mj gamma_jk = delta_mk, and the singular-hyperplane
catalog of the triangular family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import ParameterError, UnsupportedFamilyError
from .exact import CyclotomicNumber, root_of_unity

__all__ = [
    "HLData",
    "CMatrix",
    "SingularHyperplane",
    "SingularityCatalog",
    "ezl_data",
    "mt2_data",
    "root_system_rank2_data",
    "solve_c_matrix",
    "singular_hyperplanes",
    "builtin_data",
    "BUILTIN_NAMES",
]


def _normalize_xi(x):
    """Roots of unity become CyclotomicNumbers; other unit-disc values stay complex."""
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        if x == 1:
            return CyclotomicNumber.one()
        if x == -1:
            return root_of_unity(2, 1)
        raise ParameterError(f"exact twist {x} is not a root of unity")
    if isinstance(x, tuple) and len(x) == 2:
        # (power, order) pair, matching the numeric layer's convention
        return root_of_unity(int(x[1]), int(x[0]))
    z = complex(x)
    if abs(z) > 1 + 1e-12:
        raise ParameterError(f"twist {x!r} must satisfy |xi| <= 1")
    return z


def _xi_is_one(x) -> bool:
    if isinstance(x, CyclotomicNumber):
        return x.is_one()
    return x == 1  # exact equality also in the float case: delta is a branch


def _re(x) -> float:
    if isinstance(x, Fraction):
        return float(x)
    return complex(x).real


@dataclass(frozen=True)
class HLData:
    """Parameter bundle (d, r, (xi_k), (gamma_jk), (beta_j))."""

    d: int
    r: int
    xi: tuple
    gamma: tuple
    beta: tuple

    def __post_init__(self):
        if self.d < 1 or self.r < 1:
            raise ParameterError("need d >= 1 and r >= 1")
        if len(self.xi) != self.r:
            raise ParameterError("xi must have length r")
        if len(self.gamma) != self.d or any(len(row) != self.r for row in self.gamma):
            raise ParameterError("gamma must be a d x r matrix")
        if len(self.beta) != self.d:
            raise ParameterError("beta must have length d")
        object.__setattr__(self, "xi", tuple(_normalize_xi(x) for x in self.xi))
        object.__setattr__(self, "gamma", tuple(tuple(row) for row in self.gamma))
        object.__setattr__(self, "beta", tuple(self.beta))
        for j, row in enumerate(self.gamma):
            if any(_re(g) < 0 for g in row):
                raise ParameterError(f"Re gamma[{j}][k] must be >= 0")
            if not any(_re(g) > 0 for g in row):
                raise ParameterError(f"row {j} of gamma needs one Re gamma > 0")
        if any(_re(b) <= 0 for b in self.beta):
            raise ParameterError("Re beta_j must be > 0")

    @property
    def delta(self) -> tuple[int, ...]:
        """delta(k) = 1 iff xi_k = 1 (exact branch, never a numeric limit)."""
        return tuple(1 if _xi_is_one(x) else 0 for x in self.xi)

    def is_exact(self) -> bool:
        return (
            all(isinstance(x, CyclotomicNumber) for x in self.xi)
            and all(isinstance(g, (int, Fraction)) for row in self.gamma for g in row)
            and all(isinstance(b, (int, Fraction)) for b in self.beta)
        )

    def ezl_gammas(self) -> Optional[tuple]:
        """The (gamma_k) of a triangular Euler-Zagier-Lerch bundle, else None."""
        if self.d != self.r:
            return None
        diag = tuple(self.gamma[k][k] for k in range(self.r))
        for j in range(self.d):
            for k in range(self.r):
                expect = diag[k] if j >= k else 0
                if self.gamma[j][k] != expect:
                    return None
        for j in range(self.d):
            if self.beta[j] != sum(diag[: j + 1]):
                return None
        return diag

    # -- serialization -------------------------------------------------
    def to_json(self, c: "CMatrix | None" = None) -> dict:
        def enc_xi(x):
            if isinstance(x, CyclotomicNumber):
                from .exact import as_unit_root_exponent

                k, n = as_unit_root_exponent(x)
                return {"order": n, "power": k}
            return {"re": complex(x).real, "im": complex(x).imag}

        doc = {
            "d": self.d,
            "r": self.r,
            "xi": [enc_xi(x) for x in self.xi],
            "gamma": [[_enc_scalar(g) for g in row] for row in self.gamma],
            "beta": [_enc_scalar(b) for b in self.beta],
        }
        if c is not None:
            doc["c"] = [[_enc_scalar(v) for v in row] for row in c.c]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "HLData":
        xi = []
        for e in doc["xi"]:
            if "order" in e:
                xi.append(root_of_unity(int(e["order"]), int(e["power"])))
            else:
                xi.append(complex(e["re"], e.get("im", 0.0)))
        gamma = tuple(tuple(_dec_scalar(g) for g in row) for row in doc["gamma"])
        beta = tuple(_dec_scalar(b) for b in doc["beta"])
        return cls(int(doc["d"]), int(doc["r"]), tuple(xi), gamma, beta)


def _enc_scalar(v):
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    z = complex(v)
    return {"re": z.real, "im": z.imag}


def _dec_scalar(v):
    if isinstance(v, bool):
        raise ParameterError("boolean is not a scalar")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v).limit_denominator(10**12)
    if isinstance(v, dict):
        return complex(v["re"], v.get("im", 0.0))
    raise ParameterError(f"cannot decode scalar {v!r}")


@dataclass(frozen=True)
class CMatrix:
    """Constants c_mj with sum_j c_mj gamma_jk = delta_mk, plus the derived
    c_m0 = 1 - sum_j c_mj beta_j."""

    c: tuple
    c0: tuple

    @classmethod
    def for_data(cls, data: HLData, rows) -> "CMatrix":
        rows = tuple(tuple(Fraction(v) if isinstance(v, int) else v for v in row) for row in rows)
        if len(rows) != data.r or any(len(row) != data.d for row in rows):
            raise ParameterError("c must be an r x d matrix")
        for m in range(data.r):
            for k in range(data.r):
                acc = sum(rows[m][j] * data.gamma[j][k] for j in range(data.d))
                if acc != (1 if m == k else 0):
                    raise ParameterError(
                        f"c violates sum_j c[{m}][j] gamma[j][{k}] = delta"
                    )
        c0 = tuple(1 - sum(rows[m][j] * data.beta[j] for j in range(data.d))
                   for m in range(data.r))
        return cls(rows, c0)


def ezl_data(xi, gamma) -> HLData:
    """Triangular embedding of the Euler-Zagier-Lerch family.

    Index m_k runs from 1 in the nested series; shifting to m_k >= 0
    makes beta_j the j-th partial sum of the gammas.
    """
    xi = tuple(xi)
    gamma = tuple(Fraction(g) if isinstance(g, int) else g for g in gamma)
    r = len(xi)
    if len(gamma) != r:
        raise ParameterError("xi and gamma must have equal length")
    if any(_re(g) <= 0 for g in gamma):
        raise ParameterError("Re gamma_j must be > 0")
    rows = tuple(tuple(gamma[k] if j >= k else 0 for k in range(r)) for j in range(r))
    beta = tuple(sum(gamma[: j + 1]) for j in range(r))
    return HLData(r, r, xi, rows, beta)


def mt2_data() -> tuple[HLData, Callable[[Fraction, Fraction], CMatrix]]:
    """Mordell-Tornheim double zeta data plus its two-parameter c-family."""
    data = HLData(
        3,
        2,
        (1, 1),
        ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))),
        (Fraction(1), Fraction(1), Fraction(2)),
    )

    def family(a=0, b=0) -> CMatrix:
        a, b = Fraction(a), Fraction(b)
        return CMatrix.for_data(data, ((a + 1, a, -a), (b, b + 1, -b)))

    return data, family


def root_system_rank2_data(pairings, xi) -> tuple[HLData, CMatrix]:
    """Root-system data from a pairing matrix <alpha^vee, lambda_k>.

    Rows are positive roots (fundamental roots first, forming the
    identity block); beta_alpha = <alpha^vee, rho> is the row sum since
    rho is the sum of the fundamental weights.  The canonical constants
    are c = (I_r  0).
    """
    pairings = tuple(tuple(Fraction(v) if isinstance(v, int) else v for v in row)
                     for row in pairings)
    xi = tuple(xi)
    r = len(xi)
    d = len(pairings)
    if d < r:
        raise ParameterError("need at least r positive roots")
    for m in range(r):
        for k in range(r):
            if pairings[m][k] != (1 if m == k else 0):
                raise ParameterError(
                    "first r rows of the pairing matrix must be the identity "
                    "(fundamental roots first)"
                )
    beta = tuple(sum(row) for row in pairings)
    data = HLData(d, r, xi, pairings, beta)
    rows = tuple(tuple(Fraction(1 if j == m else 0) for j in range(d)) for m in range(r))
    return data, CMatrix.for_data(data, rows)


def solve_c_matrix(data: HLData) -> CMatrix:
    """One exact solution of the underdetermined system, minimal support.

    Gaussian elimination with column pivoting over Fractions; free
    columns are set to zero.  Callers may override with any CMatrix:
    the combination identity holds for every solution.
    """
    if not all(isinstance(g, (int, Fraction)) for row in data.gamma for g in row):
        raise ParameterError("exact c-matrix solving needs rational gamma")
    r, d = data.r, data.d
    # rows of the system: M[k][j] = gamma[j][k]
    M = [[Fraction(data.gamma[j][k]) for j in range(d)] for k in range(r)]
    rhs = [[Fraction(1 if k == m else 0) for m in range(r)] for k in range(r)]
    pivots = []
    row = 0
    for col in range(d):
        piv = next((i for i in range(row, r) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        rhs[row], rhs[piv] = rhs[piv], rhs[row]
        inv = 1 / M[row][col]
        M[row] = [v * inv for v in M[row]]
        rhs[row] = [v * inv for v in rhs[row]]
        for i in range(r):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
                rhs[i] = [a - f * b for a, b in zip(rhs[i], rhs[row])]
        pivots.append(col)
        row += 1
        if row == r:
            break
    if row < r:
        raise ParameterError(
            "assumption unsatisfiable: gamma has column rank "
            f"{row} < r = {r}"
        )
    rows = []
    for m in range(r):
        x = [Fraction(0)] * d
        for i, col in enumerate(pivots):
            x[col] = rhs[i][m]
        rows.append(tuple(x))
    return CMatrix.for_data(data, tuple(rows))


@dataclass(frozen=True)
class SingularHyperplane:
    """One family of singular hyperplanes.

    ``case`` in {"I", ..., "V"}; the affine condition is
    s_j + ... + s_r = v for each v in ``values`` ("V" means s_r = v).
    """

    case: str
    start_index: int
    values: tuple

    @property
    def single_index(self) -> bool:
        return self.case == "V"

    def describe(self, r: int) -> str:
        var = (
            f"s_{self.start_index}"
            if self.single_index or self.start_index == r
            else f"s_{self.start_index}+...+s_{r}"
        )
        vals = ", ".join(str(v) for v in self.values)
        return f"[{self.case}] {var} in {{{vals}}}"


@dataclass(frozen=True)
class SingularityCatalog:
    r: int
    hyperplanes: tuple

    def is_empty(self) -> bool:
        return not self.hyperplanes

    def sum_values(self, start_index: int):
        """All catalogued constants for s_{start_index}+...+s_r."""
        out = set()
        for h in self.hyperplanes:
            if not h.single_index and h.start_index == start_index:
                out.update(h.values)
        return sorted(out, reverse=True)

    def has_sr_pole(self) -> bool:
        return any(h.single_index for h in self.hyperplanes)


def _c_count(xi, j: int) -> int:
    """Number of h in [j, r] with xi_h = 1 (1-based)."""
    return sum(1 for h in range(j - 1, len(xi)) if _xi_is_one(xi[h]))


def _xi_is_minus_one(x) -> bool:
    if isinstance(x, CyclotomicNumber):
        return x == Fraction(-1)
    return x == -1


def singular_hyperplanes(xi, l_max: int) -> SingularityCatalog:
    """Catalog of true singular hyperplanes of the triangular family.

    Only the twists matter (the list is independent of the gammas);
    all of them must lie on the unit circle.
    """
    if l_max < 0:
        raise ParameterError("l_max must be non-negative")
    xi = tuple(_normalize_xi(x) for x in xi)
    for x in xi:
        if isinstance(x, CyclotomicNumber):
            continue
        if abs(abs(complex(x)) - 1.0) > 1e-12:
            raise UnsupportedFamilyError(
                "singularity catalog covers only |xi_j| = 1"
            )
    r = len(xi)
    planes = []
    for j in range(1, r - 1):  # case I: 1 <= j <= r - 2
        if _xi_is_one(xi[j - 1]):
            c = _c_count(xi, j)
            planes.append(
                SingularHyperplane("I", j, tuple(c - l for l in range(l_max + 1)))
            )
    if r >= 2 and _xi_is_one(xi[r - 2]):
        j = r - 1
        if _xi_is_one(xi[r - 1]):
            vals = (2, 1) + tuple(-2 * l for l in range(l_max + 1))
            planes.append(SingularHyperplane("II", j, vals))
        elif _xi_is_minus_one(xi[r - 1]):
            vals = (1,) + tuple(-2 * l for l in range(l_max + 1))
            planes.append(SingularHyperplane("III", j, vals))
        else:
            planes.append(
                SingularHyperplane("IV", j, tuple(1 - l for l in range(l_max + 1)))
            )
    if _xi_is_one(xi[r - 1]):
        planes.append(SingularHyperplane("V", r, (1,)))
    return SingularityCatalog(r, tuple(planes))


BUILTIN_NAMES = ("ez2", "ez3", "mt2", "a2")


def builtin_data(name: str) -> tuple[HLData, CMatrix]:
    """Named bundles used by the CLI; the returned c-matrix is canonical."""
    if name == "ez2":
        data = ezl_data((1, 1), (1, 1))
        return data, solve_c_matrix(data)
    if name == "ez3":
        data = ezl_data((1, 1, 1), (1, 1, 1))
        return data, solve_c_matrix(data)
    if name == "mt2":
        data, family = mt2_data()
        return data, family(0, 0)
    if name == "a2":
        return root_system_rank2_data(((1, 0), (0, 1), (1, 1)), (1, 1))
    raise ParameterError(f"unknown builtin {name!r}; choose from {BUILTIN_NAMES}")
