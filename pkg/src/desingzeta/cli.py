"""Command-line front end.

Subcommands: eval, desing-identity, special, padic, singularities,
verify, table.  Data goes to stdout (JSON, CSV or text), diagnostics to
stderr.  Exit codes: 2 parameter error, 3 pole/region/backend error,
4 accuracy failure, 5 internal rationality failure.

Scalar syntax: complex numbers as "re+imi" (e.g. "1.5+0.5i"), exact
rationals as "p/q".  The environment variable DESINGZETA_TOL overrides
the default accuracy target.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

import numpy as np

from .desing import desing_identity, special_value_nonpos, trivial_relation_terms
from .errors import DesingZetaError, ExactnessError, ParameterError
from .exact import (
    CyclotomicNumber,
    bernoulli,
    f_delta_coeff,
    frobenius_euler,
    lerch_neg_coeff,
)
from .models import (
    BUILTIN_NAMES,
    HLData,
    builtin_data,
    ezl_data,
    mt2_data,
    root_system_rank2_data,
    singular_hyperplanes,
    solve_c_matrix,
)
from .numeric import (
    DEFAULT_CONFIG,
    EvalConfig,
    ez2_des,
    ez2_des_exact,
    ezl2_continued,
    evaluate_identity,
    hl_zeta_direct,
    riemann_zeta,
    verify_trivial_relations,
)
from .numeric.multizeta import hl_zeta_continued
from .padic import (
    PadicLRequest,
    enumeration_count,
    kubota_leopoldt_check,
    padic_L_nonpos,
)

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i?\s*$"
)


def parse_complex(text: str) -> complex:
    text = text.strip()
    if text.endswith("i"):
        body = text[:-1]
        m = re.match(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
                     r"([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)$", body)
        if m:
            return complex(float(m.group(1)), float(m.group(2)))
        try:
            return complex(0.0, float(body) if body not in ("", "+", "-")
                           else float(body + "1"))
        except ValueError as exc:
            raise ParameterError(f"cannot parse complex number {text!r}") from exc
    if "/" in text:
        return complex(float(Fraction(text)))
    try:
        return complex(float(text))
    except ValueError as exc:
        raise ParameterError(f"cannot parse complex number {text!r}") from exc


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"cannot parse rational {text!r}") from exc


def parse_xi_token(token: str):
    """Unit-circle values: 1, -1, i, -i, or an angle fraction k/n
    meaning exp(2 pi i k/n)."""
    token = token.strip()
    if token == "1":
        return 1
    if token == "-1":
        return Fraction(-1)
    if token == "i":
        return (1, 4)
    if token == "-i":
        return (3, 4)
    if "/" in token:
        q = parse_rational(token)
        return (q.numerator % q.denominator, q.denominator)
    raise ParameterError(
        f"twist {token!r} not recognised (use 1, -1, i, -i, or k/n)"
    )


def _load_data(spec: str) -> tuple[HLData, object]:
    if spec in BUILTIN_NAMES:
        return builtin_data(spec)
    if not os.path.exists(spec):
        raise ParameterError(
            f"unknown builtin or missing file {spec!r}; builtins: "
            f"{', '.join(BUILTIN_NAMES)}"
        )
    try:
        with open(spec, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParameterError(f"cannot read data file {spec!r}: {exc}") from exc
    data = HLData.from_json(doc)
    if "c" in doc:
        from .models import CMatrix

        rows = tuple(tuple(Fraction(v) if isinstance(v, (int, str)) else v
                           for v in row) for row in doc["c"])
        return data, CMatrix.for_data(data, rows)
    return data, solve_c_matrix(data)


def _config(args) -> EvalConfig:
    tol = getattr(args, "tol", None)
    if tol is None:
        tol = float(os.environ.get("DESINGZETA_TOL", DEFAULT_CONFIG.target_tol))
    kw = {"target_tol": tol}
    if getattr(args, "cap", None):
        kw["direct_sum_cap"] = args.cap
    if getattr(args, "em_terms", None):
        kw["em_terms"] = args.em_terms
    return DEFAULT_CONFIG.with_(**kw)


def _emit(doc, args, text_fn=None):
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    elif fmt == "csv":
        raise ParameterError("csv output is only available for 'table'")
    else:
        print(text_fn(doc) if text_fn else json.dumps(doc, indent=2))


def _frac_doc(q) -> dict:
    if isinstance(q, CyclotomicNumber):
        return {
            "order": q.order,
            "coeffs": [{"num": c.numerator, "den": c.denominator} for c in q.coeffs],
        }
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def cmd_eval(args) -> int:
    cfg = _config(args)
    data, cmatrix = _load_data(args.data)
    point = tuple(parse_complex(tok) for tok in args.at.split(","))
    if len(point) != data.d:
        raise ParameterError(f"--at needs {data.d} components for this data")
    if args.des:
        if data.r == 2 and data.ezl_gammas() == (1, 1) and all(data.delta):
            res = ez2_des(point[0], point[1], cfg)
        else:
            ident = desing_identity(data, cmatrix)
            res = evaluate_identity(ident, point, cfg)
    else:
        try:
            res = hl_zeta_direct(data, point, cfg)
        except DesingZetaError:
            if data.r == 2 and data.ezl_gammas() is not None:
                res = hl_zeta_continued(data, point, cfg)
            else:
                raise
    _emit(res.to_json(), args,
          lambda d: f"{d['value']['re']:+.15g}{d['value']['im']:+.15g}i  "
                    f"(error_bound {d['error_bound']:.2e}, {d['method']})")
    return 0


def cmd_desing_identity(args) -> int:
    data, cmatrix = _load_data(args.data)
    ident = desing_identity(data, cmatrix)
    doc = ident.to_json()
    doc["text"] = ident.render_text()
    doc["latex"] = ident.render_latex()
    _emit(doc, args, lambda d: d["text"])
    return 0


def cmd_special(args) -> int:
    data, _ = _load_data(args.data)
    lam = tuple(int(x) for x in args.lam.split(","))
    value = special_value_nonpos(data, lam)
    _emit(_frac_doc(value), args,
          lambda d: f"{d['num']}/{d['den']}" if "num" in d else json.dumps(d))
    return 0


def cmd_padic(args) -> int:
    n = tuple(int(x) for x in args.n.split(","))
    if args.r is not None and args.r != len(n):
        raise ParameterError("--r disagrees with the length of --n")
    req = PadicLRequest(n, args.c, args.p)
    value = padic_L_nonpos(req)
    doc = {
        "r": req.r,
        "n": list(req.n),
        "c": req.c,
        "p": req.p,
        "value": _frac_doc(value),
        "terms_enumerated": enumeration_count(req.r, req.c, req.p),
    }
    if args.kl_check:
        if req.r != 1:
            raise ParameterError("--kl-check applies to depth 1 only")
        ok, lhs, rhs = kubota_leopoldt_check(req.n[0], req.c, req.p)
        doc["kl_check"] = {"ok": ok, "lhs": _frac_doc(lhs), "rhs": _frac_doc(rhs)}
        if not ok:
            _emit(doc, args)
            return 1
    _emit(doc, args,
          lambda d: f"L_p({', '.join(str(-v) for v in d['n'])}; c={d['c']}, "
                    f"p={d['p']}) = {d['value']['num']}/{d['value']['den']}")
    return 0


def cmd_singularities(args) -> int:
    xi = tuple(parse_xi_token(tok) for tok in args.xi.split(","))
    catalog = singular_hyperplanes(xi, args.lmax)
    doc = {
        "r": catalog.r,
        "empty": catalog.is_empty(),
        "hyperplanes": [
            {
                "case": h.case,
                "start_index": h.start_index,
                "single_index": h.single_index,
                "values": [int(v) for v in h.values],
            }
            for h in catalog.hyperplanes
        ],
    }
    _emit(doc, args, lambda d: "entire (no singular hyperplanes)" if d["empty"]
          else "\n".join(h.describe(catalog.r) for h in catalog.hyperplanes))
    return 0


def _grid_range(spec: str) -> list[int]:
    m = re.match(r"^\s*(-?\d+)\.\.(-?\d+)\s*$", spec)
    if not m:
        raise ParameterError(f"grid range {spec!r} must look like -3..3")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ParameterError("empty grid range")
    return list(range(lo, hi + 1))


def cmd_table(args) -> int:
    cfg = _config(args)
    data, _ = _load_data(args.data)
    if not (args.des and data.r == 2 and data.ezl_gammas() == (1, 1)
            and all(data.delta)):
        raise ParameterError("tables are provided for --des with the plain "
                             "rank-2 Euler-Zagier data")
    ranges = [
        _grid_range(tok) for tok in args.grid.split(",")
    ]
    if len(ranges) != 2:
        raise ParameterError("--grid needs two ranges, e.g. -3..3,-3..3")
    rows = [["s1\\s2"] + [str(v) for v in ranges[1]]]
    for a in ranges[0]:
        row = [str(a)]
        for b in ranges[1]:
            try:
                q = ez2_des_exact(a, b)
                row.append(f"{q.numerator}/{q.denominator} [exact]")
            except ExactnessError:
                r = ez2_des(float(a), float(b), cfg)
                row.append(f"{r.value.real:.12g} [{r.method}]")
        rows.append(row)
    if getattr(args, "format", "csv") == "json":
        print(json.dumps({"rows": rows}, indent=2))
    else:
        for row in rows:
            print(",".join(row))
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _suite_paper_values(cfg: EvalConfig):
    from .exact import root_of_unity

    minus_one = Fraction(-1)
    checks = []

    def check(name, got, expect, tol=0.0):
        if tol == 0.0:
            ok = got == expect
        else:
            ok = abs(got - expect) < tol
        checks.append((name, ok, got, expect))

    check("bernoulli constant term", bernoulli(0), Fraction(1))
    check("kernel coefficient at 1 is B_(n+1)", f_delta_coeff(3, 1), bernoulli(4))
    for k in (0, 2, 4, 6):
        expect = Fraction(1, 2) if k == 0 else Fraction(0)
        check(f"alternating coefficient k={k}", lerch_neg_coeff(k, minus_one), expect)
    check("first alternating Frobenius-Euler number",
          frobenius_euler(1, minus_one), Fraction(-1, 2))
    check("kernel coefficient at -1", f_delta_coeff(0, minus_one),
          Fraction(1, 2))
    d2, c2 = builtin_data("ez2")
    ident = desing_identity(d2, c2)
    check("rank-2 identity has three shifts",
          len({t.m for t in ident.terms}), 3)
    from .desing import MultiPoly, grouped_coefficients

    s1, s2 = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    check("rank-2 identity coefficients",
          grouped_coefficients(ident.terms, 2),
          {(0, 0): (s1 - 1) * (s2 - 1), (-1, 1): s2 * (s2 + 1 - s1),
           (-2, 2): -1 * (s2 * (s2 + 1))})
    d3 = ezl_data((1, 1, 1), (Fraction(2), Fraction(3), Fraction(5)))
    check("triple-bundle canonical constants", solve_c_matrix(d3).c,
          ((Fraction(1, 2), 0, 0), (Fraction(-1, 3), Fraction(1, 3), 0),
           (0, Fraction(-1, 5), Fraction(1, 5))))
    da, ca = root_system_rank2_data(((1, 0), (0, 1), (1, 1)), (1, 1))
    mtd, mtf = mt2_data()
    check("rank-2 root system equals the MT bundle", (da, ca.c),
          (mtd, mtf(0, 0).c))
    rels = trivial_relation_terms(mtd, mtf)
    check("vanishing-relation term counts",
          (len(grouped_coefficients(rels["a"], 3)),
           len(grouped_coefficients(rels["ab"], 3))), (8, 13))
    check("special value at (0,0)", special_value_nonpos(d2, (0, 0)),
          Fraction(1, 4))
    check("special value at (1,1)", special_value_nonpos(d2, (1, 1)),
          Fraction(1, 36))
    check("special value at (0,2)", special_value_nonpos(d2, (0, 2)),
          Fraction(1, 18))
    check("entire value at (1,-3)", ez2_des_exact(1, -3), Fraction(1, 20))
    check("entire value at (-1,1)", ez2_des_exact(-1, 1), Fraction(1, 8))
    check("entire value at (1,1)", ez2_des_exact(1, 1), Fraction(1, 2))
    z2 = riemann_zeta(2.0, cfg).value
    z3 = riemann_zeta(3.0, cfg).value
    z4 = riemann_zeta(4.0, cfg).value
    check("entire value at (2,1)", ez2_des(2.0, 1.0, cfg).value,
          2 * z3 - z2, 1e-9)
    check("entire value at (3,1)", ez2_des(3.0, 1.0, cfg).value,
          2 * z3 - 1.25 * z4, 1e-9)
    check("entire value at (-1,2)", ez2_des(-1.0, 2.0, cfg).value,
          5 / 12 - z2 / 6, 1e-9)
    c32 = ezl2_continued((1, 1), (1, 1), (2.5, 0.0), cfg).value
    check("second argument 0 closed form", c32,
          -riemann_zeta(1.5, cfg).value - riemann_zeta(2.5, cfg).value / 2, 1e-9)
    cat = singular_hyperplanes((1, 1), 3)
    check("catalog of the plain rank-2 family", cat.sum_values(1),
          [2, 1, 0, -2, -4, -6])
    i4 = root_of_unity(4, 1)
    check("entire family has empty catalog",
          singular_hyperplanes((i4, i4), 3).is_empty(), True)
    mt, fam = mt2_data()
    check("MT c-matrix at (0,0)", fam(0, 0).c,
          ((Fraction(1), Fraction(0), Fraction(0)),
           (Fraction(0), Fraction(1), Fraction(0))))
    ok, lhs, rhs = kubota_leopoldt_check(3, 2, 3)
    check("depth-1 p-adic consistency n=3 (2,3)", lhs, rhs)
    del ok
    check("p-adic value at 0 vanishes",
          padic_L_nonpos(PadicLRequest((0,), 3, 5)), Fraction(0))
    return checks


def _suite_trivial_relations(cfg: EvalConfig):
    rng = np.random.default_rng(20240817)
    checks = []
    for idx in range(3):
        pt = tuple(rng.uniform(5.0, 6.5) for _ in range(3))
        r1, r2 = verify_trivial_relations(pt, cfg)
        checks.append((f"relation residuals at point {idx}",
                       max(r1, r2) < 1e-8, max(r1, r2), "< 1e-8"))
    return checks


def _suite_oracle(cfg: EvalConfig):
    d2, _ = builtin_data("ez2")
    rng = np.random.default_rng(7)
    checks = []
    worst = 0.0
    for _ in range(12):
        s1, s2 = rng.uniform(2, 5), rng.uniform(2, 5)
        a = hl_zeta_direct(d2, (s1, s2), cfg).value
        b = ezl2_continued((1, 1), (1, 1), (s1, s2), cfg).value
        worst = max(worst, abs(a - b))
    checks.append(("direct vs continued, 12 points", worst < 1e-9, worst, "< 1e-9"))
    return checks


def cmd_verify(args) -> int:
    cfg = _config(args)
    suites = {
        "paper-values": _suite_paper_values,
        "trivial-relations": _suite_trivial_relations,
        "oracle": _suite_oracle,
    }
    if args.suite not in suites:
        raise ParameterError(f"unknown suite {args.suite!r}; choose from "
                             f"{sorted(suites)}")
    checks = suites[args.suite](cfg)
    failures = 0
    for name, ok, got, expect in checks:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if not ok:
            line += f"  (got {got!r}, expected {expect!r})"
            failures += 1
        print(line)
    print(f"{len(checks) - failures}/{len(checks)} checks passed",
          file=sys.stderr)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="desingzeta",
        description="desingularized multiple zeta-functions: identities, "
                    "special values, numeric evaluation, p-adic L-values",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, data=True):
        if data:
            p.add_argument("--data", required=True,
                           help=f"builtin name {BUILTIN_NAMES} or JSON path")
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--tol", type=float, default=None,
                       help="accuracy target (default from DESINGZETA_TOL)")
        p.add_argument("--cap", type=int, default=None,
                       help="per-index cap for direct sums")
        p.add_argument("--em-terms", type=int, default=None)

    p = sub.add_parser("eval", help="evaluate a zeta or its desingularization")
    common(p)
    p.add_argument("--at", required=True, help="comma-separated point, re+imi")
    p.add_argument("--des", action="store_true",
                   help="evaluate the desingularized function")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("desing-identity",
                       help="emit the combination identity (JSON/text/LaTeX)")
    common(p)
    p.set_defaults(fn=cmd_desing_identity)

    p = sub.add_parser("special",
                       help="exact value at a non-positive integer point")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="comma-separated lambda_j >= 0 (point is -lambda)")
    p.set_defaults(fn=cmd_special)

    p = sub.add_parser("padic", help="p-adic multiple L-value at -n")
    common(p, data=False)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--n", required=True, help="comma-separated n_j >= 0")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--kl-check", action="store_true")
    p.set_defaults(fn=cmd_padic)

    p = sub.add_parser("singularities", help="singular hyperplane catalog")
    common(p, data=False)
    p.add_argument("--xi", required=True,
                   help="comma-separated twists: 1, -1, i, -i, or k/n")
    p.add_argument("--lmax", type=int, default=5)
    p.set_defaults(fn=cmd_singularities)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, data=False)
    p.add_argument("--suite", required=True,
                   help="paper-values | trivial-relations | oracle")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("table", help="CSV table over an integer grid")
    common(p)
    p.add_argument("--grid", required=True, help="e.g. -3..3,-3..3")
    p.add_argument("--des", action="store_true")
    p.set_defaults(fn=cmd_table)

    return parser


_VALUE_FLAGS = {"--at", "--grid", "--lambda", "--n", "--xi"}


def _merge_value_flags(argv):
    """Join value-taking flags with their argument so negatives like
    --at -1,2 or --grid -3..3,-3..3 survive argparse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_merge_value_flags(list(argv)))
    try:
        return args.fn(args)
    except DesingZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
