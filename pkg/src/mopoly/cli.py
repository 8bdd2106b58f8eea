"""Command line interface.

Subcommands: coeffs, poly, zeros, verify, oracle, quad, limits,
asymptotics.  Output is JSON (default) or CSV, written to stdout or
--out, and byte-identical across runs for identical invocations.
Doubles are printed with 17 significant digits, extended floats with 30,
rationals as "p/q" strings.

Exit codes: 0 success, 1 invalid parameters or unsupported request,
2 verification failure, 3 numerical failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

import mpmath
from mpmath import mpf

from .construct import (
    LIMIT_KINDS,
    jacobi_angelesco_explicit,
    jacobi_angelesco_offdiagonal,
    jacobi_laguerre_explicit,
    jacobi_pineiro_explicit,
    limit_check,
    polynomial_via_recurrence,
    raising_apply,
)
from .core import (
    DegenerateSystem,
    EigenFailure,
    IllConditionedVandermonde,
    JacobiAngelesco,
    JacobiLaguerre,
    JacobiPineiro,
    LaguerreHermite,
    MopolyError,
    MultipleHermite,
    MultipleLaguerreFirst,
    MultipleLaguerreSecond,
    NonIntegrable,
    ParameterOutOfRange,
    ScalarKindMismatch,
    SingularMomentMatrix,
    SpuriousComplexPair,
    UnsupportedFamily,
    UnsupportedMultiplicity,
    UnsupportedWeightShape,
    stepline_index,
    validate,
)
from .quadrature import (
    oracle_polynomial,
    orthogonality_residuals,
    simultaneous_rule,
)
from .recurrence import asymptotic_coeffs, stepline_coeffs
from .spectra import zero_location_check, zeros as spectral_zeros

_USAGE_EXIT = 64

_FAMILIES = {
    "jp": ("alpha0", "alpha1", "alpha2"),
    "ml1": ("alpha1", "alpha2"),
    "ml2": ("alpha0", "c1", "c2"),
    "mh": ("c1", "c2"),
    "ja": ("a", "alpha", "beta", "gamma"),
    "jl": ("a", "alpha", "beta"),
    "lh": ("beta",),
}
_ALL_PARAM_FLAGS = ("alpha0", "alpha1", "alpha2", "alpha", "beta", "gamma",
                    "a", "c1", "c2")

_VALIDATION_ERRORS = (ParameterOutOfRange, DegenerateSystem,
                      UnsupportedFamily, UnsupportedMultiplicity,
                      ScalarKindMismatch, ValueError)
_NUMERICAL_ERRORS = (SingularMomentMatrix, EigenFailure, SpuriousComplexPair,
                     NonIntegrable, UnsupportedWeightShape,
                     IllConditionedVandermonde)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let values like -1/2 pass as arguments, not option lookalikes
        self._negative_number_matcher = re.compile(
            r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(_USAGE_EXIT)


def _number(text):
    """Parameter value: decimal ('0.25'), integer ('2'), or ratio ('1/3').

    Parsed exactly as a Fraction so rational-precision runs see the value
    the user typed, not its binary rounding.
    """
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a number: %r" % (text,))


def _build_spec(args):
    family = args.family
    allowed = _FAMILIES[family]
    given = {name: getattr(args, name) for name in _ALL_PARAM_FLAGS
             if getattr(args, name, None) is not None}
    for name in given:
        if name not in allowed:
            raise ParameterOutOfRange(
                "--%s is not a parameter of family %s (takes: %s)"
                % (name, family, ", ".join("--" + p for p in allowed)))
    missing = [p for p in allowed if p not in given]
    if missing:
        raise ParameterOutOfRange(
            "family %s requires %s" % (family,
                                       ", ".join("--" + p for p in missing)))
    g = given
    if family == "jp":
        spec = JacobiPineiro(g["alpha0"], (g["alpha1"], g["alpha2"]))
    elif family == "ml1":
        spec = MultipleLaguerreFirst((g["alpha1"], g["alpha2"]))
    elif family == "ml2":
        spec = MultipleLaguerreSecond(g["alpha0"], (g["c1"], g["c2"]))
    elif family == "mh":
        spec = MultipleHermite((g["c1"], g["c2"]))
    elif family == "ja":
        # two-interval parameters live in binary floating point throughout
        spec = JacobiAngelesco(float(g["a"]), float(g["alpha"]),
                               float(g["beta"]), float(g["gamma"]))
    elif family == "jl":
        spec = JacobiLaguerre(float(g["a"]), float(g["alpha"]),
                              float(g["beta"]))
    else:
        spec = LaguerreHermite(float(g["beta"]))
    validate(spec)
    params = {name: g[name] for name in allowed}
    return spec, params


def _precision(args, default):
    value = args.precision or os.environ.get("MOPOLY_PRECISION") or default
    if value not in ("double", "extended", "rational"):
        raise ParameterOutOfRange(
            "precision must be double, extended or rational, got %r" % value)
    return value


# ---------------------------------------------------------------------------
# deterministic serialization

def _fmt_number(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return "%.17g" % v
    if isinstance(v, mpf):
        return mpmath.nstr(v, 30)
    if isinstance(v, Fraction):
        return None  # rationals serialize as strings
    raise TypeError("cannot format %r" % (v,))


def _json_value(v, indent):
    pad = " " * indent
    if v is None:
        return "null"
    if isinstance(v, str):
        return '"%s"' % v.replace("\\", "\\\\").replace('"', '\\"')
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return '"%d"' % v.numerator
        return '"%d/%d"' % (v.numerator, v.denominator)
    if isinstance(v, (bool, int, float, mpf)):
        return _fmt_number(v)
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        inner = ",\n".join(pad + "  " + _json_value(x, indent + 2) for x in v)
        return "[\n%s\n%s]" % (inner, pad)
    if isinstance(v, dict):
        if not v:
            return "{}"
        inner = ",\n".join(
            '%s  "%s": %s' % (pad, k, _json_value(x, indent + 2))
            for k, x in v.items())
        return "{\n%s\n%s}" % (inner, pad)
    raise TypeError("cannot serialize %r" % (v,))


def _csv_cell(v):
    if isinstance(v, Fraction):
        return "%d/%d" % (v.numerator, v.denominator)
    if isinstance(v, str):
        return v
    return _fmt_number(v)


def _emit(args, doc, csv_header, csv_rows):
    if args.format == "json":
        text = _json_value(doc, 0) + "\n"
    else:
        lines = [",".join(csv_header)]
        lines.extend(",".join(_csv_cell(c) for c in row) for row in csv_rows)
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _doc(args, command, params, precision, body):
    doc = {"schema": "mopoly/1", "command": command, "family": args.family,
           "params": params, "precision": precision}
    doc.update(body)
    return doc


# ---------------------------------------------------------------------------
# subcommand handlers (return process exit code)

def _cmd_coeffs(args):
    spec, params = _build_spec(args)
    kind = _precision(args, "double")
    n_max = args.n
    if n_max < 0:
        raise ParameterOutOfRange("--n must be nonnegative")
    b, c, d = [], [], []
    for n in range(n_max + 1):
        bn, cn, dn = stepline_coeffs(spec, n, kind=kind)
        b.append(bn)
        c.append(cn)
        d.append(dn)
    body = {"n": n_max, "b": b, "c": c, "d": d}
    rows = [(i, b[i], c[i], d[i]) for i in range(n_max + 1)]
    _emit(args, _doc(args, "coeffs", params, kind, body),
          ("n", "b", "c", "d"), rows)
    return 0


def _explicit_stepline(spec, args, N, kind):
    if isinstance(spec, JacobiPineiro):
        nm = stepline_index(N, 2).entries
        return jacobi_pineiro_explicit(spec.alpha0, spec.alphas[0],
                                       spec.alphas[1], nm[0], nm[1], kind)
    if isinstance(spec, JacobiAngelesco):
        if N % 2 == 0:
            return jacobi_angelesco_explicit(spec.alpha, spec.beta,
                                             spec.gamma, spec.a, N // 2, kind)
        return jacobi_angelesco_offdiagonal(spec.alpha, spec.beta,
                                            spec.gamma, spec.a, N // 2, kind)
    if isinstance(spec, JacobiLaguerre):
        if N % 2 == 0:
            return jacobi_laguerre_explicit(spec.alpha, spec.beta, spec.a,
                                            N // 2, kind)
        raise UnsupportedFamily(
            "no explicit odd-degree construction for family jl")
    raise UnsupportedFamily(
        "no explicit construction for family %s" % args.family)


def _cmd_poly(args):
    spec, params = _build_spec(args)
    kind = _precision(args, "double")
    N = args.N
    if N < 0:
        raise ParameterOutOfRange("--N must be nonnegative")
    if args.method == "recurrence":
        poly = polynomial_via_recurrence(spec, N, kind)
    elif args.method == "oracle":
        poly = oracle_polynomial(spec, stepline_index(N, 2), kind)
    else:
        poly = _explicit_stepline(spec, args, N, kind)
    coeffs = list(poly.coeffs)
    body = {"degree": N, "method": args.method, "coeffs": coeffs}
    rows = [(i, c) for i, c in enumerate(coeffs)]
    _emit(args, _doc(args, "poly", params, kind, body),
          ("power", "coefficient"), rows)
    return 0


def _cmd_zeros(args):
    spec, params = _build_spec(args)
    kind = _precision(args, "double")
    report = spectral_zeros(spec, args.N, kind=kind)
    body = {"degree": args.N,
            "zeros": list(report.zeros),
            "counts": list(report.per_interval_counts),
            "max_imag": report.max_imag_discarded,
            "residuals": list(report.residuals),
            "boundary_assigned": report.boundary_assigned}
    rows = [(i, z, r) for i, (z, r) in
            enumerate(zip(report.zeros, report.residuals))]
    _emit(args, _doc(args, "zeros", params, kind, body),
          ("index", "zero", "residual"), rows)
    return 0


def _cmd_oracle(args):
    spec, params = _build_spec(args)
    kind = _precision(args, "extended")
    nvec = _parse_index(args.index, spec.r)
    poly = oracle_polynomial(spec, nvec, kind)
    coeffs = list(poly.coeffs)
    body = {"index": list(nvec), "degree": poly.degree, "coeffs": coeffs}
    rows = [(i, c) for i, c in enumerate(coeffs)]
    _emit(args, _doc(args, "oracle", params, kind, body),
          ("power", "coefficient"), rows)
    return 0


def _cmd_quad(args):
    spec, params = _build_spec(args)
    kind = _precision(args, "extended")
    nvec = _parse_index(args.index, spec.r)
    rule = simultaneous_rule(spec, nvec, kind=kind)
    body = {"index": list(nvec),
            "nodes": list(rule.nodes),
            "weights": [list(w) for w in rule.weights],
            "exactness": list(rule.exactness)}
    rows = []
    for i, x in enumerate(rule.nodes):
        rows.append((i, x) + tuple(w[i] for w in rule.weights))
    header = ("index", "node") + tuple(
        "weight%d" % (j + 1) for j in range(len(rule.weights)))
    _emit(args, _doc(args, "quad", params, kind, body), header, rows)
    return 0


def _cmd_limits(args):
    kind_token = args.kind
    scales = [float(s) for s in args.scales.split(",") if s]
    if not scales:
        raise ParameterOutOfRange("--scales must list at least one value")
    indices = _parse_limit_indices(args.indices, kind_token)
    rows = []
    for s in scales:
        rows.append({"alpha": s, "deviation": limit_check(kind_token, s,
                                                          indices)})
    doc = {"schema": "mopoly/1", "command": "limits", "kind": kind_token,
           "indices": list(indices) if isinstance(indices, tuple)
           else [indices],
           "rows": rows}
    csv_rows = [(r["alpha"], r["deviation"]) for r in rows]
    _emit(args, doc, ("alpha", "deviation"), csv_rows)
    return 0


def _cmd_asymptotics(args):
    spec, params = _build_spec(args)
    limits = asymptotic_coeffs(spec)
    N = args.n
    if N < 8:
        raise ParameterOutOfRange("--n must be at least 8")
    ns = sorted({10, 11, 50, 51, 200, 201, N - 1, N})
    ns = [n for n in ns if 2 <= n <= N]
    table = []
    for n in ns:
        b, c, d = stepline_coeffs(spec, n, kind="double")
        table.append({
            "n": n,
            "b_scaled": b / limits.scale_value("b", n),
            "c_scaled": c / limits.scale_value("c", n),
            "d_scaled": d / limits.scale_value("d", n),
        })
    body = {"limits": {
        "b_even": limits.b_even, "b_odd": limits.b_odd,
        "c_even": limits.c_even, "c_odd": limits.c_odd,
        "d_even": limits.d_even, "d_odd": limits.d_odd,
        "b_scale": limits.b_scale, "c_scale": limits.c_scale,
        "d_scale": limits.d_scale},
        "table": table}
    rows = [(r["n"], r["b_scaled"], r["c_scaled"], r["d_scaled"])
            for r in table]
    _emit(args, _doc(args, "asymptotics", params, "double", body),
          ("n", "b_scaled", "c_scaled", "d_scaled"), rows)
    return 0


_RAISING_FAMILIES = ("jp", "ml1", "ml2", "ja", "jl")


def _cmd_verify(args):
    spec, params = _build_spec(args)
    kind = _precision(args, "extended")
    if kind == "rational":
        raise ParameterOutOfRange("verify runs in double or extended")
    N = args.N
    if N < 2:
        raise ParameterOutOfRange("--N must be at least 2")
    checks = []

    def record(name, status, value, threshold):
        checks.append({"check": name, "status": status, "value": value,
                       "threshold": threshold})

    cross_tol = 1e-10 if kind == "extended" else 1e-7
    worst = 0.0
    for n in range(min(N, 12) + 1):
        rec = polynomial_via_recurrence(spec, n, kind)
        orc = oracle_polynomial(spec, stepline_index(n, 2), kind)
        scale = max(abs(float(v)) for v in orc.coeffs)
        dev = max(abs(float(a - b))
                  for a, b in zip(rec.coeffs, orc.coeffs)) / scale
        worst = max(worst, dev)
        try:
            exp = _explicit_stepline(spec, args, n, kind)
        except UnsupportedFamily:
            exp = None
        if exp is not None:
            dev = max(abs(float(a - b))
                      for a, b in zip(exp.coeffs, orc.coeffs)) / scale
            worst = max(worst, dev)
    record("cross_construction", "pass" if worst < cross_tol else "fail",
           worst, cross_tol)

    orth_tol = 1e-10 if kind == "extended" else 1e-7
    worst = 0.0
    for n in range(1, min(N, 12) + 1):
        poly = polynomial_via_recurrence(spec, n, kind)
        worst = max(worst, orthogonality_residuals(
            spec, stepline_index(n, 2), poly, kind=kind))
    record("orthogonality", "pass" if worst < orth_tol else "fail",
           worst, orth_tol)

    if args.family in _RAISING_FAMILIES:
        try:
            worst = max(raising_apply(spec, j, (2, 1), kind="extended")
                        for j in (1, 2))
            record("raising", "pass" if worst < 1e-12 else "fail",
                   worst, 1e-12)
        except ParameterOutOfRange:
            record("raising", "skipped", None, 1e-12)
    else:
        record("raising", "skipped", None, 1e-12)

    try:
        report = zero_location_check(spec, min(N, 40), kind="double")
        record("zero_location",
               "pass" if report.max_imag_discarded < 1e-8 else "fail",
               report.max_imag_discarded, 1e-8)
    except (EigenFailure, SpuriousComplexPair) as exc:
        record("zero_location", "fail", str(exc), 1e-8)

    ok = all(ch["status"] != "fail" for ch in checks)
    body = {"N": N, "checks": checks, "ok": ok}
    rows = [(ch["check"], ch["status"],
             "" if ch["value"] is None else ch["value"], ch["threshold"])
            for ch in checks]
    _emit(args, _doc(args, "verify", params, kind, body),
          ("check", "status", "value", "threshold"), rows)
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# argument plumbing

def _parse_index(text, r):
    parts = [p for p in text.split(",") if p != ""]
    try:
        nvec = tuple(int(p) for p in parts)
    except ValueError:
        raise ParameterOutOfRange("--index must be comma-separated integers")
    if len(nvec) != r:
        raise ParameterOutOfRange(
            "--index needs %d comma-separated entries" % r)
    if any(v < 0 for v in nvec):
        raise ParameterOutOfRange("--index entries must be nonnegative")
    return nvec


def _parse_limit_indices(text, kind_token):
    parts = [p for p in text.split(",") if p != ""]
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise ParameterOutOfRange("--indices must be comma-separated integers")
    classical = kind_token in ("jactolag", "jactoher", "lagtoher")
    if classical:
        if len(vals) != 1:
            raise ParameterOutOfRange(
                "--indices takes a single degree for %s" % kind_token)
        return vals[0]
    if len(vals) != 2:
        raise ParameterOutOfRange(
            "--indices takes two entries for %s" % kind_token)
    return vals


def _add_common(sub, family=True):
    if family:
        sub.add_argument("--family", required=True, choices=sorted(_FAMILIES))
        for name in _ALL_PARAM_FLAGS:
            sub.add_argument("--" + name, type=_number, default=None)
    sub.add_argument("--precision", default=None,
                     choices=("double", "extended", "rational"))
    sub.add_argument("--format", default="json", choices=("json", "csv"))
    sub.add_argument("--out", default=None)


def build_parser():
    parser = _Parser(prog="mopoly",
                     description="Multiple orthogonal polynomials: "
                                 "coefficients, zeros, certificates.")
    subs = parser.add_subparsers(dest="cmd", required=True)

    p = subs.add_parser("coeffs", help="stepline recurrence coefficients")
    _add_common(p)
    p.add_argument("--n", type=int, required=True,
                   help="largest running index (inclusive)")
    p.set_defaults(handler=_cmd_coeffs)

    p = subs.add_parser("poly", help="stepline polynomial coefficients")
    _add_common(p)
    p.add_argument("--N", type=int, required=True, help="polynomial degree")
    p.add_argument("--method", default="recurrence",
                   choices=("recurrence", "explicit", "oracle"))
    p.set_defaults(handler=_cmd_poly)

    p = subs.add_parser("zeros", help="zeros via the banded Hessenberg matrix")
    _add_common(p)
    p.add_argument("--N", type=int, required=True, help="polynomial degree")
    p.set_defaults(handler=_cmd_zeros)

    p = subs.add_parser("verify", help="cross-construction and orthogonality "
                                       "certificates")
    _add_common(p)
    p.add_argument("--N", type=int, default=8,
                   help="largest degree exercised (default 8)")
    p.set_defaults(handler=_cmd_verify)

    p = subs.add_parser("oracle", help="moment-system polynomial at any "
                                       "multi-index")
    _add_common(p)
    p.add_argument("--index", required=True,
                   help="multi-index, e.g. 2,1")
    p.set_defaults(handler=_cmd_oracle)

    p = subs.add_parser("quad", help="simultaneous Gauss quadrature rule")
    _add_common(p)
    p.add_argument("--index", required=True,
                   help="multi-index, e.g. 3,3")
    p.set_defaults(handler=_cmd_quad)

    p = subs.add_parser("limits", help="limit-transition deviation table")
    _add_common(p, family=False)
    p.add_argument("--kind", required=True, choices=LIMIT_KINDS)
    p.add_argument("--indices", required=True,
                   help="degree (classical) or pair n,m (multiple)")
    p.add_argument("--scales", default="1e3,1e6",
                   help="comma-separated scale parameters (default 1e3,1e6)")
    p.set_defaults(handler=_cmd_limits)

    p = subs.add_parser("asymptotics", help="scaled coefficients vs their "
                                            "closed-form limits")
    _add_common(p)
    p.add_argument("--n", type=int, default=500,
                   help="largest index in the table (default 500)")
    p.set_defaults(handler=_cmd_asymptotics)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.handler(args)
    except _VALIDATION_ERRORS as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except _NUMERICAL_ERRORS as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    except MopolyError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
