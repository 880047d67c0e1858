"""Command-line surface: solve, check, landau, verify-all.

Exit codes: 0 pass, 1 bound violation or failed criterion, 2 usage,
3 quadrature validation failure, 4 hypothesis violation.  Identical
flags produce byte-identical output files: grids are traversed in a
fixed order, random draws are seeded, and floats are written with 15
significant digits.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .acceptance import CRITERIA
from .errors import DomainError, HypothesisViolationError, QuadratureValidationError, UnknownScenarioError
from .landau import LandauParameters, landau_radius, univalence_margin
from .potentials import BoundaryFunction, SourceFunction, solve
from .profiles import resolve_profile
from .quadrature import TWO_PI, build_rules
from .testbed import GridSpec, Scenario, _map_points, builtin, scenario_names, sweep

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_QUADRATURE = 3
EXIT_HYPOTHESIS = 4


# ---------------------------------------------------------------------------
# expression mini-language for --g / --psi: constants, i, z, conj(z), |z|,
# |z|^2, re(z), im(z), +, -, *, integer ^.

_TOKEN = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+)|([A-Za-z_]+)|([()+\-*|^,]))")


class ExprError(DomainError):
    pass


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprError(f"bad character in expression at {text[pos:]!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", float(num)))
        elif ident is not None:
            out.append(("ident", ident.lower()))
        else:
            out.append(("op", op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    _FUNCS = {"conj": np.conj, "re": lambda z: np.asarray(z).real + 0j,
              "im": lambda z: np.asarray(z).imag + 0j, "abs": lambda z: np.abs(z) + 0j}

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind or value is not None and tok[1] != value:
            raise ExprError(f"unexpected token {tok} (wanted {kind} {value})")
        self.k += 1
        return tok

    def parse(self):
        fn = self.expr()
        self.take("end")
        return fn

    def expr(self):
        fn = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.take("op")[1]
            rhs = self.term()
            fn = (lambda a, b: lambda z: a(z) + b(z))(fn, rhs) if op == "+" else \
                 (lambda a, b: lambda z: a(z) - b(z))(fn, rhs)
        return fn

    def term(self):
        fn = self.unary()
        while self.peek() == ("op", "*"):
            self.take("op", "*")
            rhs = self.unary()
            fn = (lambda a, b: lambda z: a(z) * b(z))(fn, rhs)
        return fn

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take("op", "-")
            inner = self.unary()
            return lambda z: -inner(z)
        if self.peek() == ("op", "+"):
            self.take("op", "+")
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take("op", "^")
            kind, value = self.take("num")
            if value != int(value):
                raise ExprError("exponents must be integers")
            n = int(value)
            return lambda z: base(z) ** n
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.take("num")
            return lambda z, v=value: np.full_like(np.asarray(z, dtype=complex), v)
        if kind == "ident":
            self.take("ident")
            if value == "z":
                return lambda z: np.asarray(z, dtype=complex)
            if value == "i":
                return lambda z: np.full_like(np.asarray(z, dtype=complex), 1j)
            if value in self._FUNCS:
                self.take("op", "(")
                inner = self.expr()
                self.take("op", ")")
                fn = self._FUNCS[value]
                return lambda z: fn(inner(z))
            raise ExprError(f"unknown name {value!r}")
        if (kind, value) == ("op", "("):
            self.take("op", "(")
            inner = self.expr()
            self.take("op", ")")
            return inner
        if (kind, value) == ("op", "|"):
            self.take("op", "|")
            inner = self.expr()
            self.take("op", "|")
            return lambda z: np.abs(inner(z)) + 0j
        raise ExprError(f"unexpected token {(kind, value)}")


def parse_point_expr(text: str):
    """Compile the mini-language to a vectorized closure of a complex array."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# deterministic serialization


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def _round_floats(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (float, np.floating)):
        return float(_fmt(obj))
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, complex):
        return [_round_floats(obj.real), _round_floats(obj.imag)]
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_round_floats(v) for v in obj]
    return obj


def write_report_document(path: Path, body: dict, tolerances: dict | None = None):
    doc = {"schema_version": "1", "tool": "poissonlab", "version": __version__}
    if tolerances:
        doc["tolerances"] = tolerances
    doc.update(body)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        json.dump(_round_floats(doc), fh, indent=2)
        fh.write("\n")


def _write_plot_series(path: Path, xs, ys):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        for x, y in zip(xs, ys):
            fh.write(f"{_fmt(x)} {_fmt(y)}\n")


# ---------------------------------------------------------------------------
# subcommands


def _scenario_from_args(args, profile) -> Scenario:
    if args.scenario:
        return builtin(args.scenario, profile)
    if not (args.g and args.psi is not None):
        raise DomainError("provide --scenario NAME or both --g EXPR and --psi EXPR")
    g_fn = parse_point_expr(args.g)
    psi_fn = parse_point_expr(args.psi)
    rr = np.linspace(0.0, 1.0, 129)
    tt = TWO_PI * np.arange(512) / 512
    dense = np.multiply.outer(rr, np.exp(1j * tt)).ravel()
    g_sup = float(np.max(np.abs(g_fn(dense))))
    g = SourceFunction(g_fn, sup_norm=g_sup)
    psi = BoundaryFunction.from_callable(lambda t: psi_fn(np.exp(1j * t)),
                                         profile.boundary_samples)
    return Scenario(name="custom", psi=psi, g=g, g_norm=g_sup,
                    p_norm=psi.sup_norm, series_terms=profile.series_terms)


def cmd_solve(args) -> int:
    profile = resolve_profile(args.profile)
    scenario = _scenario_from_args(args, profile)
    rule = build_rules(profile.radial_n, profile.angular_n, profile.rule_tol)[1]
    sol = solve(scenario.psi, scenario.g, rule=rule, series_terms=profile.series_terms)
    grid = GridSpec.parse(args.grid, r_max=args.rmax)
    pts = grid.points()
    rows = _map_points(lambda z: (sol.value(z), sol.wirtinger(z).norm), pts, args.threads)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="\n") as fh:
        fh.write("z_re,z_im,f_re,f_im,f_abs,grad_norm\n")
        for z, (val, dn) in zip(pts, rows):
            fh.write(",".join(_fmt(v) for v in
                              (z.real, z.imag, val.real, val.imag, abs(val), dn)) + "\n")
    return EXIT_PASS


def cmd_check(args) -> int:
    profile = resolve_profile(args.profile)
    scenario = builtin(args.scenario, profile)
    rule = build_rules(profile.radial_n, profile.angular_n, profile.rule_tol)[1]
    grid = GridSpec.parse(args.grid, r_max=args.rmax)
    report = sweep(scenario, args.theorem, grid, rule=rule, enforce=False,
                   threads=args.threads)
    body = report.to_dict()
    tolerances = {"slack": report.slack, "sharp_tol": report.sharp_tol,
                  "profile": profile.name, "radial_n": profile.radial_n,
                  "angular_n": profile.angular_n}
    if args.json:
        write_report_document(Path(args.json), body, tolerances)
    if args.plot:
        order = np.argsort(np.abs(report.points), kind="stable")
        _write_plot_series(Path(args.plot),
                           np.abs(report.points)[order], report.margin[order])
    if not report.hypotheses_ok:
        print(f"hypothesis violation: {'; '.join(report.hypothesis_failures)}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    if report.min_margin < -report.slack:
        print(f"bound violated: min margin {report.min_margin:.3e}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_PASS


def cmd_landau(args) -> int:
    if args.m2 <= 0 or args.m1 < 0:
        print("landau needs --m1 >= 0 and --m2 > 0", file=sys.stderr)
        return EXIT_USAGE
    params = LandauParameters(args.m1, args.m2)
    result = landau_radius(params, tol=args.tol, rho_fraction=args.lipschitz_rho)
    doc = {"m1": args.m1, "m2": args.m2, "r0": result.r0, "R0": result.R0,
           "phi_residual": result.phi_residual, "rho": result.rho,
           "L1": result.L1, "L2": result.L2}
    print(json.dumps(_round_floats(doc), indent=2))
    if args.plot:
        xs = np.linspace(1e-4, 1 - 1e-4, 512)
        _write_plot_series(Path(args.plot), xs,
                           [univalence_margin(x, params) for x in xs])
    return EXIT_PASS


def cmd_verify_all(args) -> int:
    profile = resolve_profile(args.tol_profile)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    results = []
    for cid, fn in CRITERIA.items():
        result = fn(profile)
        results.append(result)
        write_report_document(out_dir / f"criterion_{cid}.json", result.to_dict(),
                              {"profile": profile.name})
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {cid} {result.title}")
    summary = {
        "profile": profile.name,
        "results": [{"criterion": r.cid, "passed": r.passed} for r in results],
        "all_passed": all(r.passed for r in results),
    }
    write_report_document(out_dir / "summary.json", summary)
    failing = [r for r in results if not r.passed]
    if failing:
        print(f"failed: {', '.join(r.cid for r in failing)}", file=sys.stderr)
        for r in failing:
            for reason in r.failures:
                print(f"  {r.cid}: {reason}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_PASS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissonlab",
        description="Solve the disk Poisson problem and verify its sharp bounds.")
    parser.add_argument("--version", action="version", version=f"poissonlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser(
        "solve", help="evaluate the solution on a polar grid and write a CSV",
        description="CSV columns: z_re, z_im, f_re, f_im, f_abs, grad_norm; rows run "
                    "origin first, then radius-major over the polar grid.")
    p_solve.add_argument("--scenario", help=f"one of: {', '.join(scenario_names())} "
                                            "(parameters via name:p1:p2)")
    p_solve.add_argument("--g", help="source expression, e.g. '1' or '-4' or 'z*conj(z)'")
    p_solve.add_argument("--psi", help="boundary expression in z = e^(it), e.g. '0.25'")
    p_solve.add_argument("--grid", default="8x16", help="polar grid RxA (default 8x16)")
    p_solve.add_argument("--rmax", type=float, default=0.9, help="outermost radius")
    p_solve.add_argument("--out", required=True, help="CSV output path")
    p_solve.add_argument("--threads", type=int, default=1)
    p_solve.add_argument("--profile", choices=["fast", "strict"], default=None)
    p_solve.set_defaults(fn=cmd_solve)

    p_check = sub.add_parser("check", help="sweep one bound over a grid and report margins")
    p_check.add_argument("--scenario", required=True)
    p_check.add_argument("--theorem", required=True, choices=["1.1", "1.2", "1.3"],
                         help="1.1 value bound, 1.2 boundary quotient, 1.3 gradient bound")
    p_check.add_argument("--grid", default="16x16")
    p_check.add_argument("--rmax", type=float, default=0.9)
    p_check.add_argument("--json", help="report document output path")
    p_check.add_argument("--plot", help="two-column (|z|, margin) plot data path")
    p_check.add_argument("--threads", type=int, default=1)
    p_check.add_argument("--profile", choices=["fast", "strict"], default=None)
    p_check.set_defaults(fn=cmd_check)

    p_landau = sub.add_parser("landau", help="univalence and covered radii from (m1, m2)")
    p_landau.add_argument("--m1", type=float, required=True, help="source sup bound")
    p_landau.add_argument("--m2", type=float, required=True, help="solution sup bound")
    p_landau.add_argument("--tol", type=float, default=1e-12)
    p_landau.add_argument("--lipschitz-rho", type=float, default=0.9,
                          help="fraction of r0 at which the lower margin is reported")
    p_landau.add_argument("--plot", help="two-column (x, margin) plot data path")
    p_landau.set_defaults(fn=cmd_landau)

    p_verify = sub.add_parser("verify-all", help="run every acceptance criterion")
    p_verify.add_argument("--tol-profile", choices=["fast", "strict"], default=None)
    p_verify.add_argument("--out", required=True, help="directory for per-criterion reports")
    p_verify.set_defaults(fn=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UnknownScenarioError, ExprError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureValidationError as exc:
        print(f"quadrature validation failed: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except HypothesisViolationError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
