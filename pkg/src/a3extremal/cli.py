"""Command-line front end.

    a3extremal bounds --n-min 3 --n-max 6 --format csv
    a3extremal extremizer --n 6 --want min --tau 0.5 --route closed
    a3extremal kernel --n 5 --want max --samples 200
    a3extremal verify --n-max 12

Exit status: 0 success, 1 usage error, 2 a reported check failed.
The default output format can be set with A3EXTREMAL_FORMAT (json or csv).
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import oracle
from .cases import ParityMismatch, classify
from .extremizer import ROUTES, UnsupportedCase, extremizer
from .pencil import bounds
from .report import Check, ReportDocument, to_csv, to_json
from .sine import certify_nonnegative, im_on_circle, kernel_for, kernel_value
from .verify import VerifyConfig, run_verification

__all__ = ["main", "build_parser", "cmd_bounds", "cmd_extremizer", "cmd_kernel", "cmd_verify"]

FORMAT_ENV = "A3EXTREMAL_FORMAT"
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cmd_bounds(n_min: int, n_max: int) -> ReportDocument:
    if n_min < 3 or n_max < n_min:
        raise UsageError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    rows, checks = [], []
    for n in range(n_min, n_max + 1):
        b = bounds(n)
        rows.append({
            "n": n,
            "min_case": b.min_case.value,
            "max_case": b.max_case.value,
            "y_min": b.x_min,
            "y_max": b.x_max,
            "a3_min": b.a3_min,
            "a3_max": b.a3_max,
            "cross_check": b.cross_check,
        })
        checks.append(Check(f"bounds_cross_check[n={n}]", b.agrees, b.cross_check))
    return ReportDocument("bounds", {"n_min": n_min, "n_max": n_max}, {"rows": rows}, checks, rows)


def _check_n(n: int) -> None:
    if n < 3:
        raise UsageError(f"N must be at least 3, got {n}")


def _check_tau(n: int, tau: float) -> float:
    if not -1.0 <= tau <= 1.0:
        raise UsageError(f"tau must lie in [-1, 1], got {tau}")
    if n % 2 and tau != 0.0:
        print(f"warning: --tau is ignored for odd N={n}", file=sys.stderr)
        return 0.0
    return tau


def cmd_extremizer(n: int, want: str, tau: float = 0.0, route: str = "eigvec", seed: int = 0) -> ReportDocument:
    _check_n(n)
    tau = _check_tau(n, tau)
    case = classify(n, want)
    p = extremizer(n, want, tau, route)
    others = [r for r in ROUTES if r != route and not (r == "closed" and case.uses_derivative_root)]
    spread = max(float(np.abs(extremizer(n, want, tau, r).coeffs - p.coeffs).max()) for r in others)
    cert = certify_nonnegative(p)
    search = oracle.rayleigh_search(n, want, restarts=8, seed=seed)
    checks = [
        Check("cross_route_discrepancy", spread < 1e-9, spread),
        Check("nonnegative_on_circle", cert.passed, max(0.0, -cert.min_value)),
        Check("oracle_extreme_value", abs(search.value - p.a3) < 1e-8, abs(search.value - p.a3)),
    ]
    results = {
        "case": case.value,
        "n": n,
        "y": p.y,
        "tau": tau,
        "route": route,
        "a3": p.a3,
        "coefficients": [float(c) for c in p.coeffs],
    }
    rows = [{"j": j, "a_j": float(c)} for j, c in enumerate(p.coeffs, start=1)]
    inputs = {"n": n, "want": want, "tau": tau, "route": route, "seed": seed}
    return ReportDocument("extremizer", inputs, results, checks, rows)


def cmd_kernel(n: int, want: str, tau: float = 0.0, samples: int = 100) -> ReportDocument:
    _check_n(n)
    if samples < 2:
        raise UsageError(f"samples must be at least 2, got {samples}")
    tau = _check_tau(n, tau)
    case = classify(n, want)
    p = extremizer(n, want, tau, "recurrence")
    k = kernel_for(case, n)
    rows = []
    for t in np.linspace(0.0, math.pi, samples):
        im = im_on_circle(p, float(t))
        kv = kernel_value(k, float(t), tau)
        rows.append({"t": float(t), "im_on_circle": im, "kernel": kv, "difference": abs(im - kv)})
    worst = max(r["difference"] for r in rows)
    lowest = min(r["im_on_circle"] for r in rows)
    top = max(1.0, max(r["im_on_circle"] for r in rows))
    checks = [
        Check("kernel_equivalence", worst < 1e-8, worst),
        Check("nonnegative_samples", lowest >= -1e-10 * top, max(0.0, -lowest)),
    ]
    results = {"case": case.value, "kind": k.kind, "y": k.y, "rows": rows}
    inputs = {"n": n, "want": want, "tau": tau, "samples": samples}
    return ReportDocument("kernel", inputs, results, checks, rows)


def cmd_verify(n_max: int, n_min: int = 3, seed: int = 0) -> ReportDocument:
    if n_max < 3:
        raise UsageError(f"n_max must be at least 3, got {n_max}")
    if n_min < 3 or n_min > n_max:
        raise UsageError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    results = run_verification(VerifyConfig(n_min=n_min, n_max=n_max, seed=seed))
    matrix: dict = {}
    worst: dict = {}
    for r in results:
        matrix.setdefault(str(r.n), {})[r.name] = {"pass": r.passed, "residual": r.residual}
        p, w = worst.get(r.name, (True, 0.0))
        worst[r.name] = (p and r.passed, max(w, r.residual))
    checks = [Check(name, p, w) for name, (p, w) in worst.items()]
    rows = [{"n": r.n, "check": r.name, "pass": r.passed, "residual": r.residual} for r in results]
    inputs = {"n_min": n_min, "n_max": n_max, "seed": seed}
    return ReportDocument("verify", inputs, {"matrix": matrix}, checks, rows)


def build_parser() -> _Parser:
    default_format = os.environ.get(FORMAT_ENV, "json")
    if default_format not in ("json", "csv"):
        default_format = "json"
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=default_format)

    parser = _Parser(prog="a3extremal", description="Extremal typically-real polynomials for a3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bounds", parents=[common], help="sharp a3 bounds per degree")
    b.add_argument("--n", type=int, help="single degree (sets both ends of the range)")
    b.add_argument("--n-min", type=int, default=3)
    b.add_argument("--n-max", type=int, default=10)

    for name, helptext in (("extremizer", "coefficients of an extremal polynomial"),
                           ("kernel", "Im P(e^it) against its closed product form")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--want", choices=("max", "min"), required=True)
        p.add_argument("--tau", type=float, default=0.0)
        if name == "extremizer":
            p.add_argument("--route", choices=ROUTES, default="eigvec")
            p.add_argument("--seed", type=int, default=0)
        else:
            p.add_argument("--samples", type=int, default=100)

    v = sub.add_parser("verify", parents=[common], help="run every certificate")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--n-min", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    return parser


def run(args) -> ReportDocument:
    if args.command == "bounds":
        lo, hi = (args.n, args.n) if args.n is not None else (args.n_min, args.n_max)
        return cmd_bounds(lo, hi)
    if args.command == "extremizer":
        return cmd_extremizer(args.n, args.want, args.tau, args.route, args.seed)
    if args.command == "kernel":
        return cmd_kernel(args.n, args.want, args.tau, args.samples)
    return cmd_verify(args.n_max, args.n_min, args.seed)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = run(args)
    except (UsageError, UnsupportedCase, ParityMismatch, ValueError) as exc:
        print(f"a3extremal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(to_json(doc) if args.format == "json" else to_csv(doc))
    return EXIT_OK if doc.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
