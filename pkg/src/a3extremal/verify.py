"""Run every certificate for a range of degrees and collect a pass/fail matrix."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import oracle
from .cases import classify, critical_abscissa
from .chebyshev import identity_suite, interlacing
from .compact import certify_removability, expand_to_polynomial, sine_pair_identities
from .extremizer import coeffs_closed_form, coeffs_from_eigvec, coeffs_recurrence
from .pencil import bounds, verify_factorization
from .sine import certify_nonnegative, im_on_circle, kernel_for, kernel_value
from .spectra import eigvec_basis, verify_d_nullity

__all__ = ["VerifyConfig", "CheckResult", "run_verification", "TAU_SWEEP"]

TAU_SWEEP = (-1.0, -0.5, 0.0, 0.5, 1.0)


@dataclass(frozen=True)
class VerifyConfig:
    n_min: int = 3
    n_max: int = 12
    seed: int = 0
    restarts: int = 8
    route_tol: float = 1e-9
    oracle_tol: float = 1e-9
    kernel_tol: float = 1e-8
    kernel_grid: int = 1024
    exact_det_max: int = 24  # exact determinant check above this N is skipped


@dataclass
class CheckResult:
    name: str
    n: int
    passed: bool
    residual: float
    note: str = ""


@dataclass
class _Collector:
    results: list = field(default_factory=list)

    def add(self, name, n, residual, tol=None, passed=None, note=""):
        residual = float(residual)
        if passed is None:
            passed = residual < tol
        self.results.append(CheckResult(name, n, bool(passed), residual, note))


def _route_agreement(case, n, taus):
    worst_routes, worst_compact = 0.0, 0.0
    basis = eigvec_basis(case, n)
    for tau in taus:
        e = coeffs_from_eigvec(basis, tau).coeffs
        r = coeffs_recurrence(case, n, tau).coeffs
        d = np.abs(e - r).max()
        if not case.uses_derivative_root:
            d = max(d, np.abs(coeffs_closed_form(case, n, tau).coeffs - e).max())
        worst_routes = max(worst_routes, d)
        worst_compact = max(worst_compact, np.abs(expand_to_polynomial(case, n, tau).coeffs - r).max())
    return worst_routes, worst_compact


def _kernel_gap(case, n, tau, grid):
    p = coeffs_recurrence(case, n, tau)
    k = kernel_for(case, n)
    avoid = k.removable_points()
    ts = [t for t in np.linspace(0, math.pi, grid) if min(abs(t - a) for a in avoid) > 1e-4]
    kv = np.array([kernel_value(k, t, tau) for t in ts])
    return float(np.abs(im_on_circle(p, np.array(ts)) - kv).max())


def _check_degree(n: int, cfg: VerifyConfig, out: _Collector) -> None:
    taus = TAU_SWEEP if n % 2 == 0 else (0.0,)
    b = bounds(n)
    out.add("bounds_cross_check", n, b.cross_check, 1e-10)

    if n <= cfg.exact_det_max:
        rep = verify_factorization(n)
        out.add("determinant_factorization", n, len(rep.mismatches), passed=rep.passed)

    dense = oracle.solve_pencil_dense(n)
    out.add(
        "oracle_eigenvalues", n,
        max(abs(dense.lam_max - b.a3_max), abs(dense.lam_min - b.a3_min)), cfg.oracle_tol,
    )
    expected = 1 if n % 2 else 2
    mult = (oracle.multiplicity(dense.eigenvalues, "max"), oracle.multiplicity(dense.eigenvalues, "min"))
    out.add("multiplicity_law", n, max(abs(m - expected) for m in mult), passed=mult == (expected, expected))

    rng = random.Random(cfg.seed * 1000 + n)
    for want in ("max", "min"):
        case = classify(n, want)
        tag = f"{want}"
        basis = eigvec_basis(case, n)
        out.add(f"eigvec_nullity_{tag}", n, max(basis.residuals), 1e-9)

        search = oracle.rayleigh_search(n, want, cfg.restarts, cfg.seed)
        ref = b.a3_max if want == "max" else b.a3_min
        out.add(f"oracle_search_{tag}", n, abs(search.value - ref), 1e-8)

        routes, compact = _route_agreement(case, n, taus)
        out.add(f"route_agreement_{tag}", n, routes, cfg.route_tol)
        out.add(f"compact_agreement_{tag}", n, compact, cfg.route_tol)

        rem = certify_removability(case, n)
        out.add(f"removability_{tag}", n, max(rem.residual_tail, rem.local_residual), passed=rem.passed)

        worst = min(certify_nonnegative(coeffs_recurrence(case, n, tau)).min_value for tau in taus)
        out.add(f"nonnegativity_{tag}", n, max(0.0, -worst), 1e-10)

        gap = max(_kernel_gap(case, n, tau, cfg.kernel_grid) for tau in ((-1.0, 0.0, 1.0) if n % 2 == 0 else (0.0,)))
        out.add(f"kernel_equivalence_{tag}", n, gap, cfg.kernel_tol)

        if case.uses_derivative_root:
            M = n + 5 if n % 2 else n + 4
            t = math.acos(critical_abscissa(case, n))
            res = sine_pair_identities((M - 2) / 2, (M + 2) / 2, t, tol=1e-10)
            out.add(f"sine_pair_identities_{tag}", n, max(abs(v) for v in res.values()), 1e-9)

    out.add("interlacing", n, 0.0, passed=interlacing(n)["holds"])
    nul = verify_d_nullity(n)
    out.add("d_matrix_nullity", n, nul.worst, 1e-9)
    x = Fraction(rng.randint(1, 999), 1000)
    ids = identity_suite(n, x)
    out.add("alternating_sums_exact", n, ids.max_residual(), passed=ids.exact_zero())
    special = identity_suite(n // 2 or 1, 0.5, n)
    vals = [abs(float(v)) for k, v in special.residuals.items() if not k.startswith("alt_")]
    out.add("special_abscissa_identities", n, max(vals, default=0.0), 1e-10)


def run_verification(cfg: VerifyConfig) -> list[CheckResult]:
    if cfg.n_min < 3 or cfg.n_max < cfg.n_min:
        raise ValueError(f"bad degree range {cfg.n_min}..{cfg.n_max}")
    out = _Collector()
    for n in range(cfg.n_min, cfg.n_max + 1):
        _check_degree(n, cfg, out)
    return out.results
