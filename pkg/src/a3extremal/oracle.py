"""Brute-force numerical cross-check of the pencil extremes.

Nothing here uses the Chebyshev closed forms: only the matrix builders of
:mod:`a3extremal.pencil` and generic dense linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .pencil import build_pencil, phi_matrix

__all__ = [
    "DecompositionFailure",
    "NormalizerVanishes",
    "DenseEig",
    "RayleighResult",
    "solve_pencil_dense",
    "multiplicity",
    "eigenspace_dimension",
    "rayleigh_search",
    "count_below",
    "reconstruct_coeffs",
    "determinant_sign_changes",
]

MULTIPLICITY_GAP = 1e-6
MAX_DENSE = 256


class DecompositionFailure(np.linalg.LinAlgError):
    pass


class NormalizerVanishes(ArithmeticError):
    pass


@dataclass
class DenseEig:
    n: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, B-orthonormal
    residuals: np.ndarray
    b_orthogonality: float

    @property
    def lam_min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lam_max(self) -> float:
        return float(self.eigenvalues[-1])


def _pencil(n: int):
    p = build_pencil(n)
    return p.a_dense(), p.b_dense()


def solve_pencil_dense(n: int) -> DenseEig:
    """All eigenpairs of A v = lambda B v via B = L L^T and eigh of L^-1 A L^-T."""
    if n > MAX_DENSE:
        raise ValueError(f"N={n} exceeds the dense bound {MAX_DENSE}")
    A, B = _pencil(n)
    try:
        L = np.linalg.cholesky(B)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailure(f"B is not positive definite for N={n}") from exc
    C = sla.solve_triangular(L, sla.solve_triangular(L, A, lower=True).T, lower=True)
    C = 0.5 * (C + C.T)
    lam, W = np.linalg.eigh(C)
    V = sla.solve_triangular(L.T, W, lower=False)
    res = np.linalg.norm(A @ V - (B @ V) * lam, axis=0)
    orth = float(np.abs(V.T @ B @ V - np.eye(n)).max())
    return DenseEig(n, lam, V, res, orth)


def multiplicity(eigenvalues, which: str, gap: float = MULTIPLICITY_GAP) -> int:
    """Number of eigenvalues within a relative ``gap`` of the min or max."""
    lam = np.sort(np.asarray(eigenvalues))
    ref = lam[-1] if which == "max" else lam[0]
    scale = max(1.0, float(np.abs(lam).max()))
    return int(np.sum(np.abs(lam - ref) <= gap * scale))


def eigenspace_dimension(n: int, lam: float, tol: float = 1e-9) -> int:
    """Numerical nullity of A - lam B from its singular values."""
    A, B = _pencil(n)
    s = np.linalg.svd(A - lam * B, compute_uv=False)
    return int(np.sum(s < tol * max(1.0, s.max())))


@dataclass
class RayleighResult:
    value: float
    delta: np.ndarray
    restarts: int


def _rq(A, B, x) -> float:
    return float(x @ A @ x / (x @ B @ x))


def count_below(A, B, sigma: float) -> int:
    """Generalised eigenvalues below sigma, by Sylvester inertia of A - sigma B = L D L^T."""
    _, D, _ = sla.ldl(A - sigma * B)
    return int(np.sum(np.linalg.eigvalsh(D) < 0))


def _bisect_extreme(A, B, want: str, bound: float, tol: float = 1e-14) -> float:
    n = len(A)
    lo, hi = -bound, bound
    target = n if want == "max" else 1
    # smallest sigma with count_below(sigma) >= target is the extreme eigenvalue
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if count_below(A, B, mid) >= target:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _inverse_iteration(A, B, x, sigma: float, steps: int = 6):
    M = A - sigma * B
    for _ in range(steps):
        try:
            y = np.linalg.solve(M, B @ x)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(y)):
            break
        x = y / np.linalg.norm(y)
    return x


def rayleigh_search(
    n: int, want: str, restarts: int = 16, seed: int = 0, start=None
) -> RayleighResult:
    """Extremise delta^T A delta / delta^T B delta.

    The extreme eigenvalue is bracketed by bisection on inertia counts, and
    a witness delta is produced by inverse iteration from random starts
    (``start`` replaces the first one).  The reported value is the Rayleigh
    quotient of the best witness.
    """
    if restarts < 1:
        raise ValueError("restarts must be positive")
    if want not in ("max", "min"):
        raise ValueError(f"want must be 'max' or 'min', got {want!r}")
    A, B = _pencil(n)
    bound = np.linalg.norm(A) * np.linalg.norm(np.linalg.inv(B)) + 1.0
    lam = _bisect_extreme(A, B, want, bound)
    # shift a hair outside the spectrum so A - sigma B stays nonsingular
    sigma = lam + (1e-10 if want == "max" else -1e-10)
    better = (lambda u, v: u > v) if want == "max" else (lambda u, v: u < v)
    rng = np.random.default_rng(seed)
    best = None
    for r in range(restarts):
        x = np.asarray(start, dtype=float) if (start is not None and r == 0) else rng.standard_normal(n)
        x = _inverse_iteration(A, B, x / np.linalg.norm(x), sigma)
        val = _rq(A, B, x)
        if best is None or better(val, best.value):
            best = RayleighResult(val, x / np.sqrt(x @ B @ x), restarts)
    return best


def reconstruct_coeffs(delta) -> np.ndarray:
    """a_s = (gamma_s - gamma_{s+2}) / (gamma_1 - gamma_3), gamma the autocorrelation of delta."""
    d = np.asarray(delta, dtype=float)
    n = len(d)
    g = np.array([d[: n - s] @ d[s:] for s in range(n)] + [0.0, 0.0])
    norm = g[0] - g[2]
    if not norm > 1e-300:
        raise NormalizerVanishes(f"gamma_1 - gamma_3 = {norm}")
    return (g[:n] - g[2 : n + 2]) / norm


def determinant_sign_changes(n: int, samples: int = 20000) -> list[float]:
    """Abscissas x in (0, 1) where det(A - (4x^2 - 1) B) changes sign."""
    def f(x):
        return float(np.linalg.det(phi_matrix(n, float(x))))

    xs = np.linspace(0.0, 1.0, samples + 2)[1:-1]
    vals = np.array([f(x) for x in xs])
    roots = []
    for i in np.flatnonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0):
        lo, hi, flo = xs[i], xs[i + 1], vals[i]
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = f(mid)
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return roots
