"""Imaginary part of the extremizers on the unit circle.

Im P(e^{it}) = sum_j a_j sin(jt) has closed product forms.  With M as in the
compact module (N + 5 or N + 4):

    theta(t)     = 2y^2(1-y^2) / sin t * sin^2(M t / 2) / (M (cos^2 t - y^2)^2)
    theta_hat(t) = 2y^2(1-y^2) / sin^3 t * (b sin at - a sin bt)^2
                   / ((M-2) M (M+2) (cos^2 t - y^2)^2),   a = (M-2)/2, b = (M+2)/2

and even N multiplies either by (1 + tau cos t).  Both are visibly
nonnegative on [0, pi] for |tau| <= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .cases import ExtremalCase, critical_abscissa

__all__ = [
    "NegativityFound",
    "SineKernel",
    "NonnegativityCertificate",
    "kernel_for",
    "im_on_circle",
    "kernel_value",
    "certify_nonnegative",
    "golden_section_min",
    "royster_suffridge_R",
]

GRID = 8192
REFINE_WIDTH = 1e-10
LIMIT_OFFSET = 1e-6


class NegativityFound(ValueError):
    def __init__(self, witness: float, value: float):
        super().__init__(f"Im P(e^it) = {value:.3e} < 0 at t = {witness!r}")
        self.witness = witness
        self.value = value


@dataclass(frozen=True)
class SineKernel:
    kind: Literal["theta", "theta_hat"]
    n: int
    y: float

    @property
    def modulus(self) -> int:
        return self.n + 5 if self.n % 2 else self.n + 4

    @property
    def even(self) -> bool:
        return self.n % 2 == 0

    def removable_points(self) -> tuple[float, float]:
        t0 = math.acos(self.y)
        return t0, math.pi - t0


def kernel_for(case: ExtremalCase, n: int) -> SineKernel:
    case = ExtremalCase(case)
    kind = "theta_hat" if case.uses_derivative_root else "theta"
    return SineKernel(kind, n, critical_abscissa(case, n))


def _coeffs(p) -> np.ndarray:
    return np.asarray(getattr(p, "coeffs", p), dtype=float)


def im_on_circle(p, t):
    """sum_j a_j sin(j t); ``p`` is an Extremizer or a coefficient vector a_1..a_N."""
    a = _coeffs(p)
    t = np.asarray(t, dtype=float)
    j = np.arange(1, len(a) + 1)
    out = np.sin(np.multiply.outer(t, j)) @ a
    return float(out) if out.ndim == 0 else out


def _raw_kernel(k: SineKernel, t: float) -> float:
    y, M = k.y, k.modulus
    s = math.sin(t)
    gap = (math.cos(t) ** 2 - y * y) ** 2
    pref = 2 * y * y * (1 - y * y)
    if k.kind == "theta":
        return pref / s * math.sin(M * t / 2) ** 2 / (M * gap)
    a, b = (M - 2) / 2, (M + 2) / 2
    num = (b * math.sin(a * t) - a * math.sin(b * t)) ** 2
    return pref / s**3 * num / ((M - 2) * M * (M + 2) * gap)


def kernel_value(k: SineKernel, t: float, tau: float = 0.0) -> float:
    """Closed-form Im P(e^{it}); removable points are handled by two-sided averaging."""
    if t <= 0 or t >= math.pi:
        return 0.0
    for t0 in k.removable_points():
        if abs(t - t0) < LIMIT_OFFSET:
            v = 0.5 * (_raw_kernel(k, t0 - LIMIT_OFFSET) + _raw_kernel(k, t0 + LIMIT_OFFSET))
            break
    else:
        v = _raw_kernel(k, t)
    if k.even:
        v *= 1 + tau * math.cos(t)
    return v


def golden_section_min(f, lo: float, hi: float, width: float = REFINE_WIDTH) -> tuple[float, float]:
    inv = (math.sqrt(5) - 1) / 2
    c, d = hi - inv * (hi - lo), lo + inv * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > width:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - inv * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv * (hi - lo)
            fd = f(d)
    t = 0.5 * (lo + hi)
    return t, f(t)


@dataclass(frozen=True)
class NonnegativityCertificate:
    grid_size: int
    min_value: float
    min_location: float
    max_value: float
    refined: bool

    @property
    def passed(self) -> bool:
        return self.min_value >= -1e-10 * self.max_value

    def raise_if_failed(self) -> None:
        if not self.passed:
            raise NegativityFound(self.min_location, self.min_value)


def certify_nonnegative(p, grid: int = GRID) -> NonnegativityCertificate:
    """Grid scan of Im P(e^{it}) on [0, pi], refined at every local minimum."""
    a = _coeffs(p)
    t = np.linspace(0.0, math.pi, grid)
    v = im_on_circle(a, t)
    f = lambda s: im_on_circle(a, s)  # noqa: E731
    best_t, best_v = float(t[np.argmin(v)]), float(v.min())
    interior = np.flatnonzero((v[1:-1] <= v[:-2]) & (v[1:-1] <= v[2:])) + 1
    for i in interior:
        ts, vs = golden_section_min(f, float(t[i - 1]), float(t[i + 1]))
        if vs < best_v:
            best_t, best_v = ts, vs
    return NonnegativityCertificate(grid, best_v, best_t, float(v.max()), len(interior) > 0)


def royster_suffridge_R(p) -> list:
    """Power-basis coefficients of R(x) = 1 + sum_{j>=2} a_j U_{j-1}(x).

    R(cos t) sin t = Im P(e^{it}).  Coefficient type follows the input, so
    Fraction coefficients give an exact R.
    """
    a = list(getattr(p, "coeffs", p))
    if a[0] != 1:
        raise ValueError("a_1 must be 1")
    n = len(a)
    # U_j as power-basis lists via U_{j+1} = 2x U_j - U_{j-1}
    basis = [[1], [0, 2]]
    while len(basis) < n:
        prev, cur = basis[-2], basis[-1]
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        basis.append(nxt)
    out = [0 * a[0]] * n
    for j in range(1, n + 1):
        for i, c in enumerate(basis[j - 1]):
            out[i] += a[j - 1] * c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
