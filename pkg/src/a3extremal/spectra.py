"""Explicit eigenvectors of the pencil at its extreme eigenvalues.

The eigenvectors are interleavings of a short vector zeta_1..zeta_m with
zeros.  For the U-root cases zeta_k = U_{k-1} U_k; for the U'-root cases
(Amin, Cmin) a corrected "star" form is used,

    zeta*_k = U_{k-1}U_k - U_{m-k}U_{m+1-k} + (1 - 2k/(m+1)) U_m U_{m+1},

with m the half length.  Odd N has a single vector (odd slots); even N has
two with disjoint supports (odd slots and even slots).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .cases import ExtremalCase, ParityMismatch, critical_abscissa, half_length
from .chebyshev import eval_U, zeros_U_prime
from .pencil import build_pencil, d_matrix, phi_matrix

__all__ = [
    "NullityFailure",
    "ZetaFamily",
    "EigvecBasis",
    "zeta",
    "zeta_values",
    "eigvec_basis",
    "NullityReport",
    "verify_d_nullity",
]

NULLITY_TOL = 1e-9


class NullityFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class ZetaFamily:
    kind: Literal["plain", "star"]
    half_length: int
    values: np.ndarray


def zeta_values(kind: str, m: int, x) -> list:
    """zeta_1..zeta_m at x (works on exact or float x)."""
    U = eval_U
    if kind == "plain":
        return [U(k - 1, x) * U(k, x) for k in range(1, m + 1)]
    if kind == "star":
        tail = U(m, x) * U(m + 1, x)
        return [
            U(k - 1, x) * U(k, x) - U(m - k, x) * U(m + 1 - k, x) + (1 - 2 * k / (m + 1)) * tail
            for k in range(1, m + 1)
        ]
    raise ValueError(f"unknown zeta kind {kind!r}")


def zeta(kind: str, n: int, x: float) -> ZetaFamily:
    build_pencil(n)
    if kind == "star":
        needed = ExtremalCase.Amin if n % 2 else ExtremalCase.Cmin
        if not needed.admits(n):
            raise ParityMismatch(f"star family needs (N+3)/2 or (N+2)/2 odd; N={n}")
    m = half_length(n)
    return ZetaFamily(kind, m, np.array(zeta_values(kind, m, float(x)), dtype=float))


@dataclass
class EigvecBasis:
    case: ExtremalCase
    n: int
    abscissa: float
    eigenvalue: float
    vectors: list[np.ndarray]
    residuals: list[float] = field(default_factory=list)


def _relative_residual(mat: np.ndarray, v: np.ndarray) -> float:
    return float(np.abs(mat @ v).max() / np.abs(v).max())


def _scaled_residual(mat: np.ndarray, v: np.ndarray) -> float:
    # the zeta vector vanishes identically at some abscissas (e.g. x = 0)
    return float(np.abs(mat @ v).max() / max(1.0, np.abs(v).max()))


def eigvec_basis(case: ExtremalCase, n: int) -> EigvecBasis:
    case = ExtremalCase(case)
    case.check(n)
    y = critical_abscissa(case, n)
    kind = "star" if case.uses_derivative_root else "plain"
    z = zeta(kind, n, y).values
    z1 = np.zeros(n)
    z1[0::2] = z
    vectors = [z1]
    if n % 2 == 0:
        z2 = np.zeros(n)
        z2[1::2] = z
        vectors.append(z2)
    phi = phi_matrix(n, y)
    residuals = [_relative_residual(phi, v) for v in vectors]
    worst = max(residuals)
    if worst >= NULLITY_TOL:
        raise NullityFailure(f"{case.value} N={n}: |Phi Z|/|Z| = {worst:.3e}")
    return EigvecBasis(case, n, y, 4 * y * y - 1, vectors, residuals)


@dataclass
class NullityReport:
    n: int
    plain: list = field(default_factory=list)  # (x, residual)
    star: list = field(default_factory=list)  # (nu, residual)

    @property
    def worst(self) -> float:
        return max([r for _, r in self.plain + self.star], default=0.0)

    @property
    def passed(self) -> bool:
        return self.worst < NULLITY_TOL


def verify_d_nullity(n: int) -> NullityReport:
    """D_n(x) annihilates the plain zeta vector at x = cos(pi j/(n+2)), j = 1..n+1,
    and the star zeta vector at every zero of U'_{n+1}."""
    if n < 1:
        raise ValueError("n must be positive")
    report = NullityReport(n)
    for j in range(1, n + 2):
        x = float(np.cos(np.pi * j / (n + 2)))
        v = np.array(zeta_values("plain", n, x))
        report.plain.append((x, _scaled_residual(d_matrix(n, x), v)))
    for nu in zeros_U_prime(n + 1):
        v = np.array(zeta_values("star", n, nu))
        report.star.append((nu, _scaled_residual(d_matrix(n, nu), v)))
    return report
