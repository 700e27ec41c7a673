"""The five-band quadratic-form pencil (A, B) and its determinant.

For a coefficient vector delta of length N the two quadratic forms are

    a3 form:         sum d_j d_{j+2} - sum d_j d_{j+4}      (matrix A)
    normalising:     sum d_j^2       - sum d_j d_{j+2}      (matrix B)

With lambda = 4x^2 - 1 the pencil matrix Phi_N(x) = A - lambda B has main
diagonal 1 - 4x^2, second off-diagonal 2x^2 and fourth off-diagonal -1/2.
Its determinant factors through Chebyshev polynomials; that identity is
checked exactly here by evaluating both sides at enough rational points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np

from .cases import ExtremalCase, classify, critical_abscissa
from .chebyshev import RootBracket, bisect, eval_U, eval_U_prime

__all__ = [
    "OrderTooSmall",
    "InsufficientSamples",
    "Pencil",
    "build_pencil",
    "phi_matrix",
    "d_matrix",
    "det_exact",
    "det_phi",
    "det_phi_formula",
    "det_d_formula",
    "block_permutation",
    "FactorizationReport",
    "verify_factorization",
    "Abscissas",
    "extremal_abscissas",
    "Bounds",
    "classical_bounds",
    "bounds",
]


class OrderTooSmall(ValueError):
    pass


class InsufficientSamples(ValueError):
    pass


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class Pencil:
    """Band description of (A, B); ``a_bands[d]`` is the value on the d-th off-diagonal."""

    n: int
    a_bands: dict = field(default_factory=lambda: {2: Fraction(1, 2), 4: Fraction(-1, 2)})
    b_bands: dict = field(default_factory=lambda: {0: Fraction(1), 2: Fraction(-1, 2)})

    @staticmethod
    def _dense(n, bands, exact):
        if exact:
            m = [[Fraction(0)] * n for _ in range(n)]
            for d, v in bands.items():
                for i in range(n - d):
                    m[i][i + d] = v
                    m[i + d][i] = v
            return m
        m = np.zeros((n, n))
        for d, v in bands.items():
            idx = np.arange(n - d)
            m[idx, idx + d] = float(v)
            m[idx + d, idx] = float(v)
        return m

    def a_dense(self, exact: bool = False):
        return self._dense(self.n, self.a_bands, exact)

    def b_dense(self, exact: bool = False):
        return self._dense(self.n, self.b_bands, exact)


def build_pencil(n: int) -> Pencil:
    if n < 3:
        raise OrderTooSmall(f"N={n}: a3 is undefined below N=3")
    return Pencil(n)


def _banded(n: int, bands: dict, exact: bool):
    return Pencil._dense(n, bands, exact)


def phi_matrix(n: int, x):
    """Phi_N(x) = A - (4x^2 - 1) B; exact (list of Fractions) for rational x."""
    lam = 4 * x * x - 1
    bands = {0: -lam, 2: Fraction(1, 2) + lam / 2, 4: Fraction(-1, 2)}
    if _is_exact(x):
        return _banded(n, {d: Fraction(v) for d, v in bands.items()}, True)
    return _banded(n, {d: float(v) for d, v in bands.items()}, False)


def d_matrix(n: int, x):
    """Pentadiagonal D_n(x): diagonal 1 - 4x^2, first off-diagonal 2x^2, second -1/2."""
    bands = {0: 1 - 4 * x * x, 1: 2 * x * x, 2: Fraction(-1, 2)}
    if _is_exact(x):
        return _banded(n, {d: Fraction(v) for d, v in bands.items()}, True)
    return _banded(n, {d: float(v) for d, v in bands.items()}, False)


def det_exact(rows) -> Fraction:
    """Determinant of a Fraction matrix by Bareiss elimination on the cleared integer matrix."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    denom = reduce(math.lcm, (Fraction(v).denominator for r in rows for v in r), 1)
    m = [[int(Fraction(v) * denom) for v in r] for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], denom**n)


def det_phi(n: int, x) -> Fraction:
    return det_exact(phi_matrix(n, Fraction(x)))


def det_phi_formula(n: int, x):
    """Closed-form det Phi_N(x) in terms of U and U' (x != 0)."""
    U, Up = eval_U, eval_U_prime
    if n % 2:
        h, g = (n + 1) // 2, (n + 3) // 2
        return -U(h, x) * Up(h, x) * U(g, x) * Up(g, x) / (2 ** (n + 4) * x * x)
    g = (n + 2) // 2
    return (U(g, x) * Up(g, x)) ** 2 / (2 ** (n + 4) * x * x)


def det_d_formula(n: int, x):
    """det D_n(x) = (-1)^n U_{n+1}(x) U'_{n+1}(x) / (2^{n+2} x)."""
    return (-1) ** n * eval_U(n + 1, x) * eval_U_prime(n + 1, x) / (2 ** (n + 2) * x)


def block_permutation(n: int) -> list[int]:
    """Odd slots first, then even slots (0-based: 0,2,4,..., 1,3,5,...).

    Conjugating Phi_N by this permutation gives diag(D_ceil(N/2), D_floor(N/2)).
    """
    return list(range(0, n, 2)) + list(range(1, n, 2))


@dataclass
class FactorizationReport:
    n: int
    samples: list
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def required_samples(n: int) -> int:
    # x^2 * det Phi_N is a polynomial of degree at most 2N+4
    return 2 * n + 5


def verify_factorization(n: int, sample_count: int | None = None) -> FactorizationReport:
    """Compare det Phi_N(x) with its closed form at ``sample_count`` rational x.

    Both sides times x^2 are polynomials of degree <= 2N+4, so agreement at
    2N+5 distinct points proves the identity for this N.
    """
    build_pencil(n)
    if sample_count is None:
        sample_count = required_samples(n) + 1
    if sample_count < required_samples(n):
        raise InsufficientSamples(
            f"N={n} needs at least {required_samples(n)} samples, got {sample_count}"
        )
    xs = [Fraction(i, sample_count + 1) for i in range(1, sample_count + 1)]
    report = FactorizationReport(n, xs)
    for x in xs:
        lhs = det_phi(n, x)
        rhs = det_phi_formula(n, x)
        if lhs != rhs:
            report.mismatches.append((n, x, lhs, rhs))
    return report


@dataclass(frozen=True)
class Abscissas:
    n: int
    x_max: float
    x_min: float
    max_case: ExtremalCase
    min_case: ExtremalCase


def extremal_abscissas(n: int) -> Abscissas:
    build_pencil(n)
    cmax, cmin = classify(n, "max"), classify(n, "min")
    return Abscissas(n, critical_abscissa(cmax, n), critical_abscissa(cmin, n), cmax, cmin)


def _theta_root(np_: int) -> float:
    """Smallest positive root of (n'+4) cos((n'+2)t/2) + (n'+2) cos((n'+4)t/2)."""

    def f(t):
        return (np_ + 4) * math.cos((np_ + 2) * t / 2) + (np_ + 2) * math.cos((np_ + 4) * t / 2)

    step = math.pi / (64 * (np_ + 4))
    lo = 0.0
    while lo < 2 * math.pi:
        hi = lo + step
        if (f(lo) > 0) != (f(hi) > 0):
            return bisect(f, RootBracket(lo, hi), 1e-15)
        lo = hi
    raise RuntimeError(f"no root found for n'={np_}")


def classical_bounds(n: int) -> tuple[float, float]:
    """(lower, upper) in the trigonometric form with n' = floor((N-1)/2)."""
    np_ = (n - 1) // 2
    upper = 1 + 2 * math.cos(2 * math.pi / (np_ + 3))
    if np_ % 2 == 0:
        lower = 1 - 2 * math.cos(math.pi / (np_ + 3))
    else:
        lower = 1 - 2 * math.cos(_theta_root(np_))
    return lower, upper


@dataclass(frozen=True)
class Bounds:
    n: int
    a3_min: float
    a3_max: float
    x_min: float
    x_max: float
    min_case: ExtremalCase
    max_case: ExtremalCase
    cross_check: float

    @property
    def agrees(self) -> bool:
        return self.cross_check < 1e-10


def bounds(n: int) -> Bounds:
    ab = extremal_abscissas(n)
    lo, hi = 4 * ab.x_min**2 - 1, 4 * ab.x_max**2 - 1
    c_lo, c_hi = classical_bounds(n)
    resid = max(abs(lo - c_lo), abs(hi - c_hi))
    return Bounds(n, lo, hi, ab.x_min, ab.x_max, ab.min_case, ab.max_case, resid)
