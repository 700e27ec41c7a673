"""Coefficients of the extremal polynomials P(z) = z + a_2 z^2 + ... + a_N z^N.

Three independent routes produce the same coefficients:

``eigvec``
    Build gamma_s = sum_j z_j z_{j+s-1} from an explicit pencil eigenvector
    and normalise, a_s = (gamma_s - gamma_{s+2}) / (gamma_1 - gamma_3).
``recurrence``
    Two-step recurrences a_{2k+1} = -a_{2k-1} + (...) seeded with a_1 = 1
    (a_2 = 2 tau y^2 for even N); ratio-of-sums formulas for Amin/Cmin.
``closed``
    Explicit Chebyshev expressions for a_{2k+1} and a_{2k+2}; only available
    when y is a zero of U (not of U').

For even N the extremizers form a segment parametrised by tau in [-1, 1],
with a_2 = 2 tau y^2.  Mixing the two eigenvectors as alpha Z_1 + beta Z_2
gives tau = 2 alpha beta / (alpha^2 + beta^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cases import ExtremalCase, ParityMismatch, classify, critical_abscissa, half_length
from .chebyshev import eval_U, eval_U_prime
from .spectra import EigvecBasis, eigvec_basis, zeta_values

__all__ = [
    "DegenerateNormalizer",
    "UnsupportedCase",
    "NegativityDetected",
    "RootPairingFailure",
    "ROUTES",
    "Extremizer",
    "GammaChain",
    "gamma_from_vector",
    "coeffs_from_gamma",
    "coeffs_from_eigvec",
    "coeffs_recurrence",
    "coeffs_closed_form",
    "lift_odd_to_even",
    "fejer_riesz_factor",
    "extremizer",
    "classify",
]

ROUTES = ("eigvec", "recurrence", "closed", "compact")


class DegenerateNormalizer(ArithmeticError):
    pass


class UnsupportedCase(ValueError):
    pass


class NegativityDetected(ValueError):
    pass


class RootPairingFailure(RuntimeError):
    pass


@dataclass
class Extremizer:
    """An extremal polynomial; ``coeffs[j-1]`` is a_j."""

    case: ExtremalCase
    n: int
    y: float
    coeffs: np.ndarray
    tau: float = 0.0
    even_coeffs_unit: np.ndarray = field(default_factory=lambda: np.zeros(0))
    route: str = ""

    @property
    def a3(self) -> float:
        return float(self.coeffs[2])

    @property
    def odd_coeffs(self) -> np.ndarray:
        """a_1, a_3, a_5, ..."""
        return self.coeffs[0::2]

    @property
    def even_coeffs(self) -> np.ndarray:
        """a_2, a_4, ... at this tau."""
        return self.coeffs[1::2]

    @property
    def degree_drops(self) -> bool:
        """True where a_N vanishes (tau = 0 for even N), so the degree is below N."""
        return abs(self.coeffs[-1]) < 1e-14 * max(1.0, float(np.abs(self.coeffs).max()))


@dataclass
class GammaChain:
    gamma: np.ndarray
    delta: np.ndarray | None = None

    @classmethod
    def from_delta(cls, delta) -> "GammaChain":
        delta = np.asarray(delta, dtype=float)
        return cls(gamma_from_vector(delta), delta)

    def coeffs(self) -> np.ndarray:
        return coeffs_from_gamma(self.gamma)


def gamma_from_vector(z) -> np.ndarray:
    """gamma_s = sum_j z_j z_{j+s-1}, s = 1..N (autocorrelation)."""
    z = np.asarray(z, dtype=float)
    n = len(z)
    return np.array([z[: n - s] @ z[s:] for s in range(n)])


def coeffs_from_gamma(gamma) -> np.ndarray:
    g = np.concatenate([np.asarray(gamma, dtype=float), [0.0, 0.0]])
    norm = g[0] - g[2]
    if not norm > 0:
        raise DegenerateNormalizer(f"gamma_1 - gamma_3 = {norm} is not positive")
    return (g[:-2] - g[2:]) / norm


def _mix(basis: EigvecBasis, tau: float) -> np.ndarray:
    if basis.n % 2:
        return basis.vectors[0]
    if not -1.0 <= tau <= 1.0:
        raise ValueError(f"tau={tau} outside [-1, 1]")
    theta = 0.5 * math.asin(tau)
    return math.cos(theta) * basis.vectors[0] + math.sin(theta) * basis.vectors[1]


def coeffs_from_eigvec(basis: EigvecBasis, tau: float = 0.0) -> Extremizer:
    n = basis.n
    coeffs = coeffs_from_gamma(gamma_from_vector(_mix(basis, tau)))
    unit = np.zeros(0)
    if n % 2 == 0:
        unit = coeffs_from_gamma(gamma_from_vector(_mix(basis, 1.0)))[1::2]
    else:
        tau = 0.0
    return Extremizer(basis.case, n, basis.abscissa, coeffs, tau, unit, "eigvec")


# ---------------------------------------------------------------------------
# recurrences


def _star_sums(n: int, y: float) -> list[float]:
    """S_s = sum_j z_j z_{j+s} for the star zeta vector, s = 0..m+1."""
    z = np.array(zeta_values("star", half_length(n), y))
    m = len(z)
    return [float(z[: m - s] @ z[s:]) if s < m else 0.0 for s in range(m + 2)]


def _ratio_formulas(n: int, y: float, tau: float) -> tuple[np.ndarray, np.ndarray]:
    S = _star_sums(n, y)
    m = half_length(n)
    norm = S[0] - S[1]
    odd = np.array([(S[k - 1] - S[k]) / norm for k in range(1, m + 1)])
    even = np.zeros(0)
    if n % 2 == 0:
        # the mixing alpha*beta/(alpha^2+beta^2) equals tau/2
        even = np.array([0.5 * tau * (S[k - 1] - S[k + 1]) / norm for k in range(1, m + 1)])
    return odd, even


def _sign(case: ExtremalCase, n: int) -> int:
    if case is ExtremalCase.Bmin:
        return (-1) ** ((n - 1) // 4)
    if case is ExtremalCase.Dmin:
        return (-1) ** ((n - 2) // 4)
    return 1


def _recurrence_parts(case: ExtremalCase, n: int, y: float, tau: float):
    U, Up = eval_U, eval_U_prime
    odd_n = n % 2 == 1
    scale = n + 5 if odd_n else n + 4
    top = (n + 3) // 2 if odd_n else (n + 2) // 2
    sign = _sign(case, n)
    odd = [1.0]
    for k in range(1, half_length(n)):
        step = sign * 8 * (1 - y * y) * y / scale * U(k - 1, y) * Up(top - k, y)
        odd.append(-odd[-1] + step)
    even: list[float] = []
    if not odd_n:
        prev = 0.0
        for k in range(0, n // 2):
            bracket = U(k - 1, y) * Up(top - k, y) + U(k, y) * Up(n // 2 - k, y)
            prev = -prev + sign * tau * 4 * (1 - y * y) * y / scale * bracket
            even.append(prev)
    return np.array(odd), np.array(even)


def _interleave(n: int, odd: np.ndarray, even: np.ndarray) -> np.ndarray:
    out = np.zeros(n)
    out[0::2] = odd
    if len(even):
        out[1::2] = even
    return out


def coeffs_recurrence(case: ExtremalCase, n: int, tau: float = 0.0) -> Extremizer:
    case = ExtremalCase(case)
    case.check(n)
    y = critical_abscissa(case, n)
    tau = tau if n % 2 == 0 else 0.0
    if case.uses_derivative_root:
        odd, even = _ratio_formulas(n, y, tau)
        unit = _ratio_formulas(n, y, 1.0)[1]
    else:
        odd, even = _recurrence_parts(case, n, y, tau)
        unit = _recurrence_parts(case, n, y, 1.0)[1]
    return Extremizer(case, n, y, _interleave(n, odd, even), tau, unit, "recurrence")


# ---------------------------------------------------------------------------
# closed forms


def odd_closed(k: int, y: float, n: int) -> float:
    """a_{2k+1} as an explicit function of the critical abscissa."""
    U = eval_U
    alpha = 2 / (n + 5) if n % 2 else 2 / (n + 4)
    inner = (
        y
        + U(2 * k - 1, y) * (3 * y * y - 1) / (2 * y * y)
        - U(2 * k, y) * (k * (1 - y * y) + y * y) / y
    )
    return U(2 * k, y) + alpha * y / (1 - y * y) * inner


def even_closed(k: int, y: float, n: int) -> float:
    """a_{2k+2} at tau = 1, up to the case sign."""
    return 4 / (n + 4) * y * (1 - y * y) * eval_U(k, y) * eval_U_prime(n // 2 - k, y)


def coeffs_closed_form(case: ExtremalCase, n: int, tau: float = 0.0) -> Extremizer:
    case = ExtremalCase(case)
    if case.uses_derivative_root:
        raise UnsupportedCase(f"no closed form for {case.value}; use the recurrence route")
    case.check(n)
    y = critical_abscissa(case, n)
    odd = np.array([odd_closed(k, y, n) for k in range(half_length(n))])
    unit = np.zeros(0)
    if n % 2 == 0:
        unit = _sign(case, n) * np.array([even_closed(k, y, n) for k in range(n // 2)])
    else:
        tau = 0.0
    return Extremizer(case, n, y, _interleave(n, odd, tau * unit), tau, unit, "closed")


def lift_odd_to_even(p: Extremizer, tau: float) -> Extremizer:
    """P_{N+1}(z) = P_N(z) + tau/2 (P_N(z)(z + 1/z) - 1) for an odd-N extremizer."""
    if p.n % 2 == 0:
        raise ParityMismatch("lift needs an odd-degree extremizer")
    a = np.concatenate([[0.0], p.coeffs, [0.0]])  # a_0 .. a_{N+1}

    def lifted(t):
        b = a.copy()
        b[1:-1] += 0.5 * t * (a[:-2] + a[2:])
        b[-1] += 0.5 * t * a[-2]
        const = 0.5 * t * a[1] - 0.5 * t  # z^0 term; vanishes because a_1 = 1
        if abs(const) > 1e-12:
            raise ValueError("lift requires a_1 = 1")
        return b[1:]

    want = "max" if p.case.is_max else "min"
    case = classify(p.n + 1, want)
    coeffs = lifted(tau)
    unit = lifted(1.0)[1::2]
    return Extremizer(case, p.n + 1, p.y, coeffs, tau, unit, "lift")


# ---------------------------------------------------------------------------
# Fejer-Riesz


def fejer_riesz_factor(gamma, pair_tol: float = 1e-6, grid: int = 4096) -> np.ndarray:
    """delta with gamma_s = sum_j delta_j delta_{j+s-1}, by spectral factorisation.

    The cosine polynomial gamma_1 + 2 sum_{s>=2} gamma_s cos((s-1)t) must be
    nonnegative.  Roots of its Laurent polynomial come in pairs (r, 1/conj r);
    the roots inside the disc are kept, and roots on the circle (which have
    even multiplicity) contribute every second member.
    """
    gamma = np.asarray(gamma, dtype=float)
    n = len(gamma)
    t = np.linspace(0.0, np.pi, grid)
    values = gamma[0] + 2 * sum(gamma[s] * np.cos(s * t) for s in range(1, n))
    if values.min() < -1e-10 * max(1.0, abs(gamma[0])):
        raise NegativityDetected(f"cosine polynomial reaches {values.min():.3e}")
    if n == 1:
        return np.array([math.sqrt(gamma[0])])
    # ascending coefficients of z^{n-1} * L(z)
    laurent = np.concatenate([gamma[::-1], gamma[1:]])
    while len(laurent) > 1 and laurent[-1] == 0:
        laurent = laurent[1:-1]
    roots = np.roots(laurent[::-1])
    inside = [r for r in roots if abs(r) < 1 - pair_tol]
    circle = [r for r in roots if abs(abs(r) - 1) <= pair_tol]
    if len(circle) % 2:
        raise RootPairingFailure(f"{len(circle)} roots on the unit circle")
    while circle:
        a = circle.pop(0)
        j = min(range(len(circle)), key=lambda i: abs(circle[i] - a))
        b = circle.pop(j)
        if abs(a - b) > pair_tol ** 0.5:
            raise RootPairingFailure(f"unpaired unit-circle roots {a}, {b}")
        inside.append(0.5 * (a + b))
    monic = np.real(np.poly(inside))[::-1] if inside else np.array([1.0])
    delta = np.zeros(n)
    delta[: len(monic)] = monic
    scale = math.sqrt(gamma[0] / (delta @ delta))
    return scale * delta


# ---------------------------------------------------------------------------


def extremizer(n: int, want: str, tau: float = 0.0, route: str = "eigvec") -> Extremizer:
    """Extremal polynomial of degree ``n`` for ``want`` in {"max", "min"} via ``route``."""
    case = classify(n, want)
    if route == "eigvec":
        return coeffs_from_eigvec(eigvec_basis(case, n), tau)
    if route == "recurrence":
        return coeffs_recurrence(case, n, tau)
    if route == "closed":
        return coeffs_closed_form(case, n, tau)
    if route == "compact":
        from .compact import expand_to_polynomial

        return expand_to_polynomial(case, n, tau)
    raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
