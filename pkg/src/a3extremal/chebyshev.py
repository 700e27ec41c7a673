"""Chebyshev polynomials of the second kind.

Evaluation is by the three-term recurrence and works on any numeric type
that supports ``+``, ``-`` and ``*``: ints and :class:`fractions.Fraction`
give exact results, floats and numpy arrays give IEEE results.

Zeros of ``U_m`` are taken from the closed form ``cos(k*pi/(m+1))``.  Zeros of
``U'_m`` are located by bisection inside brackets built from the zeros of
``U_m`` and ``U_{m-1}`` (interlacing), never by companion matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal

__all__ = [
    "BracketError",
    "NoPositiveRoot",
    "RootBracket",
    "IdentityReport",
    "eval_U",
    "eval_U_prime",
    "u_prime_closed",
    "zeros_U",
    "max_root_U",
    "min_positive_root_U",
    "bisect",
    "lemma_bracket",
    "min_positive_root_U_prime",
    "zeros_U_prime",
    "interlacing",
    "identity_suite",
]


class NoPositiveRoot(ValueError):
    """The requested polynomial has no zero in (0, 1)."""


class BracketError(RuntimeError):
    """A bracket that should contain a sign change does not."""


def eval_U(j: int, x):
    """U_j(x) by U_{j+1} = 2x U_j - U_{j-1}, U_0 = 1, U_{-1} = 0."""
    if j < 0:
        return x * 0
    prev, cur = x * 0, x * 0 + 1
    for _ in range(j):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def eval_U_prime(j: int, x):
    """U'_j(x) from the differentiated recurrence.

    U'_{j+1} = 2 U_j + 2x U'_j - U'_{j-1}.  Exact for rational input and
    regular at x = +-1, where it reproduces U'_j(1) = j(j+1)(j+2)/3.
    """
    if j <= 0:
        return x * 0
    u_prev, u = x * 0, x * 0 + 1
    d_prev, d = x * 0, x * 0
    for _ in range(j):
        u_prev, u, d_prev, d = u, 2 * x * u - u_prev, d, 2 * u + 2 * x * d - d_prev
    return d


def u_prime_closed(j: int, x):
    """U'_j(x) = ((j+2) U_{j-1} - j U_{j+1}) / (2(1-x^2)), limit at x = +-1."""
    if x == 1 or x == -1:
        sign = 1 if x == 1 or j % 2 == 1 else -1
        limit = Fraction(j * (j + 1) * (j + 2), 3)
        value = sign * limit
        return value if isinstance(x, (int, Fraction)) else float(value)
    return ((j + 2) * eval_U(j - 1, x) - j * eval_U(j + 1, x)) / (2 * (1 - x * x))


def zeros_U(m: int) -> list[float]:
    """All zeros of U_m in decreasing order."""
    return [math.cos(k * math.pi / (m + 1)) for k in range(1, m + 1)]


def max_root_U(m: int) -> float:
    if m < 1:
        raise ValueError("U_0 has no zeros")
    return math.cos(math.pi / (m + 1))


def min_positive_root_U(m: int) -> float:
    """Smallest positive zero of U_m; sin(pi/(2(m+1))) for even m."""
    if m < 2:
        raise NoPositiveRoot(f"U_{m} has no positive zero")
    if m % 2 == 0:
        return math.sin(math.pi / (2 * (m + 1)))
    # odd m: cos(k pi/(m+1)) with k = (m+1)/2 is the zero at the origin
    return math.cos((m // 2) * math.pi / (m + 1))


@dataclass(frozen=True)
class RootBracket:
    lo: float
    hi: float
    kind: Literal["U", "U_prime"] = "U_prime"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def bisect(f: Callable[[float], float], bracket: RootBracket, tol: float = 1e-14) -> float:
    """Plain bisection; ``f`` must change sign on the bracket."""
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lemma_bracket(m: int) -> RootBracket:
    """Bracket for the smallest positive zero of U'_m from zero interlacing.

    Odd m:  eta(m) < xi(m-1), and U'_m(0) != 0, so the zero lies in (0, xi(m-1)).
    Even m: xi(m) < eta(m-1) < eta(m) < xi(m-1), so it lies in (xi(m), xi(m-1)).
    Here xi(j), eta(j) are the smallest positive zeros of U_j and U'_j.
    """
    if m < 3:
        raise NoPositiveRoot(f"U'_{m} has no positive zero")
    upper = min_positive_root_U(m - 1)
    lower = 0.0 if m % 2 == 1 else min_positive_root_U(m)
    return RootBracket(lower, upper, "U_prime")


def min_positive_root_U_prime(m: int, tol: float = 1e-14) -> float:
    bracket = lemma_bracket(m)
    return bisect(lambda x: eval_U_prime(m, x), bracket, tol)


def zeros_U_prime(m: int, tol: float = 1e-14) -> list[float]:
    """All m-1 zeros of U'_m, one between each pair of adjacent zeros of U_m."""
    z = zeros_U(m)
    return [
        bisect(lambda x: eval_U_prime(m, x), RootBracket(z[i + 1], z[i]), tol)
        for i in range(m - 1)
    ]


def interlacing(k: int) -> dict:
    """Check the ordering of smallest positive zeros of U_k, U_{k-1}, U'_k, U'_{k-1}.

    Roots that do not exist (U'_2 has none) are reported as ``None`` and the
    comparisons involving them are skipped.
    """

    def xi(j):
        try:
            return min_positive_root_U(j)
        except NoPositiveRoot:
            return None

    def eta(j):
        try:
            return min_positive_root_U_prime(j)
        except NoPositiveRoot:
            return None

    vals = {"xi_k": xi(k), "xi_km1": xi(k - 1), "eta_k": eta(k), "eta_km1": eta(k - 1)}
    if k % 2 == 1:
        chain = [vals["eta_k"], vals["xi_km1"], vals["xi_k"], vals["eta_km1"]]
    else:
        chain = [vals["xi_k"], vals["eta_km1"], vals["eta_k"], vals["xi_km1"]]
    present = [v for v in chain if v is not None]
    vals["holds"] = all(a < b for a, b in zip(present, present[1:]))
    return vals


# ---------------------------------------------------------------------------
# identity corpus


@dataclass
class IdentityReport:
    k: int
    x: object
    n: int | None
    residuals: dict[str, object] = field(default_factory=dict)

    def max_residual(self) -> float:
        vals = [abs(float(r)) for r in self.residuals.values()]
        return max(vals) if vals else 0.0

    def exact_zero(self, names=("alt_odd", "alt_weighted", "alt_squares")) -> bool:
        return all(self.residuals[nm] == 0 for nm in names if nm in self.residuals)


def _alternating_sums(k: int, x) -> dict[str, object]:
    U = eval_U
    sgn = -1 if k % 2 else 1
    lhs_a = sum((-1) ** j * U(2 * j - 1, x) for j in range(1, k + 1))
    rhs_a = sgn * (U(2 * k, x) - sgn) / (2 * x)
    lhs_b = sum((-1) ** j * j * U(2 * j - 1, x) for j in range(1, k + 1))
    rhs_b = sgn * ((k + 1) * U(2 * k - 1, x) + k * U(2 * k + 1, x)) / (4 * x * x)
    lhs_c = sum((-1) ** j * U(j - 1, x) ** 2 for j in range(1, k + 1))
    rhs_c = sgn * U(k - 1, x) * U(k, x) / (2 * x)
    return {"alt_odd": lhs_a - rhs_a, "alt_weighted": lhs_b - rhs_b, "alt_squares": lhs_c - rhs_c}


def _special_abscissa_identities(k: int, n: int) -> dict[str, float]:
    U, Up = eval_U, eval_U_prime
    out: dict[str, float] = {}

    def product(y, top, sign):
        lhs = U(k - 1, y) * Up(top - k, y)
        rhs = sign / (2 * (1 - y * y)) * ((top - k) * U(2 * k - 1, y) + 2 * U(k - 1, y) * U(k, y))
        return lhs - rhs

    if n % 2 == 1:
        m = (n + 1) // 2
        y = math.cos(2 * math.pi / (n + 5))
        ys = math.sin(math.pi / (n + 5))
        if 0 <= k <= m + 1:
            out["reflection"] = U(m - k, y) - U(k, y)
            if m % 2 == 1:
                out["reflection_signed"] = U(m - k, ys) - (-1) ** ((n - 1) // 4) * U(k, ys)
        if 1 <= k <= m:
            out["product"] = product(y, m + 1, 1)
            if m % 2 == 1:
                out["product_signed"] = product(ys, m + 1, (-1) ** ((n - 1) // 4))
    else:
        m = n // 2
        y = math.cos(2 * math.pi / (n + 4))
        ys = math.sin(math.pi / (n + 4))
        even_branch = ((n - 2) // 2) % 2 == 0
        if 0 <= k <= m + 1:
            out["reflection"] = U(m - k, y) - U(k, y)
            if even_branch:
                out["reflection_signed"] = U(m - k, ys) - (-1) ** ((n - 2) // 4) * U(k, ys)
        if 1 <= k <= m:
            out["product"] = product(y, m + 1, 1)
            if even_branch:
                out["product_signed"] = product(ys, m + 1, (-1) ** ((n - 2) // 4))
    return out


def identity_suite(k: int, x, n: int | None = None) -> IdentityReport:
    """Residuals of the Chebyshev identity families used by the coefficient formulas.

    The alternating-sum identities (``alt_*``) are evaluated at ``x`` and are
    exact when ``x`` is a Fraction:

        sum_{j<=k} (-1)^j U_{2j-1}   = (-1)^k (U_{2k} - (-1)^k) / (2x)
        sum_{j<=k} (-1)^j j U_{2j-1} = (-1)^k ((k+1) U_{2k-1} + k U_{2k+1}) / (4x^2)
        sum_{j<=k} (-1)^j U_{j-1}^2  = (-1)^k U_{k-1} U_k / (2x)

    The reflection identities U_{m-k}(y) = +-U_k(y) and the product identities
    for U_{k-1}(y) U'_{m+1-k}(y) live at the special abscissas cos(2pi/(n+5)),
    sin(pi/(n+5)) (odd n) or cos(2pi/(n+4)), sin(pi/(n+4)) (even n); they are
    included only when ``n`` is given and only for the parities where the sign
    exponent is an integer.
    """
    if k < 1:
        raise ValueError("k must be positive")
    report = IdentityReport(k=k, x=x, n=n)
    if x != 0 and x * x != 1:
        report.residuals.update(_alternating_sums(k, x))
    if n is not None:
        report.residuals.update(_special_abscissa_identities(k, n))
    return report
