"""Pole-free rational representations of the extremizers.

With Q(z) = 1 + z^4 + 2(1 - 2y^2) z^2 = (1 + z^2 - 2yz)(1 + z^2 + 2yz) and
M = N + 5 (N odd) or N + 4 (N even):

    G1 = 32 y^2 (1 - y^2) z^5 (1 - z^M) / (M (1 - z^2) Q^2)
    G2 = (z + z^3) / Q
    G3 = -32 y^2 (1 - y^2) z^7 [ (M+2)^2 (1 - z^(M-2)) + (M-2)^2 (1 - z^(M+2))
                                 - 2 (M-2)(M+2)(z^2 - z^M) ]
         / ((M-2) M (M+2) (1 - z^2)^3 Q^2)
    G4 = (z + z^3)(1 + z^8 - 4y^2 (z^2 + z^6) + g2 z^4) / ((1 - z^2)^2 Q^2)

where g2 = 2(-16 y^4 / M + 4 (1 + 4/M) y^2 - 1).  G1 + G2 gives the
U-root extremizers, G3 + G4 the U'-root ones (Amin, Cmin); even N multiplies
by 1 + tau (z + 1/z)/2 and subtracts tau/2.  Every pole at 0, +-1 and the
zeros of Q is removable, so the Maclaurin series terminates at z^N.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import poly
from .cases import ExtremalCase, critical_abscissa
from .extremizer import Extremizer

__all__ = [
    "TailNonvanishing",
    "NonunitLeading",
    "CertificateFailure",
    "PreconditionViolated",
    "RationalRep",
    "SingularityReport",
    "q_poly",
    "q_factorization_residual",
    "build_G",
    "combine",
    "expand_series",
    "expand_to_polynomial",
    "certify_removability",
    "sine_pair_identities",
]

TAIL_TOL = 1e-9
LOCAL_TOL = 1e-8


class TailNonvanishing(ArithmeticError):
    pass


class NonunitLeading(ArithmeticError):
    pass


class CertificateFailure(ArithmeticError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass
class RationalRep:
    """numerator / ((1 - z^2)^omz_power * Q^q_power)."""

    label: str
    numerator: list
    omz_power: int
    q_power: int
    y: object

    @property
    def denominator(self) -> list:
        return poly.mul(poly.power([1, 0, -1], self.omz_power), poly.power(q_poly(self.y), self.q_power))


def q_poly(y) -> list:
    return [1, 0, 2 * (1 - 2 * y * y), 0, 1]


def q_factorization_residual(y) -> list:
    """Q(z) - (1 + z^2 - 2yz)(1 + z^2 + 2yz); the zero polynomial."""
    return poly.trim(poly.sub(q_poly(y), poly.mul([1, -2 * y, 1], [1, 2 * y, 1])))


def _modulus(n: int) -> int:
    return n + 5 if n % 2 else n + 4


def build_G(label: str, n: int, y) -> RationalRep:
    if n < 3:
        raise ValueError("N must be at least 3")
    M = _modulus(n)
    c = 32 * y * y * (1 - y * y)
    if label == "G1":
        num = poly.shift(poly.sub([1], poly.monomial(M)), 5)
        return RationalRep(label, poly.scale(num, c / M), 1, 2, y)
    if label == "G2":
        return RationalRep(label, [0, 1, 0, 1], 0, 1, y)
    if label == "G3":
        lo, hi = M - 2, M + 2
        bracket = poly.add(
            poly.add(
                poly.scale(poly.sub([1], poly.monomial(lo)), hi * hi),
                poly.scale(poly.sub([1], poly.monomial(hi)), lo * lo),
            ),
            poly.scale(poly.sub(poly.monomial(2), poly.monomial(M)), -2 * lo * hi),
        )
        return RationalRep(label, poly.scale(poly.shift(bracket, 7), -c / (lo * M * hi)), 3, 2, y)
    if label == "G4":
        g1 = 4 * y * y
        g2 = 2 * (-16 * y**4 / M + 4 * (1 + Fraction(4, M)) * y * y - 1)
        inner = [1, 0, -g1, 0, g2, 0, -g1, 0, 1]
        return RationalRep(label, poly.mul([0, 1, 0, 1], inner), 2, 2, y)
    raise ValueError(f"unknown label {label!r}")


def combine(reps: list[RationalRep]) -> RationalRep:
    """Sum over the common denominator (1 - z^2)^k Q^q."""
    k = max(r.omz_power for r in reps)
    q = max(r.q_power for r in reps)
    y = reps[0].y
    total: list = [0]
    for r in reps:
        lift = poly.mul(poly.power([1, 0, -1], k - r.omz_power), poly.power(q_poly(y), q - r.q_power))
        total = poly.add(total, poly.mul(r.numerator, lift))
    return RationalRep("+".join(r.label for r in reps), total, k, q, y)


def _labels(case: ExtremalCase) -> tuple[str, str]:
    return ("G3", "G4") if case.uses_derivative_root else ("G1", "G2")


def case_rep(case: ExtremalCase, n: int, y=None) -> RationalRep:
    case = ExtremalCase(case)
    case.check(n)
    if y is None:
        y = critical_abscissa(case, n)
    return combine([build_G(lbl, n, y) for lbl in _labels(case)])


def expand_series(case: ExtremalCase, n: int, tau: float = 0.0, extra: int = 16) -> np.ndarray:
    """Coefficients of z^0 .. z^(N+extra) of the case's combination."""
    rep = case_rep(case, n)
    order = n + extra + 1
    # fold (1 - z^2)^(-k) into the numerator, then divide by Q^q (Q(0) = 1)
    num = poly.mul(rep.numerator, poly.inverse_one_minus_z2(rep.omz_power, order))[: order + 1]
    s = np.array(poly.series_div(num, poly.power(q_poly(rep.y), rep.q_power), order), dtype=float)
    if n % 2 == 0:
        if abs(s[0]) > TAIL_TOL:
            raise TailNonvanishing(f"z^-1 term {tau * s[0] / 2} does not cancel")
        t = s.copy()
        t[1:] += 0.5 * tau * s[:-1]
        t[:-1] += 0.5 * tau * s[1:]
        t[0] -= 0.5 * tau
        s = t
    return s[: n + extra + 1]


def _checked(case: ExtremalCase, n: int, tau: float, extra: int) -> np.ndarray:
    s = expand_series(case, n, tau, extra)
    scale = max(1.0, float(np.abs(s[1 : n + 1]).max()))
    if abs(s[0]) > TAIL_TOL * scale:
        raise TailNonvanishing(f"constant term {s[0]:.3e}")
    if abs(s[1] - 1) > TAIL_TOL:
        raise NonunitLeading(f"a_1 = {s[1]!r}")
    tail = float(np.abs(s[n + 1 :]).max())
    if tail > TAIL_TOL * scale:
        raise TailNonvanishing(f"{case.value} N={n}: series tail {tail:.3e} beyond z^{n}")
    return s


def expand_to_polynomial(case: ExtremalCase, n: int, tau: float = 0.0, extra: int = 16) -> Extremizer:
    case = ExtremalCase(case)
    tau = tau if n % 2 == 0 else 0.0
    s = _checked(case, n, tau, extra)
    unit = np.zeros(0)
    if n % 2 == 0:
        unit = _checked(case, n, 1.0, extra)[2 : n + 1 : 2] - _checked(case, n, 0.0, extra)[2 : n + 1 : 2]
    y = critical_abscissa(case, n)
    return Extremizer(case, n, y, s[1 : n + 1].copy(), tau, unit, "compact")


@dataclass
class SingularityReport:
    case: ExtremalCase
    n: int
    residual_tail: float
    points: list = field(default_factory=list)  # (z, multiplicity, worst scaled residual)

    @property
    def local_residual(self) -> float:
        return max((r for _, _, r in self.points), default=0.0)

    @property
    def passed(self) -> bool:
        return self.residual_tail < TAIL_TOL and self.local_residual < LOCAL_TOL


def _vanishing_order_residual(p: list, z: complex, multiplicity: int) -> float:
    """max_j<mult |p^(j)(z)| / sum_i |c_i| i^j  (relative to the natural bound)."""
    worst = 0.0
    d = list(p)
    for j in range(multiplicity):
        bound = sum(abs(c) * math.perm(i, j) for i, c in enumerate(p)) or 1.0
        worst = max(worst, abs(poly.evaluate(d, z)) / bound)
        d = poly.derivative(d)
    return worst


def certify_removability(case: ExtremalCase, n: int, tau: float = 1.0) -> SingularityReport:
    """Series-tail certificate plus local vanishing of the numerator at every pole.

    The numerator must vanish at +-1 to the order of the (1 - z^2) factor
    (one, or three for Amin/Cmin), to order two at the zeros of Q, and for
    even N at z = 0 as well (the z^(-1) introduced by the tau factor).
    """
    case = ExtremalCase(case)
    case.check(n)
    tau = tau if n % 2 == 0 else 0.0
    s = expand_series(case, n, tau)
    scale = max(1.0, float(np.abs(s[1 : n + 1]).max()))
    tail = max(float(np.abs(s[n + 1 :]).max()), abs(float(s[0]))) / scale
    rep = case_rep(case, n)
    num = [complex(c) for c in rep.numerator]
    candidates = []
    if n % 2 == 0:
        den = [complex(c) for c in rep.denominator]
        # z * (total) = num * (tau/2 + z + tau/2 z^2) - (tau/2) z den
        num = poly.sub(poly.mul(num, [tau / 2, 1, tau / 2]), poly.shift(poly.scale(den, tau / 2), 1))
        candidates.append((0j, 1))
    candidates += [(1 + 0j, rep.omz_power), (-1 + 0j, rep.omz_power)]
    alpha = math.acos(float(rep.y))
    for z in (cmath.exp(1j * alpha), cmath.exp(-1j * alpha), -cmath.exp(1j * alpha), -cmath.exp(-1j * alpha)):
        candidates.append((z, rep.q_power))
    report = SingularityReport(case, n, tail)
    for z, mult in candidates:
        report.points.append((z, mult, _vanishing_order_residual(num, z, mult)))
    return report


def sine_pair_identities(a: float, b: float, t: float, tol: float = 1e-12) -> dict[str, float]:
    """Four consequences of b sin(at) = a sin(bt); returns each left-hand side."""
    premise = b * math.sin(a * t) - a * math.sin(b * t)
    if abs(premise) > tol:
        raise PreconditionViolated(f"b sin(at) - a sin(bt) = {premise:.3e}")
    s, c = math.sin, math.cos
    return {
        "square": b * b * (1 - c(2 * a * t)) + a * a * (1 - c(2 * b * t))
        - 2 * a * b * (c((a - b) * t) - c((a + b) * t)),
        "double_sine": b * b * s(2 * a * t) + a * a * s(2 * b * t) - 2 * a * b * s((a + b) * t),
        "linear_sine": b * s(2 * a * t) + a * s(2 * b * t) - (a + b) * s((a + b) * t)
        + (b - a) * s((b - a) * t),
        "linear_cosine": b * c(2 * a * t) + a * c(2 * b * t) - (a + b) * c((a + b) * t)
        + (a + b) * (-1 + c((a - b) * t)),
    }
