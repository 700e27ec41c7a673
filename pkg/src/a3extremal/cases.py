"""The six extremal problems and their critical abscissas.

Which problem applies depends on the parity of the degree N and of
(N+3)/2 (odd N) or (N+2)/2 (even N).  Each case fixes the abscissa y at which
the extremal value of a3 is 4y^2 - 1.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache

from .chebyshev import min_positive_root_U_prime

__all__ = ["ExtremalCase", "ParityMismatch", "classify", "critical_abscissa", "half_length"]


class ParityMismatch(ValueError):
    """The case's parity predicates do not hold for the given degree."""


class ExtremalCase(str, enum.Enum):
    AmaxBmax = "AmaxBmax"
    CmaxDmax = "CmaxDmax"
    Amin = "Amin"
    Bmin = "Bmin"
    Cmin = "Cmin"
    Dmin = "Dmin"

    @property
    def is_max(self) -> bool:
        return self in (ExtremalCase.AmaxBmax, ExtremalCase.CmaxDmax)

    @property
    def uses_derivative_root(self) -> bool:
        """Amin/Cmin: the abscissa is a zero of U', not of U."""
        return self in (ExtremalCase.Amin, ExtremalCase.Cmin)

    def admits(self, n: int) -> bool:
        if n < 3:
            return False
        odd = n % 2 == 1
        if self is ExtremalCase.AmaxBmax:
            return odd
        if self is ExtremalCase.CmaxDmax:
            return not odd
        if self is ExtremalCase.Amin:
            return odd and ((n + 3) // 2) % 2 == 1
        if self is ExtremalCase.Bmin:
            return odd and ((n + 3) // 2) % 2 == 0
        if self is ExtremalCase.Cmin:
            return not odd and ((n + 2) // 2) % 2 == 1
        return not odd and ((n + 2) // 2) % 2 == 0

    def check(self, n: int) -> None:
        if not self.admits(n):
            raise ParityMismatch(f"case {self.value} does not apply to N={n}")


def classify(n: int, want: str) -> ExtremalCase:
    """Case tag for degree ``n`` and ``want`` in {"max", "min"}."""
    if n < 3:
        raise ValueError("a3 needs degree N >= 3")
    if want not in ("max", "min"):
        raise ValueError(f"want must be 'max' or 'min', got {want!r}")
    candidates = [c for c in ExtremalCase if c.is_max == (want == "max") and c.admits(n)]
    assert len(candidates) == 1
    return candidates[0]


def half_length(n: int) -> int:
    """Number of nonzero slots in an interleaved eigenvector: (N+1)/2 or N/2."""
    return (n + 1) // 2 if n % 2 else n // 2


@lru_cache(maxsize=None)
def critical_abscissa(case: ExtremalCase, n: int) -> float:
    case = ExtremalCase(case)
    case.check(n)
    if case is ExtremalCase.AmaxBmax:
        return math.cos(2 * math.pi / (n + 5))
    if case is ExtremalCase.CmaxDmax:
        return math.cos(2 * math.pi / (n + 4))
    if case is ExtremalCase.Bmin:
        return math.sin(math.pi / (n + 5))
    if case is ExtremalCase.Dmin:
        return math.sin(math.pi / (n + 4))
    if case is ExtremalCase.Amin:
        return min_positive_root_U_prime((n + 3) // 2)
    return min_positive_root_U_prime((n + 2) // 2)
