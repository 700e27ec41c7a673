"""Extremal typically-real polynomials for the third coefficient."""

from .cases import ExtremalCase, ParityMismatch, classify, critical_abscissa
from .extremizer import Extremizer, extremizer
from .pencil import Bounds, bounds

__all__ = [
    "Bounds",
    "ExtremalCase",
    "Extremizer",
    "ParityMismatch",
    "bounds",
    "classify",
    "critical_abscissa",
    "extremizer",
]
