"""Classical and free Meixner orthogonal polynomials.

Exact-arithmetic tools for the five Meixner families in both the classical
and the free setting: recurrence coefficients and measures, polynomial and
power-series algebra, cumulants over set and non-crossing partitions, and
the lowering and raising operators in each of their representations.
"""

from .params import Framework, MeixnerCase, MeixnerParams, alpha_beta, classical, classify, default_grid, free
from .scalars import QuadraticSurd, as_scalar, format_scalar

__all__ = [
    "Framework",
    "MeixnerCase",
    "MeixnerParams",
    "QuadraticSurd",
    "alpha_beta",
    "as_scalar",
    "classical",
    "classify",
    "default_grid",
    "format_scalar",
    "free",
]

__version__ = "0.1.0"
