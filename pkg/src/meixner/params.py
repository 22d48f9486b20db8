"""Meixner parameters, the five-case classification and the (alpha, beta) factorization."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .scalars import QuadraticSurd, Scalar, as_scalar, is_exact


class Framework(str, Enum):
    CLASSICAL = "classical"
    FREE = "free"

    def weight(self, n: int) -> int:
        """Basis weight: ``n`` classically, ``[n]_0`` (0 or 1) in the free case."""
        if self is Framework.CLASSICAL:
            return n
        return 1 if n > 0 else 0


class MeixnerCase(str, Enum):
    GAUSSIAN = "gaussian"
    POISSON = "poisson"
    GAMMA = "gamma"
    PASCAL = "pascal"
    MEIXNER_SECOND_KIND = "meixner-second-kind"


@dataclass(frozen=True)
class AlphaBeta:
    alpha: Scalar
    beta: Scalar

    @property
    def difference(self) -> Scalar:
        return self.alpha - self.beta


def _check_eta(eta) -> None:
    if isinstance(eta, complex) or eta < 0:
        raise ValueError("eta must be nonnegative")


def classify(lam, eta) -> MeixnerCase:
    lam, eta = as_scalar(lam), as_scalar(eta)
    _check_eta(eta)
    if eta == 0:
        return MeixnerCase.GAUSSIAN if lam == 0 else MeixnerCase.POISSON
    disc = lam * lam - 4 * eta
    if disc == 0:
        return MeixnerCase.GAMMA
    return MeixnerCase.PASCAL if disc > 0 else MeixnerCase.MEIXNER_SECOND_KIND


def alpha_beta(lam, eta) -> AlphaBeta:
    """Roots of ``1 + lam*x + eta*x**2 = (1 - alpha*x)(1 - beta*x)``.

    Rational inputs give exact values (rationals or quadratic surds); float
    inputs give complex floats. ``alpha`` is the root with the larger real
    part, then the larger imaginary part, except for ``eta == 0, lam != 0``
    where ``alpha = -lam`` and ``beta = 0``.
    """
    lam, eta = as_scalar(lam), as_scalar(eta)
    _check_eta(eta)
    if eta == 0:
        return AlphaBeta(-lam, lam * 0)
    disc = lam * lam - 4 * eta
    if is_exact(lam) and is_exact(eta):
        root = QuadraticSurd.sqrt(disc)
        half = Fraction(1, 2)
        return AlphaBeta((-lam + root) * half, (-lam - root) * half)
    root = cmath.sqrt(disc)
    return AlphaBeta((-lam + root) / 2, (-lam - root) / 2)


@dataclass(frozen=True)
class MeixnerParams:
    """Framework tag plus ``(lam, eta, t)``; the shift parameter ``l`` is fixed at 0."""

    framework: Framework
    lam: Scalar = Fraction(0)
    eta: Scalar = Fraction(0)
    t: Scalar = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "framework", Framework(self.framework))
        for name in ("lam", "eta", "t"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        _check_eta(self.eta)
        if isinstance(self.t, complex) or self.t <= 0:
            raise ValueError("t must be positive")

    @property
    def l(self) -> Fraction:  # noqa: E743
        return Fraction(0)

    @property
    def case(self) -> MeixnerCase:
        return classify(self.lam, self.eta)

    @property
    def alpha_beta(self) -> AlphaBeta:
        return alpha_beta(self.lam, self.eta)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.lam) and is_exact(self.eta) and is_exact(self.t)

    def __str__(self) -> str:
        return f"{self.framework.value}(lam={self.lam}, eta={self.eta}, t={self.t})"

    def with_(self, **changes) -> "MeixnerParams":
        return replace(self, **changes)


def classical(lam=0, eta=0, t=1) -> MeixnerParams:
    return MeixnerParams(Framework.CLASSICAL, lam, eta, t)


def free(lam=0, eta=0, t=1) -> MeixnerParams:
    return MeixnerParams(Framework.FREE, lam, eta, t)


# one representative per case a) to e)
CASE_GRID = ((0, 0), (1, 0), (2, 1), (3, 2), (1, 1))


def default_grid() -> list[MeixnerParams]:
    return [
        MeixnerParams(fw, lam, eta) for fw in Framework for (lam, eta) in CASE_GRID
    ]
