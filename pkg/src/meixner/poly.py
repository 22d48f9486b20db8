"""Dense univariate polynomials and monic orthogonal families.

Coefficients are stored lowest degree first and may be any of the scalars
in :mod:`meixner.scalars`; exactness is preserved whenever the inputs are
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .jacobi import JacobiCoeffs
from .scalars import Scalar, is_exact, to_real


def _is_zero(c) -> bool:
    return c == 0


class Poly:
    """Immutable dense polynomial ``sum_k coeffs[k] x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) if type(x) is int else x for x in coeffs]
        while c and _is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=Fraction(1)) -> "Poly":
        return cls([Fraction(0)] * n + [c])

    @property
    def degree(self) -> int:
        """``len(coeffs) - 1``; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def domain(self) -> str:
        return "exact" if all(is_exact(c) for c in self.coeffs) else "complex"

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ring operations ---------------------------------------------------
    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return Poly(out)

    def __rmul__(self, other) -> "Poly":
        return Poly(other * c for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        out = Poly.constant(Fraction(1))
        for _ in range(n):
            out = out * self
        return out

    def scale(self, s) -> "Poly":
        return self * s

    def __call__(self, x0):
        """Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    # calculus and difference operators -------------------------------
    def shift(self, s) -> "Poly":
        """``x -> f(x + s)``."""
        acc = Poly()
        step = Poly((s, Fraction(1)))
        for c in reversed(self.coeffs):
            acc = acc * step + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def free_derivative(self) -> "Poly":
        """``(f(x) - f(0)) / x``."""
        return Poly(self.coeffs[1:])

    def divided_difference(self, s) -> "Poly":
        """``(f(x) - f(s)) / (x - s)`` as a polynomial in ``x`` (synthetic division)."""
        n = self.degree
        if n < 1:
            return Poly()
        q = [Fraction(0)] * n
        q[n - 1] = self.coeffs[n]
        for i in range(n - 1, 0, -1):
            q[i - 1] = self.coeffs[i] + s * q[i]
        return Poly(q)

    def real(self, tol: float = 1e-10) -> "Poly":
        """Discard negligible imaginary parts of complex coefficients."""
        return Poly(to_real(c, tol) for c in self.coeffs)

    def max_abs_diff(self, other: "Poly") -> float:
        n = max(len(self.coeffs), len(other.coeffs))
        return max((abs(complex(self[k] - other[k])) for k in range(n)), default=0.0)


def x_power(n: int) -> Poly:
    return Poly.monomial(n)


@dataclass(frozen=True)
class OpsBasis:
    """Monic orthogonal polynomials ``P_0..P_N`` generated from Jacobi data."""

    family: tuple
    source: JacobiCoeffs

    @property
    def order(self) -> int:
        return len(self.family) - 1

    def __getitem__(self, n: int) -> Poly:
        return self.family[n]


def ops_from_jacobi(J: JacobiCoeffs, N: int) -> OpsBasis:
    """Unroll ``P_{n+1} = (x - b_n) P_n - a_n P_{n-1}`` with ``P_0 = 1``, ``P_{-1} = 0``."""
    if J.length < N:
        raise ValueError(f"need coefficients up to index {N}, have {J.length}")
    x = Poly.x()
    family = [Poly.constant(Fraction(1))]
    prev = Poly()
    for n in range(N):
        nxt = (x - J.b[n]) * family[n] - prev * J.offdiag(n)
        prev = family[n]
        family.append(nxt)
    return OpsBasis(tuple(family), J)


def to_ops_coeffs(f: Poly, basis: OpsBasis) -> list:
    """Coefficients ``c`` with ``f = sum_k c[k] P_k`` (monic, so no divisions)."""
    if f.degree > basis.order:
        raise ValueError(f"degree {f.degree} exceeds basis order {basis.order}")
    rest = f
    out = [Fraction(0)] * (max(f.degree, 0) + 1)
    for k in range(f.degree, -1, -1):
        ck = rest[k]
        out[k] = ck
        if ck != 0:
            rest = rest - basis[k] * ck
    return out


def from_ops_coeffs(c: Sequence, basis: OpsBasis) -> Poly:
    if len(c) > basis.order + 1:
        raise ValueError(f"{len(c)} coefficients exceed basis order {basis.order}")
    out = Poly()
    for k, ck in enumerate(c):
        if ck != 0:
            out = out + basis[k] * ck
    return out


def integrate(f: Poly, m: Sequence) -> Scalar:
    """Integral of ``f`` against the measure with moments ``m``."""
    if f.degree >= len(m):
        raise ValueError(f"need moments up to {f.degree}")
    total = Fraction(0)
    for c, mk in zip(f.coeffs, m):
        total = total + c * mk
    return total
