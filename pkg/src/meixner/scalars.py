"""Scalar domains used throughout the package.

Three kinds of scalars flow through the polynomial and series code:

* exact rationals (``int`` and :class:`fractions.Fraction`),
* exact quadratic surds ``a + b*sqrt(d)`` (:class:`QuadraticSurd`), which
  appear when the roots of ``1 + lam*x + eta*x**2`` are irrational or
  complex but the parameters are rational,
* complex floats, used whenever a parameter was given as a decimal.

All arithmetic is plain operator overloading, so the same polynomial and
series routines run unchanged in every domain.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float, complex, "QuadraticSurd"]


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` squarefree (sign kept in ``m``)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    k = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        p += 1
    return k, sign * n


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class QuadraticSurd:
    """Exact number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and squarefree integer ``d``.

    ``d < 0`` gives a complex number. Results whose surd part vanishes are
    returned as plain :class:`~fractions.Fraction` values, so exact identities
    checked in this domain collapse back to rationals on their own.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    @classmethod
    def sqrt(cls, q) -> Union[Fraction, "QuadraticSurd"]:
        """``sqrt(q)`` for rational ``q`` (principal branch, ``i*sqrt(|q|)`` for q < 0)."""
        q = Fraction(q)
        r = rational_sqrt(q)
        if r is not None:
            return r
        # sqrt(p/s) = sqrt(p*s)/s
        k, m = _squarefree_split(q.numerator * q.denominator)
        return cls._make(0, Fraction(k, q.denominator), m)

    @classmethod
    def _make(cls, a, b, d):
        if b == 0:
            return Fraction(a)
        return cls(a, b, d)

    # conversions -------------------------------------------------------
    def __complex__(self) -> complex:
        if self.d > 0:
            return complex(float(self.a) + float(self.b) * math.sqrt(self.d))
        return complex(float(self.a), float(self.b) * math.sqrt(-self.d))

    def __abs__(self) -> float:
        return abs(complex(self))

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def __repr__(self) -> str:
        return f"QuadraticSurd({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d})"

    # arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                raise TypeError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        return self._make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        a, b = c
        return self._make(self.a * a + self.b * b * self.d, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def _inverse(self):
        norm = self.a * self.a - self.b * self.b * self.d
        return self._make(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadraticSurd):
            return self * other._inverse()
        if isinstance(other, (int, Fraction)):
            return self._make(self.a / other, self.b / other, self.d)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._inverse() * other
        if isinstance(other, (float, complex)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result: Scalar = Fraction(1)
        base: Scalar = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QuadraticSurd))


def as_scalar(x) -> Scalar:
    """Normalize a user-supplied number: ints become Fractions, strings are parsed.

    Strings containing a decimal point or exponent are read as floats; all
    other strings (``"3"``, ``"-1/2"``) are read exactly.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, str):
        s = x.strip()
        if any(ch in s for ch in ".eE") and "/" not in s:
            return float(s)
        return Fraction(s)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, float, complex, QuadraticSurd)):
        return x
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def to_real(x, tol: float = 1e-10):
    """Drop a numerically zero imaginary part; raise if it is not negligible."""
    if isinstance(x, QuadraticSurd):
        raise ArithmeticError(f"value {x} is not rational")
    if isinstance(x, complex):
        if abs(x.imag) > tol:
            raise ArithmeticError(f"imaginary residual {abs(x.imag):.3g} exceeds {tol:g}")
        return x.real
    return x


def format_scalar(x) -> str:
    """Deterministic text form: ``p/q`` for rationals, 17 significant digits for floats."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return format(x, ".17g")
    if isinstance(x, complex):
        if x.imag == 0:
            return format(x.real, ".17g")
        return f"{format(x.real, '.17g')}{format(x.imag, '+.17g')}j"
    if isinstance(x, QuadraticSurd):
        return str(x)
    raise TypeError(type(x).__name__)
