"""Truncated formal power series and the analytic objects of the Meixner classes.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0..c_N`` and every
operation is exact modulo ``z**(N+1)``. The module also builds the series
attached to a parameter set: ``Psi``, its compositional inverse, the
cumulant transform ``C``, generating functions and the raising symbols.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .jacobi import moments, nu_jacobi
from .params import Framework, MeixnerParams, alpha_beta
from .scalars import as_scalar, is_exact

DEFAULT_ORDER = 16


class SeriesError(ValueError):
    """Precondition violation; ``index`` is the offending coefficient index."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (coefficient {index})")
        self.index = index


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [Fraction(x) if type(x) is int else x for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        c = c[: order + 1] + [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def z(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(0), Fraction(1)], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    @property
    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def max_abs_diff(self, other: "TruncatedSeries") -> float:
        n = min(self.order, other.order)
        return max(abs(complex(self[k] - other[k])) for k in range(n + 1))

    # arithmetic --------------------------------------------------------
    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncatedSeries((self[k] + other[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = Fraction(0)
            for i in range(k + 1):
                acc = acc + self[i] * other[k - i]
            out.append(acc)
        return TruncatedSeries(out, n)

    def __rmul__(self, other):
        return TruncatedSeries((other * c for c in self.coeffs), self.order)

    def __pow__(self, n: int):
        out = TruncatedSeries.constant(Fraction(1), self.order)
        for _ in range(n):
            out = out * self
        return out

    def reciprocal(self) -> "TruncatedSeries":
        c0 = self[0]
        if c0 == 0:
            raise SeriesError("division needs a nonzero constant term", 0)
        g = [1 / c0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc = acc + self[k] * g[n - k]
            g.append(-acc / c0)
        return TruncatedSeries(g, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return TruncatedSeries((c / other for c in self.coeffs), self.order)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # shifts and calculus -----------------------------------------------
    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by ``z**k``; the first ``k`` coefficients must vanish."""
        for i in range(k):
            if self[i] != 0:
                raise SeriesError(f"cannot divide by z^{k}", i)
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**k`` (the order grows by ``k``)."""
        return TruncatedSeries([Fraction(0)] * k + list(self.coeffs), self.order + k)

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            raise ValueError("derivative of an order-0 series is undetermined")
        return TruncatedSeries((k * self[k] for k in range(1, self.order + 1)), self.order - 1)

    def integral(self) -> "TruncatedSeries":
        return TruncatedSeries(
            [Fraction(0)] + [self[k] * Fraction(1, k + 1) for k in range(self.order + 1)],
            self.order + 1,
        )

    # composition -------------------------------------------------------
    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(z))``; ``inner`` must have zero constant term."""
        if inner[0] != 0:
            raise SeriesError("inner series of a composition needs zero constant term", 0)
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = TruncatedSeries.constant(self[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self[k]
        return acc

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return self.compose(inner)

    def comp_inverse(self) -> "TruncatedSeries":
        """Compositional inverse by Lagrange inversion.

        With ``f = z h(z)`` and ``phi = 1/h``: ``[z^n] f^{-1} = [w^{n-1}] phi^n / n``.
        """
        if self[0] != 0:
            raise SeriesError("compositional inverse needs zero constant term", 0)
        if self.order < 1 or self[1] == 0:
            raise SeriesError("compositional inverse needs a nonzero linear term", 1)
        N = self.order
        phi = self.shift_down(1).reciprocal()
        g = [Fraction(0)]
        power = TruncatedSeries.constant(Fraction(1), N - 1)
        for n in range(1, N + 1):
            power = power * phi
            g.append(power[n - 1] * Fraction(1, n))
        return TruncatedSeries(g, N)

    def sqrt(self) -> "TruncatedSeries":
        """Square root on the branch with constant term +1."""
        if self[0] != 1:
            raise SeriesError("square root needs constant term 1", 0)
        g = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n):
                acc = acc + g[k] * g[n - k]
            g.append((self[n] - acc) * Fraction(1, 2))
        return TruncatedSeries(g, self.order)

    def exp(self) -> "TruncatedSeries":
        if self[0] != 0:
            raise SeriesError("exp needs zero constant term", 0)
        g = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc = acc + k * self[k] * g[n - k]
            g.append(acc * Fraction(1, n))
        return TruncatedSeries(g, self.order)

    def log(self) -> "TruncatedSeries":
        if self[0] != 1:
            raise SeriesError("log needs constant term 1", 0)
        if self.order == 0:
            return TruncatedSeries([Fraction(0)], 0)
        return (self.derivative() / self.truncate(self.order - 1)).integral()


# ---------------------------------------------------------------------------
# free Psi and C(Psi)


def psi_free(lam, eta, N: int) -> TruncatedSeries:
    """``z / (1 + lam z + eta z^2)``."""
    lam, eta = as_scalar(lam), as_scalar(eta)
    return TruncatedSeries.z(N) / TruncatedSeries([1, lam, eta], N)


def c_compose_psi_free(lam, eta, N: int) -> TruncatedSeries:
    """``C(Psi(z)) = z^2 / (1 + lam z + eta z^2)`` in the free case."""
    lam, eta = as_scalar(lam), as_scalar(eta)
    return TruncatedSeries([0, 0, Fraction(1)], N) / TruncatedSeries([1, lam, eta], N)


def reciprocal_psi_gap(lam, eta, N: int) -> TruncatedSeries:
    """``1/Psi_{lam,eta+1}(z) - 1/Psi_{lam,eta}(z)`` (free), which should equal ``z``.

    Each reciprocal is a Laurent series ``z^{-1} (z/Psi)``; the ``z^{-1}``
    parts cancel in the difference.
    """
    eta = as_scalar(eta)
    up = psi_free(lam, eta + 1, N + 2).shift_down(1).reciprocal()
    base = psi_free(lam, eta, N + 2).shift_down(1).reciprocal()
    return (up - base).shift_down(1)


# ---------------------------------------------------------------------------
# cumulant transform and Psi^{-1}


def cumulant_series(p: MeixnerParams, N: int) -> TruncatedSeries:
    """``C^{(t)}(z)`` from the moments of ``nu``.

    The ``z^n`` coefficient is ``t m_nu(n-2) / n!`` classically and
    ``t m_nu(n-2)`` in the free case.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    m = moments(nu_jacobi(p, max(N // 2, 1)), N - 2)
    c = [Fraction(0), Fraction(0)]
    for n in range(2, N + 1):
        if p.framework is Framework.CLASSICAL:
            c.append(p.t * m[n - 2] * Fraction(1, factorial(n)))
        else:
            c.append(p.t * m[n - 2])
    return TruncatedSeries(c, N)


def psi_inv(p: MeixnerParams, N: int) -> TruncatedSeries:
    """``Psi^{-1}``: ``C'`` classically, the compositional inverse of ``psi_free`` otherwise.

    ``Psi`` does not depend on ``t``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if p.framework is Framework.CLASSICAL:
        return cumulant_series(p.with_(t=1), max(N + 1, 2)).derivative().truncate(N)
    return psi_free(p.lam, p.eta, N).comp_inverse()


def _exp_linear(d, N: int) -> TruncatedSeries:
    """``e^{d z}``."""
    c = [Fraction(1)]
    for n in range(1, N + 1):
        c.append(c[-1] * d * Fraction(1, n))
    return TruncatedSeries(c, N)


def _expm1_over(d, N: int) -> TruncatedSeries:
    """``(e^{d z} - 1)/d``, which is ``z`` when ``d == 0``."""
    if d == 0:
        return TruncatedSeries.z(N)
    c = [Fraction(0), Fraction(1)]
    for n in range(2, N + 1):
        c.append(c[-1] * d * Fraction(1, n))
    return TruncatedSeries(c, N)


def psi_inv_closed(p: MeixnerParams, N: int) -> TruncatedSeries:
    """Closed forms for ``Psi^{-1}`` used as the second route.

    Classical: ``E / (1 + alpha E)`` with ``E = (e^{z(alpha-beta)} - 1)/(alpha-beta)``
    (``E = z`` when ``alpha == beta``). Free: the square-root formula
    ``(1 - lam z - sqrt((1 - lam z)^2 - 4 eta z^2)) / (2 eta z)``, or
    ``z / (1 - lam z)`` when ``eta == 0``.
    """
    if p.framework is Framework.CLASSICAL:
        ab = alpha_beta(p.lam, p.eta)
        if ab.alpha == ab.beta:
            E = TruncatedSeries.z(N)
        else:
            E = _expm1_over(ab.difference, N)
        return E / (1 + E * ab.alpha)
    lam, eta = p.lam, p.eta
    if eta == 0:
        return TruncatedSeries.z(N) / TruncatedSeries([1, -lam], N)
    one_minus = TruncatedSeries([1, -lam], N + 1)
    root = (one_minus * one_minus - TruncatedSeries([0, 0, 4 * eta], N + 1)).sqrt()
    return (one_minus - root).shift_down(1) / (2 * eta)


def psi(p: MeixnerParams, N: int) -> TruncatedSeries:
    """``Psi`` itself: closed form (free) or the inverse of ``Psi^{-1}`` (classical)."""
    if p.framework is Framework.FREE:
        return psi_free(p.lam, p.eta, N)
    return psi_inv(p, N).comp_inverse()


def generating_function(p: MeixnerParams, x0, N: int) -> TruncatedSeries:
    """Closed-form generating function at ``x = x0`` as a series in ``z``.

    Classical ``exp(x0 Psi - t C(Psi))`` with coefficients ``P_n(x0)/n!``;
    free ``(1 - x0 Psi + t C(Psi))^{-1}`` with coefficients ``P_n(x0)``.
    """
    x0 = as_scalar(x0)
    if p.framework is Framework.CLASSICAL:
        ps = psi(p, N)
        return (ps * x0 - cumulant_series(p, max(N, 2)).compose(ps)).truncate(N).exp()
    ps = psi_free(p.lam, p.eta, N)
    c_psi = c_compose_psi_free(p.lam, p.eta, N) * p.t
    return (1 - ps * x0 + c_psi).reciprocal()


# ---------------------------------------------------------------------------
# raising symbols


def _agree(a: TruncatedSeries, b: TruncatedSeries, tol: float) -> bool:
    # float coefficients are compared relative to max(1, |b_k|)
    if a.is_exact and b.is_exact:
        return a == b
    return all(abs(complex(x - y)) <= tol * max(1.0, abs(complex(y))) for x, y in zip(a, b))


def free_raising_symbol(lam, eta, N: int, tol: float = 1e-12):
    """``(A, B)`` with ``d^dag (1 - x z)^{-1} = (x A(z) + B(z)) (1 - x z)^{-1}``.

    ``A = Psi_{lam,eta}(w) / w`` and ``B = -Psi_{lam,eta}(w)`` where
    ``w = Psi^{-1}_{lam,eta+1}``. Both are built twice, by series composition
    and from the square-root closed forms, and must agree.
    """
    lam, eta = as_scalar(lam), as_scalar(eta)
    if N < 1:
        raise ValueError("N must be >= 1")
    # composition route
    w = psi_free(lam, eta + 1, N + 1).comp_inverse()
    pw = psi_free(lam, eta, N + 1).compose(w)
    A = pw.shift_down(1) / w.shift_down(1)
    B = -pw.truncate(N)

    # square-root route
    M = N + 2
    one_minus = TruncatedSeries([1, -lam], M)
    root = (one_minus * one_minus - TruncatedSeries([0, 0, 4 * (eta + 1)], M)).sqrt()
    outer = TruncatedSeries([2 * eta + 1, lam], M) + root
    pw_closed = TruncatedSeries([0, 2 * (eta + 1)], M) / outer
    inner = (one_minus - root).shift_down(2)
    A_closed = 4 * (eta + 1) ** 2 / (outer.truncate(N) * inner)
    B_closed = -pw_closed.truncate(N)

    if not (_agree(A, A_closed, tol) and _agree(B, B_closed, tol)):
        raise ArithmeticError("composition and closed-form raising symbols disagree")
    return A, B


def classical_raising_symbol(lam, eta, N: int):
    """``(A, B)`` with ``d^dag e^{xz} = (x A + B) e^{xz}`` from ``Psi^{-1}``.

    ``A = 1/(1 + lam psi + eta psi^2)``, ``B = -psi A`` with ``psi = Psi^{-1}``.
    """
    p = MeixnerParams(Framework.CLASSICAL, lam, eta)
    ps = psi_inv(p, N)
    A = (1 + ps * p.lam + ps * ps * p.eta).reciprocal()
    return A, -(ps * A)


def classical_raising_symbol_exponential(lam, eta, N: int):
    """The same symbol written through ``alpha``, ``beta`` and exponentials.

    ``A = e^{-dz} (1 + alpha E)^2`` and ``B = -e^{-dz} (1 + alpha E) E`` with
    ``d = alpha - beta`` and ``E = (e^{dz} - 1)/d``; for ``alpha == beta`` the
    limit ``E = z``, ``e^{-dz} = 1`` is used.
    """
    ab = alpha_beta(lam, eta)
    if ab.alpha == ab.beta:
        E = TruncatedSeries.z(N)
        damp = TruncatedSeries.constant(Fraction(1), N)
    else:
        d = ab.difference
        E = _expm1_over(d, N)
        damp = _exp_linear(-d, N)
    lifted = 1 + E * ab.alpha
    return damp * lifted * lifted, -(damp * lifted * E)
