"""Jacobi coefficients of the Meixner measures and the quantities derived from them.

A measure is never represented by a density here: the recurrence
coefficients *are* the measure. A monic family obeys

    x P_n = P_{n+1} + b_n P_n + a_n P_{n-1},

and moments, norms and Gauss rules are all read off ``(b, a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .params import Framework, MeixnerParams
from .scalars import Scalar


@dataclass(frozen=True)
class JacobiCoeffs:
    """Diagonal ``b = (b_0..b_N)`` and off-diagonal ``a = (a_1..a_N)``.

    ``a_n == 0`` means the measure is supported on ``n`` points; in
    particular ``a_1 == 0`` encodes the point mass at ``b_0``.
    """

    b: tuple
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) != len(self.b) - 1:
            raise ValueError("need len(a) == len(b) - 1")
        for k, ak in enumerate(self.a, start=1):
            if not isinstance(ak, complex) and ak < 0:
                raise ValueError(f"a_{k} = {ak} is negative")

    @property
    def length(self) -> int:
        """Largest index ``N`` covered."""
        return len(self.b) - 1

    def offdiag(self, n: int) -> Scalar:
        """``a_n`` for ``n >= 1`` (``a_0`` is taken as 0)."""
        return self.a[n - 1] if n >= 1 else 0

    def first_zero(self) -> int | None:
        """Smallest ``k`` with ``a_k == 0``, i.e. the size of a finite support."""
        for k, ak in enumerate(self.a, start=1):
            if ak == 0:
                return k
        return None


def mu_jacobi(p: MeixnerParams, N: int) -> JacobiCoeffs:
    """Recurrence coefficients of the orthogonality measure ``mu`` of ``P_n``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    lam, eta, t = p.lam, p.eta, p.t
    if p.framework is Framework.CLASSICAL:
        b = [lam * n for n in range(N + 1)]
        a = [n * (t + eta * (n - 1)) for n in range(1, N + 1)]
    else:
        b = [lam * 0] + [lam] * N
        a = [t] + [t + eta] * (N - 1)
    return JacobiCoeffs(b, a)


def nu_jacobi(p: MeixnerParams, N: int) -> JacobiCoeffs:
    """Recurrence coefficients of the auxiliary measure ``nu`` (the ``Q_n`` family).

    ``nu`` does not depend on ``t``. For ``eta == 0`` all ``a_n`` vanish and the
    encoded measure is the point mass at ``lam``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    lam, eta = p.lam, p.eta
    if p.framework is Framework.CLASSICAL:
        b = [lam * (n + 1) for n in range(N + 1)]
        a = [eta * n * (n + 1) for n in range(1, N + 1)]
    else:
        b = [lam] * (N + 1)
        a = [eta] * N
    return JacobiCoeffs(b, a)


def moments(J: JacobiCoeffs, N: int) -> list:
    """Moments ``m(0..N)``: top-left entries of powers of the tridiagonal matrix.

    Exact whenever ``J`` is. Only levels ``0..N//2`` of the recurrence can be
    reached by a closed path of length ``<= N``.
    """
    depth = N // 2
    if J.length < depth:
        raise ValueError(f"need coefficients up to index {depth}, have {J.length}")
    b = J.b[: depth + 1]
    a = [J.offdiag(k) for k in range(depth + 1)]
    row = [Fraction(0)] * (depth + 1)
    row[0] = Fraction(1)
    out = [row[0]]
    for _ in range(N):
        new = []
        for j in range(depth + 1):
            v = row[j] * b[j]
            if j > 0:
                v = v + row[j - 1]
            if j < depth:
                v = v + row[j + 1] * a[j + 1]
            new.append(v)
        row = new
        out.append(row[0])
    return out


def norms(J: JacobiCoeffs, N: int) -> list:
    """Squared norms ``||P_n||^2 = a_1 ... a_n`` for ``n = 0..N``."""
    if J.length < N:
        raise ValueError(f"need coefficients up to index {N}, have {J.length}")
    out = [Fraction(1)]
    for n in range(1, N + 1):
        an = J.offdiag(n)
        if an == 0:
            raise ValueError(f"a_{n} = 0: measure has finite support, P_{n} has zero norm")
        out.append(out[-1] * an)
    return out


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f) -> float:
        return float(np.sum(self.weights * f(self.nodes)))

    def moment(self, k: int) -> float:
        return float(np.sum(self.weights * self.nodes**k))


def _real(x) -> float:
    if isinstance(x, complex):
        if x.imag != 0:
            raise ValueError("complex Jacobi coefficient")
        return x.real
    return float(x)


def gauss_quadrature(J: JacobiCoeffs, m: int) -> QuadratureRule:
    """``m``-point Gauss rule by Golub-Welsch.

    If some ``a_k`` with ``k < m`` vanishes, the measure has exactly ``k``
    atoms and the ``k``-point rule (which is exact for all polynomials) is
    returned instead.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if J.length < m - 1:
        raise ValueError(f"need coefficients up to index {m - 1}, have {J.length}")
    k0 = J.first_zero()
    if k0 is not None and k0 < m:
        m = k0
    diag = np.array([_real(x) for x in J.b[:m]], dtype=float)
    off = np.sqrt(np.array([_real(J.offdiag(k)) for k in range(1, m)], dtype=float))
    T = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    try:
        nodes = np.linalg.eigvalsh(T)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ValueError(f"eigen-solver failed: {exc}") from exc
    # Christoffel numbers 1 / sum_k p_k(x)^2 with orthonormal p_k; these match
    # the squared first eigenvector components but avoid their rounding
    prev = np.zeros_like(nodes)
    cur = np.ones_like(nodes)
    total = cur**2
    for k in range(m - 1):
        nxt = ((nodes - diag[k]) * cur - (off[k - 1] if k > 0 else 0.0) * prev) / off[k]
        prev, cur = cur, nxt
        total = total + cur**2
    return QuadratureRule(nodes, 1.0 / total)


def support_estimate(J: JacobiCoeffs, m: int) -> tuple[float, float]:
    """``[min node, max node]`` of the ``m``-point rule; grows with ``m``."""
    rule = gauss_quadrature(J, m)
    return float(rule.nodes[0]), float(rule.nodes[-1])

