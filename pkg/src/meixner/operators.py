"""Lowering and raising operators in each of their representations.

The operators are defined on the monic family ``P_n`` of ``mu`` with
``t = 1``: ``d^dag P_n = P_{n+1}`` and ``d P_n = w(n) P_{n-1}`` where
``w(n) = n`` classically and ``w(n) = [n]_0`` in the free case. The
functions below realize them as basis matrices, as integrals against
``nu``, through moment formulas, as symbols in ``D`` / ``D_free`` and (for
the classical raising operator) as difference operators. Agreement between
these routes is what the check functions report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .jacobi import moments, mu_jacobi, nu_jacobi
from .params import Framework, MeixnerCase, MeixnerParams, alpha_beta, classify
from .poly import OpsBasis, Poly, from_ops_coeffs, ops_from_jacobi, to_ops_coeffs
from .report import CheckReport, Comparator
from .scalars import QuadraticSurd, as_scalar, to_real
from .series import (
    classical_raising_symbol,
    classical_raising_symbol_exponential,
    free_raising_symbol,
    psi_inv,
)


def _unit_t(p: MeixnerParams) -> MeixnerParams:
    if p.t != 1:
        raise ValueError("lowering and raising operators are defined for t = 1")
    return p


def ops_basis(p: MeixnerParams, N: int) -> OpsBasis:
    """``P_0..P_N`` for ``mu_{lam,eta}`` with ``t = 1``."""
    return ops_from_jacobi(mu_jacobi(p.with_(t=1), max(N, 1)), max(N, 1))


@dataclass(frozen=True)
class OperatorMatrix:
    """Column ``j`` holds the image of ``P_j`` in the codomain basis."""

    entries: np.ndarray
    domain: OpsBasis | None = None
    codomain: OpsBasis | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def apply(self, c) -> list:
        """Map basis coefficients (padded to the domain size) to codomain coefficients."""
        cols = self.entries.shape[1]
        if len(c) > cols:
            raise ValueError(f"{len(c)} coefficients exceed domain size {cols}")
        vec = np.array(list(c) + [Fraction(0)] * (cols - len(c)), dtype=object)
        return list(self.entries.dot(vec))


def _zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out[...] = Fraction(0)
    return out


def lowering_matrix(fw: Framework, N: int, basis: OpsBasis | None = None) -> OperatorMatrix:
    """``(N+1) x (N+1)`` matrix with ``w(n)`` on the superdiagonal (column n, row n-1)."""
    fw = Framework(fw)
    if N < 1:
        raise ValueError("N must be >= 1")
    E = _zeros(N + 1, N + 1)
    for n in range(1, N + 1):
        E[n - 1, n] = Fraction(fw.weight(n))
    return OperatorMatrix(E, basis, basis)


def raising_matrix(N: int, basis: OpsBasis | None = None) -> OperatorMatrix:
    """``(N+2) x (N+1)`` shift: column n is ``e_{n+1}``."""
    E = _zeros(N + 2, N + 1)
    for n in range(N + 1):
        E[n + 1, n] = Fraction(1)
    return OperatorMatrix(E, basis, None)


def lowering_basis_apply(p: MeixnerParams, f: Poly) -> Poly:
    """``d f`` by expanding ``f`` in ``P_n`` and applying the lowering matrix."""
    N = max(f.degree, 1)
    basis = ops_basis(p, N)
    c = to_ops_coeffs(f, basis)
    return from_ops_coeffs(lowering_matrix(p.framework, N).apply(c), basis)


def raising_basis_apply(p: MeixnerParams, f: Poly, basis: OpsBasis | None = None) -> Poly:
    """``d^dag f`` through the basis; needs ``P_{deg f + 1}``."""
    N = max(f.degree, 0)
    if basis is None or basis.order < N + 1:
        basis = ops_basis(p, N + 1)
    c = to_ops_coeffs(f, basis)
    image = raising_matrix(N).apply(c)
    return from_ops_coeffs(image, basis)


# ---------------------------------------------------------------------------
# lowering operator


def _nu_moments(p: MeixnerParams, n: int) -> list:
    return moments(nu_jacobi(p, max(n // 2 + 1, 1)), n)


def _shifted(p: MeixnerParams) -> MeixnerParams:
    """Parameters of ``nu_{lam, eta+1}`` used by the free lowering operator."""
    return p.with_(eta=p.eta + 1)


def lowering_integral_apply(p: MeixnerParams, f: Poly) -> Poly:
    """``d f`` from the integral representation against ``nu``.

    Classical: ``int (f(x+s) - f(x))/s nu(ds)``, expanded as
    ``sum_{j>=1} s^{j-1} f^{(j)}(x)/j!`` and contracted with the moments of
    ``nu_{lam,eta}``; ``nu = delta_0`` (Gaussian) is the limit ``f'``.
    Free: ``int (f(x) - f(s))/(x - s) nu_{lam,eta+1}(ds)``, expanded in powers
    of ``s`` and contracted the same way.
    """
    _unit_t(p)
    n = f.degree
    if n < 1:
        return Poly()
    if p.framework is Framework.CLASSICAL:
        if p.lam == 0 and p.eta == 0:
            return f.derivative()
        m = _nu_moments(p, n - 1)
        out = Poly()
        g = f
        for j in range(1, n + 1):
            g = g.derivative()
            out = out + g * (m[j - 1] * Fraction(1, factorial(j)))
        return out
    m = _nu_moments(_shifted(p), n - 1)
    out = Poly()
    # coefficient of s^j in (f(x) - f(s))/(x - s) is sum_{k>j} f_k x^{k-1-j}
    for j in range(n):
        gj = Poly(f[k] for k in range(j + 1, n + 1))
        out = out + gj * m[j]
    return out


def lowering_moment_formula(p: MeixnerParams, n: int) -> Poly:
    """``d x^n`` as ``sum_k C(n,k) m(n-1-k) x^k`` (classical, moments of ``nu_{lam,eta}``)
    or ``sum_k m(n-1-k) x^k`` (free, moments of ``nu_{lam,eta+1}``)."""
    _unit_t(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    if p.framework is Framework.CLASSICAL:
        m = _nu_moments(p, n - 1)
        return Poly(comb(n, k) * m[n - 1 - k] for k in range(n))
    m = _nu_moments(_shifted(p), n - 1)
    return Poly(m[n - 1 - k] for k in range(n))


def lowering_symbol_apply(p: MeixnerParams, f: Poly) -> Poly:
    """``Psi^{-1}(D) f`` (classical) or ``Psi^{-1}_{lam,eta+1}(D_free) f`` (free).

    Both operator series terminate after ``deg f`` terms.
    """
    _unit_t(p)
    n = f.degree
    if n < 1:
        return Poly()
    if p.framework is Framework.CLASSICAL:
        symbol = psi_inv(p, n)
        step = Poly.derivative
    else:
        symbol = psi_inv(_shifted(p), n)
        step = Poly.free_derivative
    out = Poly()
    g = f
    for k in range(1, n + 1):
        g = step(g)
        if symbol[k] != 0:
            out = out + g * symbol[k]
    return out


# ---------------------------------------------------------------------------
# classical raising operator as difference operators


def _finish(f: Poly, tol: float) -> Poly:
    # float round-off grows with the coefficients, so the imaginary-part
    # gate is relative to the largest one (and absolute below magnitude 1)
    scale = max((abs(complex(c)) for c in f.coeffs if not isinstance(c, QuadraticSurd)), default=1.0)
    coeffs = []
    for c in f.coeffs:
        if isinstance(c, QuadraticSurd):
            raise ArithmeticError(f"irrational residual {c} in a real polynomial")
        coeffs.append(to_real(c, tol * max(1.0, scale)))
    return Poly(coeffs)


def raising_difference_apply(p: MeixnerParams, f: Poly, tol: float = 1e-10) -> Poly:
    """Classical ``d^dag f`` through ``D``, ``nabla_s`` and ``U_s``.

    Regimes, with ``nabla_s f = (f(x+s) - f(x))/s`` and ``U_s f = f(x+s)``:

    * Gaussian: ``x - D``
    * Poisson: ``x (1 - lam nabla_{-lam}) - nabla_{-lam}``
    * ``lam^2 = 4 eta``: ``x (1 + alpha D)^2 - D (1 + alpha D)``, ``alpha = -lam/2``
    * otherwise: ``x (1 + alpha nabla_d)^2 U_{-d} - (1 + alpha nabla_d) nabla_d U_{-d}``,
      ``d = alpha - beta``
    """
    _unit_t(p)
    if p.framework is not Framework.CLASSICAL:
        raise ValueError("difference representation exists only in the classical case")
    x = Poly.x()
    case = classify(p.lam, p.eta)
    if case is MeixnerCase.GAUSSIAN:
        return x * f - f.derivative()
    if case is MeixnerCase.POISSON:
        s = -p.lam
        nab = (f.shift(s) - f) * (1 / s)
        return x * (f - nab * p.lam) - nab
    ab = alpha_beta(p.lam, p.eta)
    alpha = ab.alpha
    if case is MeixnerCase.GAMMA:
        def lift(g):
            return g + g.derivative() * alpha
        return _finish(x * lift(lift(f)) - lift(f.derivative()), tol)
    d = ab.difference
    inv_d = 1 / d

    def nabla(g):
        return (g.shift(d) - g) * inv_d

    def lift(g):
        return g + nabla(g) * alpha

    u = f.shift(-d)
    return _finish(x * lift(lift(u)) - lift(nabla(u)), tol)


# ---------------------------------------------------------------------------
# identity checks


def free_raising_resolvent_check(lam, eta, N: int, tol: float = 1e-10) -> CheckReport:
    """Compare ``sum z^n d^dag x^n`` with ``(x A + B) sum z^n x^n`` through ``z^{N-1}``."""
    if N < 2:
        raise ValueError("N must be >= 2")
    p = MeixnerParams(Framework.FREE, lam, eta)
    cmp = Comparator("free-raising-resolvent", tol)
    try:
        A, B = free_raising_symbol(p.lam, p.eta, N, tol=min(tol, 1e-12))
    except ArithmeticError as exc:
        cmp.fail(str(exc))
        return cmp.report()
    basis = ops_basis(p, N)
    x = Poly.x()
    for n in range(N):
        lhs = raising_basis_apply(p, Poly.monomial(n), basis)
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + (x * A[k] + B[k]) * Poly.monomial(n - k)
        cmp.sequence(f"z^{n}", lhs.coeffs, rhs.coeffs)
    return cmp.report()


def classical_raising_exponential_check(lam, eta, N: int, tol: float = 1e-10) -> CheckReport:
    """Compare ``sum z^n/n! d^dag x^n`` with ``(x A + B) e^{xz}`` through ``z^{N-1}``.

    Also requires the ``Psi^{-1}`` form and the ``alpha, beta`` exponential
    form of ``(A, B)`` to agree as series.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    p = MeixnerParams(Framework.CLASSICAL, lam, eta)
    cmp = Comparator("classical-raising-exponential", tol)
    A, B = classical_raising_symbol(p.lam, p.eta, N)
    A2, B2 = classical_raising_symbol_exponential(p.lam, p.eta, N)
    cmp.sequence("A psi-form vs exponential", A.coeffs, A2.coeffs)
    cmp.sequence("B psi-form vs exponential", B.coeffs, B2.coeffs)
    basis = ops_basis(p, N)
    x = Poly.x()
    # compare z^n coefficients of the series themselves, so both sides carry 1/n!
    for n in range(N):
        lhs = raising_basis_apply(p, Poly.monomial(n), basis) * Fraction(1, factorial(n))
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + (x * A[k] + B[k]) * Poly.monomial(n - k, Fraction(1, factorial(n - k)))
        cmp.sequence(f"z^{n}", lhs.coeffs, rhs.coeffs)
    return cmp.report()


def multiplication_matrix(p: MeixnerParams, N: int) -> OperatorMatrix:
    """Multiplication by ``x`` on ``P_0..P_N`` (codomain ``P_0..P_{N+1}``), from the recurrence."""
    J = mu_jacobi(p.with_(t=1), N)
    E = _zeros(N + 2, N + 1)
    for n in range(N + 1):
        E[n + 1, n] = Fraction(1)
        E[n, n] = J.b[n]
        if n >= 1:
            E[n - 1, n] = J.offdiag(n)
    return OperatorMatrix(E)


def multiplication_decomposition_check(p: MeixnerParams, N: int, tol: float = 1e-10) -> CheckReport:
    """``x = d^dag (1 + lam d + eta d^2) + d`` as an ``(N+2) x (N+1)`` matrix identity."""
    if N < 3:
        raise ValueError("N must be >= 3")
    L = lowering_matrix(p.framework, N).entries
    R = raising_matrix(N).entries
    inner = _zeros(N + 1, N + 1)
    for i in range(N + 1):
        inner[i, i] = Fraction(1)
    inner = inner + L * p.lam + L.dot(L) * p.eta
    rhs = R.dot(inner)
    rhs[: N + 1, :] = rhs[: N + 1, :] + L
    lhs = multiplication_matrix(p, N).entries
    cmp = Comparator("multiplication-decomposition", tol)
    for j in range(N + 1):
        cmp.sequence(f"column {j}", list(lhs[:, j]), list(rhs[:, j]))
    return cmp.report()


def nu_as_shifted_mu(lam, eta, N: int):
    """Free ``nu_{lam,eta}`` next to ``mu^{(eta)}_{lam,0}``, both as Jacobi data.

    The coefficients coincide at ``lam = 0``; for ``lam != 0`` they differ in
    ``b_0`` (``nu`` has mean ``lam``, ``mu`` is centered).
    """
    lam, eta = as_scalar(lam), as_scalar(eta)
    nu = nu_jacobi(MeixnerParams(Framework.FREE, lam, eta), N)
    mu = mu_jacobi(MeixnerParams(Framework.FREE, lam, 0, eta), N)
    return nu, mu

