"""Verification suites: each runs one family of identities at one parameter point.

A suite takes ``(params, order, tol)`` and returns a :class:`CheckReport`.
Operator suites (lowering, raising, decomposition) work with ``t = 1``,
where the operators are defined; the series and cumulant suites use the
given ``t``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial
from typing import Callable

from .cumulants import MAX_CLASSICAL, MAX_FREE, cumulants_to_moments, moments_to_cumulants
from .jacobi import moments, mu_jacobi
from .operators import (
    classical_raising_exponential_check,
    free_raising_resolvent_check,
    lowering_basis_apply,
    lowering_integral_apply,
    lowering_moment_formula,
    lowering_symbol_apply,
    multiplication_decomposition_check,
    ops_basis,
    raising_difference_apply,
)
from .params import Framework, MeixnerParams
from .poly import Poly, ops_from_jacobi
from .report import CheckReport, Comparator
from .series import (
    TruncatedSeries,
    c_compose_psi_free,
    cumulant_series,
    generating_function,
    psi,
    psi_free,
    psi_inv,
    psi_inv_closed,
    reciprocal_psi_gap,
)

GF_POINTS = (0, 1, -1, 2, -2)


def lowering_suite(p: MeixnerParams, N: int, tol: float) -> CheckReport:
    """Integral, symbol, basis and moment-formula forms of ``d`` against ``w(n) P_{n-1}``."""
    p = p.with_(t=1)
    cmp = Comparator("lowering", tol)
    B = ops_basis(p, N)
    for n in range(1, N + 1):
        target = B[n - 1] * p.framework.weight(n)
        f = B[n]
        cmp.sequence(f"integral P_{n}", lowering_integral_apply(p, f).coeffs, target.coeffs)
        cmp.sequence(f"symbol P_{n}", lowering_symbol_apply(p, f).coeffs, target.coeffs)
        cmp.sequence(f"basis P_{n}", lowering_basis_apply(p, f).coeffs, target.coeffs)
        xn = Poly.monomial(n)
        cmp.sequence(
            f"moment formula x^{n}",
            lowering_moment_formula(p, n).coeffs,
            lowering_integral_apply(p, xn).coeffs,
        )
    return cmp.report()


def raising_suite(p: MeixnerParams, N: int, tol: float) -> CheckReport:
    """Classical: difference-operator form and exponential symbol. Free: resolvent symbol."""
    p = p.with_(t=1)
    if p.framework is Framework.FREE:
        return _renamed(free_raising_resolvent_check(p.lam, p.eta, N, tol), "raising")
    cmp = Comparator("raising", tol)
    B = ops_basis(p, N)
    for n in range(N):
        try:
            image = raising_difference_apply(p, B[n], tol)
        except ArithmeticError as exc:
            cmp.fail(f"difference form P_{n}: {exc}")
            continue
        cmp.sequence(f"difference form P_{n}", image.coeffs, B[n + 1].coeffs)
    sub = classical_raising_exponential_check(p.lam, p.eta, N, tol)
    return _merge("raising", cmp.report(), sub)


def series_suite(p: MeixnerParams, N: int, tol: float) -> CheckReport:
    """Inverse pairs, cumulant-transform identities and generating functions."""
    cmp = Comparator("series", tol)
    z = TruncatedSeries.z(N)
    inv = psi_inv(p, N)
    cmp.sequence("Psi(Psi^-1)", psi(p, N).compose(inv).coeffs, z.coeffs)
    cmp.sequence("Psi^-1 closed form", inv.coeffs, psi_inv_closed(p, N).coeffs)
    unit = p.with_(t=1)
    if p.framework is Framework.CLASSICAL:
        cmp.sequence("Psi^-1 = C'", inv.coeffs, cumulant_series(unit, N + 1).derivative().coeffs)
    else:
        C = cumulant_series(unit, N + 1)
        cmp.sequence("Psi^-1 = C/z", inv.coeffs, C.shift_down(1).coeffs)
        cmp.sequence(
            "C(Psi)",
            C.truncate(N).compose(psi_free(p.lam, p.eta, N)).coeffs,
            c_compose_psi_free(p.lam, p.eta, N).coeffs,
        )
        cmp.sequence("1/Psi gap", reciprocal_psi_gap(p.lam, p.eta, N).coeffs, z.coeffs)

    B = ops_from_jacobi(mu_jacobi(p, N), N)
    classical = p.framework is Framework.CLASSICAL
    for x0 in GF_POINTS:
        G = generating_function(p, x0, N)
        want = [B[n](x0) / factorial(n) if classical else B[n](x0) for n in range(N + 1)]
        cmp.sequence(f"generating function at x={x0}", G.coeffs, want)
    return cmp.report()


def cumulants_suite(p: MeixnerParams, N: int, tol: float) -> CheckReport:
    """Partition-recursion cumulants of ``mu`` against the series built from ``nu``."""
    cmp = Comparator("cumulants", tol)
    cap = MAX_CLASSICAL if p.framework is Framework.CLASSICAL else MAX_FREE
    n = max(2, min(N, cap))
    m = moments(mu_jacobi(p, n), n)
    c = moments_to_cumulants(p.framework, m, n)
    C = cumulant_series(p, n)
    for k in range(1, n + 1):
        scale = factorial(k) if p.framework is Framework.CLASSICAL else 1
        cmp.scalar(f"C_{k}", c[k - 1], C[k] * scale)
    cmp.sequence("moment round trip", cumulants_to_moments(p.framework, c, n), m)
    return cmp.report()


def decomposition_suite(p: MeixnerParams, N: int, tol: float) -> CheckReport:
    """``x = d^dag (1 + lam d + eta d^2) + d`` as a matrix identity."""
    return _renamed(multiplication_decomposition_check(p.with_(t=1), max(N, 3), tol), "decomposition")


def _renamed(r: CheckReport, name: str) -> CheckReport:
    return CheckReport(name, r.passed, r.max_abs_error, r.detail, r.comparisons)


def _merge(name: str, *reports: CheckReport) -> CheckReport:
    errors = [r.max_abs_error for r in reports if r.max_abs_error is not None]
    detail = next((r.detail for r in reports if r.detail), None)
    return CheckReport(
        name,
        all(r.passed for r in reports),
        max(errors) if errors else None,
        detail,
        sum(r.comparisons for r in reports),
    )


SUITES: dict[str, Callable[[MeixnerParams, int, float], CheckReport]] = {
    "lowering": lowering_suite,
    "raising": raising_suite,
    "series": series_suite,
    "cumulants": cumulants_suite,
    "decomposition": decomposition_suite,
}


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    params: MeixnerParams
    order: int
    passed: bool
    max_abs_error: float | None  # None: every comparison exact
    detail: str | None
    elapsed_ms: int

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


def run_suite(name: str, p: MeixnerParams, N: int, tol: float) -> VerificationReport:
    """Run one suite, turning an exception into a failed report."""
    start = time.perf_counter()
    try:
        r = SUITES[name](p, N, tol)
        passed, err, detail = r.passed, r.max_abs_error, r.detail
    except (ArithmeticError, ValueError) as exc:
        passed, err, detail = False, float("inf"), f"{type(exc).__name__}: {exc}"
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(name, p, N, passed, err, detail, elapsed)
