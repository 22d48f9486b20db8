from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meixner.jacobi import (
    JacobiCoeffs,
    gauss_quadrature,
    moments,
    mu_jacobi,
    norms,
    nu_jacobi,
    support_estimate,
)
from meixner.params import Framework, MeixnerParams, classical, default_grid, free
from meixner.poly import ops_from_jacobi

lams = st.fractions(min_value=-4, max_value=4, max_denominator=6)
etas = st.fractions(min_value=0, max_value=4, max_denominator=6)
ts = st.fractions(min_value=Fraction(1, 6), max_value=4, max_denominator=6)
frameworks = st.sampled_from(list(Framework))


def brute_moments(J: JacobiCoeffs, N: int) -> list:
    """Top-left entries of powers of the full (unsymmetrized) tridiagonal matrix."""
    size = J.length + 1
    T = np.empty((size, size), dtype=object)
    T[...] = Fraction(0)
    for i in range(size):
        T[i, i] = J.b[i]
        if i + 1 < size:
            T[i, i + 1] = Fraction(1)
            T[i + 1, i] = J.a[i]
    out, P = [], np.identity(size, dtype=object) * Fraction(1)
    for _ in range(N + 1):
        out.append(P[0, 0])
        P = P.dot(T)
    return out


def test_mu_examples():
    J = mu_jacobi(classical(0, 0), 4)
    assert J.b == (0, 0, 0, 0, 0) and J.a == (1, 2, 3, 4)
    J = mu_jacobi(free(0, 0), 4)
    assert J.b == (0, 0, 0, 0, 0) and J.a == (1, 1, 1, 1)
    J = mu_jacobi(classical(1, 2), 3)
    assert J.b[3] == 3 and J.a[2] == 15


def test_free_mu_first_coefficients_differ():
    J = mu_jacobi(free(2, 3, 5), 3)
    assert J.b == (0, 2, 2, 2)
    assert J.a == (5, 8, 8)


def test_nu_examples():
    J = nu_jacobi(classical(1, 1), 2)
    assert J.b == (1, 2, 3) and J.a == (2, 6)
    J = nu_jacobi(free(Fraction(1, 2), 3), 2)
    assert J.b == (Fraction(1, 2),) * 3 and J.a == (3, 3)


@pytest.mark.parametrize("fw", list(Framework))
def test_point_mass_when_eta_zero(fw):
    J = nu_jacobi(MeixnerParams(fw, 2, 0), 5)
    assert J.first_zero() == 1
    assert moments(J, 8) == [2**n for n in range(9)]
    rule = gauss_quadrature(J, 6)
    assert list(rule.nodes) == [2.0] and list(rule.weights) == [1.0]
    assert support_estimate(J, 6) == (2.0, 2.0)


def test_nu_is_t_independent():
    assert nu_jacobi(classical(1, 2, 1), 5) == nu_jacobi(classical(1, 2, 7), 5)


def test_semicircle_moments():
    J = JacobiCoeffs([0] * 4, [1] * 3)
    assert moments(J, 6) == [1, 0, 1, 0, 2, 0, 5]


def test_gaussian_fourth_moment():
    assert moments(mu_jacobi(classical(0, 0), 2), 4)[4] == 3


def test_moments_need_enough_coefficients():
    J = mu_jacobi(classical(1, 1), 2)
    moments(J, 5)
    with pytest.raises(ValueError, match="need coefficients"):
        moments(J, 6)


@settings(max_examples=40, deadline=None)
@given(frameworks, lams, etas, ts)
def test_moments_match_matrix_powers(fw, lam, eta, t):
    J = mu_jacobi(MeixnerParams(fw, lam, eta, t), 8)
    assert moments(J, 12) == brute_moments(J, 12)


def test_norm_examples():
    assert norms(mu_jacobi(classical(0, 0), 3), 3)[3] == 6
    assert norms(mu_jacobi(free(0, 0), 3), 3)[3] == 1
    assert norms(mu_jacobi(classical(1, 1), 3), 0) == [1]


def test_norms_reject_finite_support():
    with pytest.raises(ValueError, match="zero norm"):
        norms(nu_jacobi(free(1, 0), 3), 2)


def test_negative_offdiagonal_rejected():
    with pytest.raises(ValueError, match="negative"):
        JacobiCoeffs([0, 0], [-1])
    with pytest.raises(ValueError):
        JacobiCoeffs([0, 0], [1, 1])


def test_quadrature_examples():
    rule = gauss_quadrature(JacobiCoeffs([0, 0], [1]), 2)
    assert list(rule.nodes) == [-1.0, 1.0]
    assert list(rule.weights) == [0.5, 0.5]
    rule = gauss_quadrature(mu_jacobi(classical(3, 1), 2), 1)
    assert list(rule.nodes) == [0.0] and list(rule.weights) == [1.0]
    rule = gauss_quadrature(nu_jacobi(classical(3, 1), 2), 1)
    assert list(rule.nodes) == [3.0]
    rule = gauss_quadrature(mu_jacobi(classical(0, 0), 8), 8)
    assert abs(rule.moment(6) - 15) <= 1e-10


@pytest.mark.parametrize("p", default_grid(), ids=lambda p: f"{p.framework.value}-{p.lam}-{p.eta}")
def test_quadrature_norm_identity(p):
    N = 12
    J = mu_jacobi(p, N + 1)
    B = ops_from_jacobi(J, N)
    rule = gauss_quadrature(J, N + 1)
    nrm = norms(J, N)
    for n in range(N + 1):
        val = rule.integrate(lambda x: np.array([float(B[n](float(v))) for v in x]) ** 2)
        assert abs(val - float(nrm[n])) <= 1e-9 * float(nrm[n])


def test_support_examples():
    lo, hi = support_estimate(mu_jacobi(free(0, 0), 40), 40)
    assert -2 <= lo and hi <= 2
    assert abs(lo + 2) <= 0.02 and abs(hi - 2) <= 0.02
    lo, hi = support_estimate(mu_jacobi(free(1, 0), 40), 40)
    assert abs(lo + 1) <= 0.05 and abs(hi - 3) <= 0.05


def test_support_grows_with_m():
    J = mu_jacobi(free(1, 1), 40)
    prev = support_estimate(J, 1)
    for m in range(2, 30):
        cur = support_estimate(J, m)
        assert cur[0] <= prev[0] + 1e-12 and cur[1] >= prev[1] - 1e-12
        prev = cur


def test_free_support_is_wider_than_stated_radius():
    # lam + 2 sqrt(t + eta) is the right edge of the support; the radius
    # lam v sqrt(eta + t) understates it
    lo, hi = support_estimate(mu_jacobi(free(0, 0), 200), 200)
    assert hi > 1.99


@pytest.mark.parametrize("lam, eta", [(1, 1), (Fraction(1, 2), 3), (-2, Fraction(1, 3))])
def test_classical_nu_is_shifted_mu(lam, eta):
    nu = nu_jacobi(classical(lam, eta), 8)
    mu = mu_jacobi(classical(lam, eta, 2 * eta), 8)
    assert nu.a == mu.a
    assert nu.b == tuple(b + lam for b in mu.b)


def test_free_nu_equals_mu_only_when_centered():
    from meixner.operators import nu_as_shifted_mu

    nu, mu = nu_as_shifted_mu(0, 3, 6)
    assert nu == mu
    nu, mu = nu_as_shifted_mu(1, 3, 6)
    assert nu.a == mu.a and nu.b[1:] == mu.b[1:]
    assert nu.b[0] != mu.b[0]


def test_float_parameters():
    J = mu_jacobi(classical(0.5, 0.25), 4)
    assert J.b[2] == 1.0 and J.a[1] == pytest.approx(2 * 1.25)
