from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from meixner.params import (
    CASE_GRID,
    Framework,
    MeixnerCase,
    MeixnerParams,
    alpha_beta,
    classical,
    classify,
    default_grid,
    free,
)

lams = st.fractions(min_value=-10, max_value=10, max_denominator=12)
etas = st.fractions(min_value=0, max_value=10, max_denominator=12)
positive_etas = st.fractions(min_value=Fraction(1, 12), max_value=10, max_denominator=12)


@pytest.mark.parametrize(
    "lam, eta, case",
    [
        (0, 0, MeixnerCase.GAUSSIAN),
        (1, 0, MeixnerCase.POISSON),
        (-2, 0, MeixnerCase.POISSON),
        (2, 1, MeixnerCase.GAMMA),
        (-2, 1, MeixnerCase.GAMMA),
        (3, 2, MeixnerCase.PASCAL),
        (0, 1, MeixnerCase.MEIXNER_SECOND_KIND),
        (1, 1, MeixnerCase.MEIXNER_SECOND_KIND),
    ],
)
def test_classify(lam, eta, case):
    assert classify(lam, eta) is case


def test_classify_boundary_is_exact():
    assert classify(Fraction(1, 3), Fraction(1, 36)) is MeixnerCase.GAMMA


def test_negative_eta_rejected():
    with pytest.raises(ValueError, match="eta must be nonnegative"):
        classify(0, -1)
    with pytest.raises(ValueError, match="eta must be nonnegative"):
        alpha_beta(0, Fraction(-1, 2))
    with pytest.raises(ValueError, match="eta must be nonnegative"):
        classical(0, -1)


@pytest.mark.parametrize(
    "lam, eta, alpha, beta",
    [(0, 0, 0, 0), (-3, 2, 2, 1), (2, 0, -2, 0), (3, 2, -1, -2), (2, 1, -1, -1)],
)
def test_alpha_beta_examples(lam, eta, alpha, beta):
    ab = alpha_beta(lam, eta)
    assert (ab.alpha, ab.beta) == (alpha, beta)


@given(lams, etas)
def test_alpha_beta_factorizes_quadratic(lam, eta):
    ab = alpha_beta(lam, eta)
    # (1 - a x)(1 - b x) = 1 - (a + b) x + a b x^2
    assert -(ab.alpha + ab.beta) == lam
    assert ab.alpha * ab.beta == eta


@given(lams, positive_etas)
def test_alpha_beta_ordering(lam, eta):
    ab = alpha_beta(lam, eta)
    a, b = complex(ab.alpha), complex(ab.beta)
    assert (a.real, a.imag) >= (b.real, b.imag)


@given(lams, etas)
def test_classify_matches_discriminant_sign(lam, eta):
    case = classify(lam, eta)
    if eta == 0:
        assert case in (MeixnerCase.GAUSSIAN, MeixnerCase.POISSON)
        return
    disc = lam * lam - 4 * eta
    expected = {1: MeixnerCase.PASCAL, 0: MeixnerCase.GAMMA, -1: MeixnerCase.MEIXNER_SECOND_KIND}
    assert case is expected[(disc > 0) - (disc < 0)]


def test_float_alpha_beta_complex_pair():
    ab = alpha_beta(1.0, 1.0)
    assert complex(ab.alpha) == pytest.approx(complex(-0.5, 3**0.5 / 2))
    assert complex(ab.beta) == pytest.approx(complex(-0.5, -(3**0.5) / 2))


def test_params_normalize_and_validate():
    p = MeixnerParams("free", "1/2", 3)
    assert p.framework is Framework.FREE
    assert p.lam == Fraction(1, 2) and isinstance(p.eta, Fraction)
    assert p.l == 0
    assert p.is_exact
    assert not classical(0.5, 1).is_exact
    with pytest.raises(ValueError, match="t must be positive"):
        free(0, 0, 0)
    assert p.with_(t=2).t == 2


def test_framework_weights():
    assert [Framework.CLASSICAL.weight(n) for n in range(4)] == [0, 1, 2, 3]
    assert [Framework.FREE.weight(n) for n in range(4)] == [0, 1, 1, 1]


def test_default_grid_covers_every_case_in_both_frameworks():
    grid = default_grid()
    assert len(grid) == 10
    for fw in Framework:
        cases = [p.case for p in grid if p.framework is fw]
        assert cases == list(MeixnerCase)
    assert {(p.lam, p.eta) for p in grid} == set(CASE_GRID)
    assert all(p.t == 1 for p in grid)
