from fractions import Fraction

import pytest

from meixner.params import classical, default_grid, free
from meixner.suites import SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES))
@pytest.mark.parametrize("p", default_grid(), ids=str)
def test_suites_pass_exactly_on_grid(name, p):
    r = run_suite(name, p, 10, 1e-10)
    assert r.passed, r.detail
    assert r.max_abs_error is None
    assert r.status == "pass"


@pytest.mark.parametrize("name", ["series", "cumulants"])
def test_suites_use_given_t(name):
    r = run_suite(name, free(1, Fraction(1, 2), Fraction(7, 3)), 10, 1e-10)
    assert r.passed and r.max_abs_error is None


def test_float_point_reports_numeric_error():
    r = run_suite("raising", classical(0.5, 0.75), 10, 1e-10)
    assert r.passed
    assert r.max_abs_error is not None and r.max_abs_error <= 1e-10


def test_exceptions_become_failures():
    # an impossible tolerance on a float point still yields a report, not a crash
    r = run_suite("raising", classical(1.0, 1.0), 12, 0.0)
    assert not r.passed and r.detail
