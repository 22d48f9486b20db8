import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from meixner.scalars import QuadraticSurd, as_scalar, format_scalar, is_exact, rational_sqrt, to_real

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)


def test_perfect_square_collapses_to_fraction():
    assert QuadraticSurd.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert isinstance(QuadraticSurd.sqrt(4), Fraction)


def test_surd_of_nonsquare_is_squarefree():
    r = QuadraticSurd.sqrt(Fraction(8, 3))
    assert isinstance(r, QuadraticSurd)
    assert r.d == 6 and r.b == Fraction(2, 3)
    assert math.isclose(complex(r).real, math.sqrt(8 / 3))


def test_negative_radicand_is_principal_imaginary():
    r = QuadraticSurd.sqrt(-3)
    assert complex(r) == pytest.approx(1j * math.sqrt(3))


@given(rationals.filter(lambda q: q != 0))
def test_sqrt_squares_back(q):
    r = QuadraticSurd.sqrt(q)
    assert r * r == q


@given(rationals, rationals, rationals, rationals)
def test_field_operations_match_complex_floats(a, b, c, e):
    x = QuadraticSurd(a, b, -7)
    y = QuadraticSurd(c, e, -7)
    for exact, approx in [
        (x + y, complex(x) + complex(y)),
        (x - y, complex(x) - complex(y)),
        (x * y, complex(x) * complex(y)),
    ]:
        assert complex(exact) == pytest.approx(approx, rel=1e-12, abs=1e-12)
    if y != 0:
        assert complex(x / y) == pytest.approx(complex(x) / complex(y), rel=1e-9, abs=1e-9)


def test_conjugate_product_is_rational():
    x = QuadraticSurd(1, 2, 5)
    prod = x * x.conjugate()
    assert prod == Fraction(1 - 4 * 5)
    assert isinstance(prod, Fraction)


def test_mixing_radicands_is_rejected():
    with pytest.raises(TypeError):
        QuadraticSurd(0, 1, 2) + QuadraticSurd(0, 1, 3)


def test_mixing_with_float_goes_complex():
    r = QuadraticSurd(0, 1, 2) + 0.5
    assert isinstance(r, complex)


def test_as_scalar_parsing():
    assert as_scalar("1/2") == Fraction(1, 2)
    assert as_scalar("3") == Fraction(3)
    assert isinstance(as_scalar("0.5"), float)
    assert isinstance(as_scalar("1e-3"), float)
    assert as_scalar(2) == Fraction(2) and isinstance(as_scalar(2), Fraction)
    with pytest.raises(TypeError):
        as_scalar(True)
    with pytest.raises(ValueError):
        as_scalar("abc")


def test_is_exact():
    assert is_exact(1) and is_exact(Fraction(1, 3)) and is_exact(QuadraticSurd(0, 1, 2))
    assert not is_exact(0.5) and not is_exact(1j)


def test_to_real_gate():
    assert to_real(1 + 1e-13j) == 1.0
    with pytest.raises(ArithmeticError, match="imaginary residual"):
        to_real(1 + 1e-6j)
    assert to_real(Fraction(1, 2)) == Fraction(1, 2)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(16, 9)) == Fraction(4, 3)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


def test_format_scalar():
    assert format_scalar(Fraction(-3)) == "-3"
    assert format_scalar(Fraction(1, 2)) == "1/2"
    assert format_scalar(0.1) == "0.10000000000000001"
    assert format_scalar(complex(1.5, 0)) == "1.5"
    assert format_scalar(complex(1, -2)) == "1-2j"
