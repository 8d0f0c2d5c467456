from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from staircase.errors import DegenerateParameters
from staircase.exact import (
    GaussianRational,
    I,
    LaurentSeries,
    QuadExt,
    as_rational,
    format_rational,
    qbinomial,
    qint,
    qpochhammer,
    rational_sqrt,
    require_nonzero,
    sqrt_exact,
)

rats = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50))
gauss = st.builds(GaussianRational, rats, rats)


def test_as_rational_parses_p_over_q():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational("-2") == -2
    assert format_rational(Fraction(6, 4)) == "3/2"


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(2) is None


def test_require_nonzero_names_factor():
    with pytest.raises(DegenerateParameters) as e:
        require_nonzero(0, "1-abcd")
    assert e.value.factor == "1-abcd"


def test_i_squared():
    assert I * I == -1
    assert (1 + I) * (1 - I) == 2


@given(gauss, gauss, gauss)
def test_gaussian_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)


@given(gauss)
def test_gaussian_inverse(x):
    if not x.is_zero():
        assert x * (1 / x) == 1


@given(rats, rats, rats, rats)
def test_quadext_field(p1, q1, p2, q2):
    x, y = QuadExt(3, p1, q1), QuadExt(3, p2, q2)
    assert (x + y) * (x - y) == x * x - y * y
    if not y.is_zero():
        assert (x / y) * y == x


def test_sqrt_exact_rational_and_irrational():
    assert sqrt_exact(Fraction(4, 9)) == Fraction(2, 3)
    s = sqrt_exact(2)
    assert s * s == 2
    assert not QuadExt(2, 0, 1).is_rational()


def test_laurent_gen_inverse():
    t = LaurentSeries.gen()
    x = (1 - t) / t
    assert x.coefficient(-1) == 1 and x.coefficient(0) == -1
    assert ((1 - t) * (1 / (1 - t))).coefficient(0) == 1


def test_qpochhammer_and_qint():
    q = Fraction(1, 2)
    assert qpochhammer(q, q, 0) == 1
    assert qpochhammer(Fraction(1, 3), q, 2) == (1 - Fraction(1, 3)) * (1 - Fraction(1, 6))
    assert qint(3, q) == 1 + q + q * q
    assert qint(0, q) == 0


def test_qbinomial_at_one_limit_values():
    q = Fraction(1, 3)
    # [4 choose 2]_q = (1+q^2)(1+q+q^2)
    assert qbinomial(4, 2, q) == (1 + q * q) * (1 + q + q * q)
