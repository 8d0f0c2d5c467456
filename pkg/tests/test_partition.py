from fractions import Fraction as F
from math import factorial
import random

import pytest

from staircase.errors import DegenerateParameters, IrrationalDiscriminant
from staircase.moments import AWParams
from staircase.partition import (
    GreekParams,
    abcd_from_greek,
    factorization_checks,
    genfun_coeffs,
    greek_from_abcd,
    homog_sym_8,
    z_fugacity_explicit,
    z_q0_explicit,
    z_q1_closed,
)
from staircase.polyring import MultiPoly, poly_eval
from staircase.reference import Z2_Q0_TEXT, read_poly
from staircase.tableaux import z_poly

Y = MultiPoly.var("y")


def test_greek_from_zero_params():
    g = greek_from_abcd(AWParams(0, 0, 0, 0, F(1, 3)))
    assert (g.alpha, g.beta, g.gamma, g.delta) == (F(2, 3), F(2, 3), 0, 0)


def test_greek_direct_substitution():
    # alpha = (1-q)/(1+ac+a+c) = 1/(1+0+1+0)
    g = greek_from_abcd(AWParams(1, 0, 0, 0, 0))
    assert (g.alpha, g.beta, g.gamma, g.delta) == (F(1, 2), 1, 0, 0)


def test_greek_degenerate():
    with pytest.raises(DegenerateParameters):
        greek_from_abcd(AWParams(-1, 0, 0, 0, 0))


def test_abcd_from_greek_trivial():
    P = abcd_from_greek(GreekParams(F(2, 3), F(2, 3), 0, 0, F(1, 3)))
    assert P.as_tuple() == (0, 0, 0, 0, F(1, 3))


def test_round_trip():
    rng = random.Random(5)
    done = 0
    while done < 10:
        a, c = sorted((F(rng.randint(-8, 9), 10) for _ in range(2)), reverse=True)
        b, d = sorted((F(rng.randint(-8, 9), 10) for _ in range(2)), reverse=True)
        if a == c or b == d:
            continue
        P = AWParams(a, b, c, d, F(rng.randint(0, 5), 7))
        assert abcd_from_greek(greek_from_abcd(P)) == P
        done += 1


def test_irrational_discriminant():
    with pytest.raises(IrrationalDiscriminant):
        abcd_from_greek(GreekParams(F(1, 2), F(1, 2), F(1, 5), 0, 0))


def test_z_fugacity_small(P):
    assert z_fugacity_explicit(P, F(3), 0) == 1
    g = greek_from_abcd(P)
    y = F(3)
    assert z_fugacity_explicit(P, y, 1) == g.alpha * y + g.delta * y + g.beta + g.gamma


@pytest.mark.parametrize("n", range(6))
def test_z_fugacity_vs_enumeration(P, n):
    g = greek_from_abcd(P)
    for y in (F(1), F(2), F(4, 9)):
        assert z_fugacity_explicit(P, y, n) == poly_eval(z_poly(n), g.point(y))


def test_homog_sym_8():
    A, B, C, D = F(2), F(3), F(1, 2), F(5)
    assert homog_sym_8(0, A, B, C, D) == 1
    assert homog_sym_8(-2, A, B, C, D) == 0
    assert homog_sym_8(1, A, B, C, D) == A + B + C + D + 1 / A + 1 / B + 1 / C + 1 / D


@pytest.mark.parametrize("n", range(5))
def test_z_q0_vs_enumeration(P, n):
    P0 = P.replace(q=0)
    g = greek_from_abcd(P0)
    for y in (F(1), F(2), F(4, 9)):
        assert z_q0_explicit(P0, y, n) == poly_eval(z_poly(n), g.point(y))


def test_reference_q0_z2(P):
    P0 = P.replace(q=0)
    g = greek_from_abcd(P0)
    assert z_q0_explicit(P0, F(5, 3), 2) == poly_eval(read_poly(Z2_Q0_TEXT), g.point(F(5, 3)))


def test_z_q1_closed_specializations():
    for n in range(6):
        assert z_q1_closed(n, (1, 1, 1, 1)) == 4 ** n * factorial(n)
        assert z_q1_closed(n, (1, 1, 0, 0)) == factorial(n + 1)
        assert z_q1_closed(n, (1, 1, 1, 0)) == [1, 3, 15, 105, 945, 10395][n]


def test_genfun_examples():
    assert genfun_coeffs("genfun", 3)[3] == 13 + 20 * Y + 9 * Y ** 2 + Y ** 3
    assert genfun_coeffs("odd_fib", 3)[3] == 13 + 20 * Y + 9 * Y ** 2 + Y ** 3
    assert genfun_coeffs("fib2", 3)[3] == 2 * (1 + Y) * (8 + 15 * Y + 8 * Y ** 2)
    assert genfun_coeffs("genfun", 5, y=0) == [1, 2, 5, 13, 34, 89]


def test_narayana():
    # Narayana polynomials: Z_3 = 1 + 6y + 6y^2 + y^3 shifted; check against enumeration
    col = genfun_coeffs("narayana", 4)
    for n in range(5):
        assert col[n] == z_poly(n).subs(alpha=1, beta=1, gamma=0, delta=0, q=0)


def test_factorizations():
    rep = factorization_checks(5)
    assert rep.passed, rep.detail
