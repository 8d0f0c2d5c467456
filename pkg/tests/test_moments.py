from fractions import Fraction as F
from itertools import permutations, product

import pytest

from staircase.errors import DegenerateParameters
from staircase.moments import (
    AWParams,
    PolySample,
    TridiagonalSpec,
    aw_integrate_poly,
    aw_integrate_q0,
    aw_moments_combinatorial,
    aw_moments_explicit,
    aw_moments_signed,
    aw_moments_tridiagonal,
    aw_poly_coeffs,
    aw_poly_eval,
    hn_ratio,
    orthogonality_check,
    phi_basis_coeffs,
    phi_coeffs,
    phi_eval,
    recurrence_coeffs,
    tridiag_moments,
)


def motzkin_oracle(b, lam, n):
    """Brute force over all step sequences in {-1, 0, 1}^n."""
    total = 0
    for steps in product((-1, 0, 1), repeat=n):
        h, w = 0, 1
        for s in steps:
            if s == 0:
                w *= b[h]
            elif s == -1:
                w *= lam[h]
            h += s
            if h < 0:
                break
        if h == 0:
            total += w
    return total


def test_dyck_counts():
    assert tridiag_moments(TridiagonalSpec([0] * 5, [1] * 5), 4) == [1, 0, 1, 0, 2]


def test_tridiag_vs_brute_force():
    b = [F(1, 2), F(-1, 3), F(2, 5), F(1, 7), F(3, 4), F(1, 9), F(2), F(-1), F(1, 3)]
    lam = [0, F(1, 3), F(2, 3), F(-1, 5), F(5, 7), F(7), F(1, 8), F(2, 9), F(4)]
    mus = tridiag_moments(TridiagonalSpec(b, lam), 7)
    assert mus == [motzkin_oracle(b, lam, n) for n in range(8)]


def test_reference_mu1(P):
    a, b, c, d = P.a, P.b, P.c, P.d
    assert aw_moments_explicit(P, 1) == (-a - b - c - d + a * b * c + a * b * d + a * c * d + b * c * d) / (
        2 * (-1 + a * b * c * d))


@pytest.mark.parametrize("n", range(6))
def test_four_routes_agree(P, n):
    vals = {aw_moments_explicit(P, n), aw_moments_tridiagonal(P, n),
            aw_moments_combinatorial(P, n), aw_moments_signed(P, n)}
    assert len(vals) == 1


@pytest.mark.parametrize("n", range(5))
def test_q0_routes_agree(P, n):
    P0 = P.replace(q=0)
    vals = {aw_moments_explicit(P0, n), aw_moments_tridiagonal(P0, n),
            aw_moments_combinatorial(P0, n), aw_integrate_q0(PolySample.monomial(n), P0)}
    assert len(vals) == 1


def test_p1_against_recurrence(P):
    # P_1 from the recurrence seeded with P_0 = 1, P_{-1} = 0: A_0 P_1 + B_0 = 2x
    x = F(1)
    A0, B0, _ = recurrence_coeffs(0, P)
    assert aw_poly_eval(1, x, P) == (2 * x - B0) / A0


@pytest.mark.parametrize("n", range(1, 5))
def test_three_term_recurrence(P, n):
    x = F(3, 7)
    A, B, C = recurrence_coeffs(n, P)
    lhs = A * aw_poly_eval(n + 1, x, P) + B * aw_poly_eval(n, x, P) + C * aw_poly_eval(n - 1, x, P)
    assert lhs == 2 * x * aw_poly_eval(n, x, P)
    assert aw_poly_eval(n, x, P) == PolySample(aw_poly_coeffs(n, P))(x)


def test_orthogonality(P):
    for m in range(4):
        for n in range(4):
            assert orthogonality_check(m, n, P) == (hn_ratio(n, P) if m == n else 0)


def test_phi_basis_roundtrip():
    a, q = F(2, 3), F(1, 5)
    p = PolySample([F(1), F(-2, 3), F(0), F(5, 7), F(1, 2), F(-1), F(3, 11)])
    co = phi_basis_coeffs(p, a, q)
    for x in (F(0), F(1, 3), F(-5, 2)):
        assert sum(c * phi_eval(k, x, a, q) for k, c in enumerate(co)) == p(x)
    assert phi_basis_coeffs(PolySample(phi_coeffs(2, a, q)), a, q) == [0, 0, 1]


def test_phi1_integral(P):
    a, b, c, d = P.a, P.b, P.c, P.d
    got = aw_integrate_poly(PolySample(phi_coeffs(1, a, P.q)), P)
    assert got == (1 - a * b) * (1 - a * c) * (1 - a * d) / (1 - a * b * c * d)


def test_symmetry(P):
    vals = {aw_moments_explicit(AWParams(*p, P.q), 4) for p in permutations((P.a, P.b, P.c, P.d))}
    assert len(vals) == 1


def test_a_zero_uses_symmetry():
    Pz = AWParams(0, F(1, 3), 0, F(1, 7), F(1, 5))
    assert all(aw_moments_explicit(Pz, n) == aw_moments_tridiagonal(Pz, n) for n in range(5))


def test_q0_residues_with_zero_parameters():
    P0 = AWParams(F(1, 2), F(1, 3), 0, 0, 0)
    assert all(aw_integrate_q0(PolySample.monomial(n), P0) == aw_moments_tridiagonal(P0, n)
               for n in range(5))


def test_degenerate_names_factor():
    with pytest.raises(DegenerateParameters) as e:
        aw_moments_explicit(AWParams(1, 1, 1, 1, 0), 2)
    assert "abcd" in e.value.factor


def test_awparams_parse_strings():
    assert AWParams("1/2", 0, "-1/3", 1, "0").a == F(1, 2)
