from collections import Counter
from fractions import Fraction
from itertools import product
from math import factorial

import pytest

from staircase.errors import BudgetExceeded, OutOfShape
from staircase.polyring import MultiPoly, poly_eval
from staircase.tableaux import (
    LABELS,
    StaircaseTableau,
    enumerate_tableaux,
    enumerate_type,
    fill_qu,
    format_type,
    parse_type,
    type_of,
    validate,
    weight,
    z_fast,
    z_poly,
    z_sigma_poly,
)


def all_fillings(n):
    """Oracle: every assignment of {empty} u LABELS to the boxes, filtered by validate."""
    boxes = [(i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i)]
    for choice in product((None,) + LABELS, repeat=len(boxes)):
        T = StaircaseTableau(n, {b: c for b, c in zip(boxes, choice) if c})
        if validate(T):
            yield T


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_walk_equals_brute_force(n):
    assert set(enumerate_tableaux(n)) == set(all_fillings(n))


@pytest.mark.parametrize("n", range(6))
def test_counts(n):
    assert sum(1 for _ in enumerate_tableaux(n)) == 4 ** n * factorial(n)


@pytest.mark.parametrize("sigma", ["", "B", "W", "BW", "WWB", "BWBW"])
def test_type_counts(sigma):
    ts = list(enumerate_type(sigma))
    assert len(ts) == 2 ** len(sigma) * factorial(len(sigma))
    assert all(type_of(T) == sigma for T in ts)


def test_parse_and_format_type():
    assert parse_type("●○○") == "BWW" == parse_type("100") == parse_type("•∘∘")
    assert format_type("BWW", dots=True) == "•∘∘"


def test_out_of_shape():
    with pytest.raises(OutOfShape):
        StaircaseTableau(2, {(2, 2): "alpha"})


def test_json_roundtrip():
    for T in enumerate_tableaux(2):
        assert StaircaseTableau.from_json(T.dumps()) == T


def test_fill_and_weight_small_example():
    # n=2, diagonal alpha at (1,2) and delta at (2,1); (1,1) empty sees alpha to the
    # right: the u/q rule looks below, where it finds delta -> u
    T = StaircaseTableau(2, {(1, 2): "alpha", (2, 1): "delta"})
    assert fill_qu(T) == {(1, 1): "u"}
    assert weight(T) == MultiPoly.monomial(alpha=1, delta=1, u=1)


def test_z_poly_is_sum_of_weights():
    y = MultiPoly.var("y")
    for n in range(4):
        acc = MultiPoly()
        for T in enumerate_tableaux(n):
            acc = acc + weight(T) * y ** sum(1 for d in T.diagonal() if d in ("alpha", "delta"))
        assert z_poly(n, keep_u=True) == acc
        assert z_poly(n) == acc.subs(u=1)


def test_z_sigma_sums_to_z():
    for n in range(5):
        tot = sum((z_sigma_poly("".join(w)) for w in product("BW", repeat=n)), MultiPoly())
        assert tot == z_poly(n).subs(y=1)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("STAIRCASE_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        z_poly(4, budget=None)


def test_z_fast_matches_enumeration(P):
    from staircase.partition import greek_from_abcd

    g = greek_from_abcd(P)
    for y in (Fraction(1), Fraction(2), Fraction(4, 9)):
        for n in range(5):
            assert z_fast(P, y, n) == poly_eval(z_poly(n), g.point(y))
