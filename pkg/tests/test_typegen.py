from itertools import product
from math import factorial

import pytest

from staircase.errors import NotCoarser
from staircase.polyring import MultiPoly
from staircase.tableaux import z_sigma_poly
from staircase.typegen import (
    check_cwth,
    check_cwth_all,
    coarsenings,
    composition_of_type,
    qstat,
    st_statistic,
    z_sigma_delta0,
    z_sigma_ntw,
)

Q, ALPHA, BETA, GAMMA = (MultiPoly.var(v) for v in ("q", "alpha", "beta", "gamma"))


def words(n):
    return ["".join(w) for w in product("BW", repeat=n)]


def test_compositions():
    assert composition_of_type("•∘∘∘•∘∘") == (3, 4, 1)
    assert composition_of_type("W") == (2,)
    assert composition_of_type("B") == (1, 1)


def test_coarsenings():
    assert set(coarsenings((3, 4, 1))) == {(3, 4, 1), (7, 1), (3, 5), (8,)}
    assert coarsenings((5,)) == [(5,)]
    assert len(coarsenings((1, 1, 1))) == 4


def test_qstat():
    assert qstat((4,), Q) == 1
    assert qstat((1, 1), Q) == 1 + Q
    assert qstat((3, 4, 1), 1) == 432


def test_st():
    assert st_statistic((3, 4, 1), (3, 4, 1)) == 3
    assert st_statistic((3, 4, 1), (8,)) == 0
    assert st_statistic((3, 4, 1), (7, 1)) == 2
    with pytest.raises(NotCoarser):
        st_statistic((3, 4, 1), (2, 6))


def test_ntw_reference_example():
    expect = Q ** 7 + 7 * Q ** 6 + 24 * Q ** 5 + 52 * Q ** 4 + 76 * Q ** 3 + 75 * Q ** 2 + 47 * Q + 15
    assert z_sigma_ntw("•∘∘∘•∘∘") == expect
    assert z_sigma_ntw("B") == 1


@pytest.mark.parametrize("n", range(6))
def test_ntw_vs_enumeration(n):
    for w in words(n):
        assert z_sigma_ntw(w) == z_sigma_poly(w).subs(alpha=1, beta=1, gamma=0, delta=0)


@pytest.mark.parametrize("n", range(6))
def test_ntw_at_q1_sums_to_factorial(n):
    assert sum(z_sigma_ntw(w).subs(q=1).constant_term() for w in words(n)) == factorial(n + 1)


def test_delta0_small():
    assert z_sigma_delta0("B") == ALPHA
    assert z_sigma_delta0("W") == BETA + GAMMA


@pytest.mark.parametrize("n", range(6))
def test_delta0_vs_enumeration(n):
    for w in words(n):
        assert z_sigma_delta0(w) == z_sigma_poly(w).subs(delta=0)


def test_cwth_relation_one_small():
    for total in range(4):
        for k in range(total + 1):
            for s1 in words(k):
                for s2 in words(total - k):
                    assert check_cwth(s1, s2, "").children[0].passed


def test_cwth_all():
    assert check_cwth_all(5).passed
