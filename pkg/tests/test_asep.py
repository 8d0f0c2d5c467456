from fractions import Fraction as F
import random
import warnings

import pytest

from staircase.asep import build_chain, state_index, stationary_exact, verify_fugacity_marginal, verify_newthm
from staircase.errors import NonUniqueStationary
from staircase.partition import GreekParams


def rpoint(rng):
    r = lambda: F(rng.randint(1, 9), rng.randint(10, 13))
    return GreekParams(r(), r(), r(), r(), r()), r()


def test_two_state_chain():
    ch = build_chain(1, GreekParams(1, 1, 0, 0, 0))
    assert ch.matrix == ((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)))
    assert stationary_exact(ch) == [F(1, 2), F(1, 2)]


def test_rows_sum_to_one():
    rng = random.Random(1)
    g, u = rpoint(rng)
    for n in range(5):
        assert all(sum(row) == 1 for row in build_chain(n, g, u).matrix)


def test_symmetric_chain_uniform():
    g = GreekParams(F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3))
    pi = stationary_exact(build_chain(3, g, F(1, 3)))
    assert pi == [F(1, 8)] * 8


def test_state_indexing():
    assert state_index("BWW") == 4 and state_index("WWB") == 1
    assert build_chain(2, GreekParams(1, 0, 0, 0, 0)).states == ["WW", "WB", "BW", "BB"]


def test_transition_rules():
    g = GreekParams(F(1, 2), F(1, 3), F(1, 5), F(1, 7), F(1, 11))
    u = F(1, 13)
    P = build_chain(3, g, u).matrix
    i = state_index
    assert P[i("WBW")][i("BBW")] == g.alpha / 4
    assert P[i("BBW")][i("WBW")] == g.gamma / 4
    assert P[i("WWB")][i("WWW")] == g.beta / 4
    assert P[i("WBW")][i("WBB")] == g.delta / 4
    assert P[i("BWW")][i("WBW")] == u / 4
    assert P[i("WBW")][i("BWW")] == g.q / 4


def test_nonunique():
    with pytest.raises(NonUniqueStationary):
        stationary_exact(build_chain(2, GreekParams(0, 0, 0, 0, 0), 0))


def test_warns_outside_unit_interval():
    with pytest.warns(UserWarning):
        build_chain(1, GreekParams(2, 1, 0, 0, 0))


def test_newthm_hand_case():
    assert verify_newthm(1, GreekParams(1, 1, 0, 0, 1)).passed


@pytest.mark.parametrize("seed", range(5))
def test_newthm_random(seed):
    g, u = rpoint(random.Random(seed))
    for n in range(5):
        assert verify_newthm(n, g, u).passed


def test_newthm_delta0_cross_check():
    g, _ = rpoint(random.Random(9))
    rep = verify_newthm(3, GreekParams(g.alpha, g.beta, 0, 0, g.q))
    assert rep.passed
    assert any(c.name.startswith("delta=0") for c in rep.children)


@pytest.mark.parametrize("n", range(4))
def test_marginals(n):
    g, u = rpoint(random.Random(100 + n))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert verify_fugacity_marginal(n, g, u).passed
