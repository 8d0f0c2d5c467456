from math import factorial

import pytest

from staircase.combinat import (
    brute_force_tree_count,
    check_bijections,
    check_fcrossing_theorem,
    count_staircase_trees,
    cycles_of,
    dyck_moment,
    dyck_path_weight,
    dyck_paths,
    forest_of,
    forest_permutation,
    matching_stats,
    perfect_matchings,
    phi,
    tree_to_cycle,
)
from staircase.errors import BudgetExceeded, NotATree
from staircase.polyring import MultiPoly
from staircase.tableaux import StaircaseTableau, enumerate_tableaux, enumerate_type, z_poly

ALPHA, GAMMA = MultiPoly.var("alpha"), MultiPoly.var("gamma")


def ab_forests(n):
    return {forest_of(T) for T in enumerate_tableaux(n, labels=("alpha", "beta"))}


def test_trivial_forest():
    F = forest_of(StaircaseTableau(1, {(1, 1): "alpha"}))
    assert F.roots() == [(1, 1)] and F.is_tree()


def test_n2_tree():
    T = StaircaseTableau(2, {(1, 1): "alpha", (1, 2): "alpha", (2, 1): "beta"})
    F = forest_of(T)
    assert F.is_tree() and F.components() == [[1, 2]]
    assert tree_to_cycle(F) == (1, 2)


def test_not_a_tree():
    F = forest_of(StaircaseTableau(2, {(1, 2): "alpha", (2, 1): "beta"}))
    with pytest.raises(NotATree):
        tree_to_cycle(F)


def test_tree_counts():
    assert count_staircase_trees(1) == 1
    assert count_staircase_trees(4) == 6
    assert count_staircase_trees(6) == 120
    for n in range(1, 7):
        assert brute_force_tree_count(n) == count_staircase_trees(n) == factorial(n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_forest_count(n):
    assert len(ab_forests(n)) == factorial(n)


def test_tree_cycles_n3_n4():
    for n in (3, 4):
        cyc = sorted(tree_to_cycle(F) for F in ab_forests(n) if F.is_tree())
        assert len(cyc) == len(set(cyc)) == factorial(n - 1)
        assert all(len(c) == n for c in cyc)
    got = {tree_to_cycle(F) for F in ab_forests(4) if F.is_tree()}
    assert {(1, 2, 3, 4), (1, 3, 2, 4), (1, 3, 4, 2)} <= got


def test_cycles_match_components():
    for F in ab_forests(4):
        assert sorted(map(sorted, cycles_of(forest_permutation(F)))) == sorted(F.components())


def test_phi_n1():
    img = phi(StaircaseTableau(1, {(1, 1): "alpha"}))
    assert img.perm == (1,) and img.sign1 == (1,) and img.sign2 == (1,)


@pytest.mark.parametrize("n", range(1, 5))
def test_phi_bijective(n):
    imgs = {phi(T) for T in enumerate_tableaux(n)}
    assert len(imgs) == 4 ** n * factorial(n)


def test_phi_fixed_type_signed_permutations():
    for sigma in ("BWB", "WWB", "BBB"):
        imgs = {(phi(T).perm, phi(T).sign2) for T in enumerate_type(sigma)}
        assert len(imgs) == 2 ** 3 * factorial(3)


def test_dyck_small():
    assert dyck_moment(0) == 1
    assert dyck_moment(1) == 1 + ALPHA + GAMMA
    assert sorted(dyck_paths(1)) == ["UDUD", "UUDD"]


@pytest.mark.parametrize("n", range(6))
def test_dyck_vs_enumeration(n):
    rhs = z_poly(n).subs(beta=1, delta=0, y=1)
    assert dyck_moment(n) == rhs
    if n <= 4:
        assert sum((dyck_path_weight(p) for p in dyck_paths(n)), MultiPoly()) == rhs


def test_matching_stats():
    assert matching_stats([(1, 2), (3, 4), (5, 6)]) == (0, 0, 0)
    # (1,3) is crossed by (2,4); (2,4) crosses nothing to its right
    assert matching_stats([(1, 3), (2, 4)]) == (0, 0, 1)
    assert matching_stats([(1, 4), (2, 3)]) == (0, 1, 0)


def test_matching_counts():
    assert [sum(1 for _ in perfect_matchings(2 * k)) for k in range(1, 6)] == [1, 3, 15, 105, 945]


@pytest.mark.parametrize("n", range(5))
def test_fcrossing(n):
    assert check_fcrossing_theorem(n).passed


def test_fcrossing_budget():
    with pytest.raises(BudgetExceeded):
        check_fcrossing_theorem(5)


def test_check_bijections():
    assert check_bijections(3).passed
