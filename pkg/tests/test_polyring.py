from fractions import Fraction

from hypothesis import given, strategies as st

from staircase.polyring import MultiPoly, TruncatedSeries, poly_eval, series_compose, series_reverse

A, B, Y = MultiPoly.var("alpha"), MultiPoly.var("beta"), MultiPoly.var("y")
small = st.integers(-4, 4)


def polys():
    return st.builds(lambda c0, c1, c2, c3: c0 + c1 * A + c2 * A * B + c3 * Y ** 2, small, small, small, small)


@given(polys(), polys(), polys())
def test_ring_axioms(p, r, s):
    assert p * (r + s) == p * r + p * s
    assert (p * r) * s == p * (r * s)
    assert p - p == MultiPoly()


@given(polys(), st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_eval_is_a_homomorphism(p, a, y):
    pt = {"alpha": a, "beta": 2, "y": y}
    assert poly_eval(p * p + p, pt) == poly_eval(p, pt) ** 2 + poly_eval(p, pt)


def test_subs_partial_and_str():
    p = A * Y + B
    assert str(p) == "alpha*y + beta"
    assert p.subs(y=1) == A + B
    assert p.subs(alpha=0, beta=3) == 3


def test_coefficient_and_div_monomial():
    p = A ** 2 * Y + 3 * A * B
    assert p.coefficient("y", 1) == A ** 2
    assert p.div_monomial(alpha=1) == A * Y + 3 * B
    assert (p + 1).div_monomial(alpha=1) is None


def test_series_reverse_oracle():
    # w = t/((1+t)(1+yt)) at y=0 is t/(1+t); its reverse is w/(1-w) = w + w^2 + ...
    t = TruncatedSeries.t(6)
    one = TruncatedSeries([1], 6)
    w = t * (one + t).inverse()
    r = series_reverse(w)
    assert [r[k] for k in range(6)] == [0, 1, 1, 1, 1, 1]
    back = series_compose(w, r)
    assert [back[k] for k in range(6)] == [0, 1, 0, 0, 0, 0]


def test_series_reverse_with_y0_from_spec():
    t = TruncatedSeries.t(5)
    one = TruncatedSeries([1], 5)
    f = t * ((one + t) * (one + 0 * t)).inverse()
    g = series_reverse(f)
    assert series_compose(f, g)[1] == 1
    assert all(series_compose(f, g)[k] == 0 for k in range(2, 5))
