"""The acceptance criteria as callable checks.

Each ``criterion_k(n_max=None, seed=0)`` returns a :class:`CheckReport`.
``n_max`` caps every size (used by ``staircase check all --n-max K``); the
default sizes are the full acceptance sizes.  Random points come from a
seeded ``random.Random`` so reruns are identical.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial
import random

from . import kernel
from .asep import verify_fugacity_marginal, verify_newthm
from .combinat import (
    _ab_forests,
    brute_force_tree_count,
    check_bijections,
    check_fcrossing_theorem,
    count_staircase_trees,
    dyck_moment,
)
from .errors import StaircaseError
from .moments import (
    AWParams,
    PolySample,
    aw_integrate_poly,
    aw_integrate_q0,
    aw_moments_combinatorial,
    aw_moments_explicit,
    aw_moments_signed,
    aw_moments_tridiagonal,
    aw_poly_coeffs,
    hn_ratio,
    orthogonality_check,
    phi_basis_coeffs,
    phi_coeffs,
    _greek_product,
    _padd,
)
from .partition import (
    GreekParams,
    factorization_checks,
    genfun_coeffs,
    greek_from_abcd,
    greek_from_abcd_signed,
    z_fugacity_explicit,
    z_q0_explicit,
    z_q1_closed,
)
from .polyring import MultiPoly, poly_eval
from .reference import (
    FIB2_TEXTS,
    GENFUN_TEXTS,
    NTW_SIGMA,
    NTW_TEXT,
    Z1_TEXT,
    Z2_Q0_TEXT,
    Z2_TEXT,
    mu1,
    mu2,
    read_poly,
)
from .report import CheckReport, check, timed
from .tableaux import census, enumerate_tableaux, enumerate_type, z_fast, z_poly, z_sigma_poly
from .typegen import check_cwth_all, z_sigma_delta0, z_sigma_ntw

__all__ = ["CRITERIA", "run_criterion", "run_all", "random_aw_point", "random_greek_point"]


def _cap(size, n_max):
    return size if n_max is None else min(size, n_max)


def _small(rng, lo=-9, hi=9, den=(10, 17), nonzero=True):
    while True:
        num = rng.randint(lo, hi)
        if num or not nonzero:
            return Fraction(num, rng.randint(*den))


def random_aw_point(rng, q=None, depth=7):
    """A rational ``(a, b, c, d, q)`` in ``(-1, 1)`` where every route is defined."""
    while True:
        qq = _small(rng, nonzero=False) if q is None else Fraction(q)
        P = AWParams(_small(rng), _small(rng), _small(rng), _small(rng), qq)
        try:
            g = greek_from_abcd(P)
            _greek_product(g, depth)
            _greek_product(greek_from_abcd_signed(P), depth)
            e4 = P.a * P.b * P.c * P.d
            if any(e4 * qq ** k == 1 for k in range(2 * depth)):
                continue
        except (StaircaseError, ZeroDivisionError):
            continue
        return P


def random_greek_point(rng, positive=True):
    draw = (lambda: Fraction(rng.randint(1, 9), rng.randint(10, 13))) if positive else _small
    return GreekParams(draw(), draw(), draw(), draw(), draw())


def _words(n):
    return ["".join(w) for w in product("BW", repeat=n)]


# -- 1 ------------------------------------------------------------------------


def criterion_1(n_max=None, seed=0):
    reps = []
    for n in range(_cap(6, n_max) + 1):
        expect = 4 ** n * factorial(n)
        got = kernel.count(n) if n == 6 else sum(1 for _ in enumerate_tableaux(n))
        reps.append(check(f"|T_{n}| = 4^n n!", got == expect, f"{got} != {expect}"))
    for n in range(_cap(5, n_max) + 1):
        expect = 2 ** n * factorial(n)
        bad = [(w, c) for w in _words(n) if (c := sum(1 for _ in enumerate_type(w))) != expect]
        reps.append(check(f"per-type counts 2^n n!, n={n}", not bad, f"{bad[:3]}"))
    return CheckReport.combine("1 tableau counts", reps)


# -- 2 ------------------------------------------------------------------------


def criterion_2(n_max=None, seed=0):
    z1, z2 = read_poly(Z1_TEXT), read_poly(Z2_TEXT)
    reps = [check("Z_1 term for term", z_poly(1) == z1, f"{z_poly(1)} vs {z1}")]
    if n_max is None or n_max >= 2:
        reps.append(check("Z_2 term for term", z_poly(2) == z2, f"difference {z_poly(2) - z2}"))
    return CheckReport.combine("2 golden polynomials", reps)


# -- 3 ------------------------------------------------------------------------


def criterion_3(n_max=None, seed=0):
    rng = random.Random(1000 + seed)
    reps = []
    for _ in range(20):
        P = random_aw_point(rng)
        m1, m2 = aw_moments_explicit(P, 1), aw_moments_explicit(P, 2)
        reps.append(check(f"mu_1, mu_2 at {P}", m1 == mu1(P) and m2 == mu2(P),
                          f"mu_1 {m1} vs {mu1(P)}, mu_2 {m2} vs {mu2(P)}"))
    return CheckReport.combine("3 moment golden values", reps)


# -- 4 ------------------------------------------------------------------------


def criterion_4(n_max=None, seed=0):
    rng = random.Random(2000 + seed)
    reps = []
    for _ in range(10):
        P = random_aw_point(rng)
        for n in range(_cap(6, n_max) + 1):
            vals = [aw_moments_explicit(P, n), aw_moments_tridiagonal(P, n),
                    aw_moments_combinatorial(P, n), aw_moments_signed(P, n)]
            reps.append(check(f"mu_{n} at {P}", len(set(vals)) == 1 and all(
                isinstance(v, Fraction) for v in vals), f"values {vals}"))
    return CheckReport.combine("4 four-way moment agreement", reps)


# -- 5 ------------------------------------------------------------------------


def _random_y(rng):
    return Fraction(rng.randint(1, 12), rng.randint(1, 7))


def criterion_5(n_max=None, seed=0):
    rng = random.Random(3000 + seed)
    reps = []
    for _ in range(10):
        P, y = random_aw_point(rng), _random_y(rng)
        g = greek_from_abcd(P)
        for n in range(_cap(5, n_max) + 1):
            enum = poly_eval(z_poly(n), g.point(y))
            expl = z_fugacity_explicit(P, y, n)
            fast = z_fast(P, y, n)
            reps.append(check(f"Z_{n}(y={y}) at {P}", enum == expl == fast,
                              f"enumeration {enum}, explicit {expl}, tridiagonal {fast}"))
    return CheckReport.combine("5 fugacity partition function", reps)


# -- 6 ------------------------------------------------------------------------


def _random_poly(rng, deg):
    return PolySample([_small(rng, nonzero=False) for _ in range(deg)] + [_small(rng)])


def criterion_6(n_max=None, seed=0):
    rng = random.Random(4000 + seed)
    reps = []
    z2q0 = read_poly(Z2_Q0_TEXT)
    reps.append(check("reference Z_2(y;...;0)", z_poly(2).subs(q=0) == z2q0,
                      f"difference {z_poly(2).subs(q=0) - z2q0}"))
    for _ in range(6):
        P, y = random_aw_point(rng, q=0), _random_y(rng)
        g = greek_from_abcd(P)
        for n in range(_cap(4, n_max) + 1):
            enum = poly_eval(z_poly(n), g.point(y))
            res = z_q0_explicit(P, y, n)
            reps.append(check(f"Z_{n}(y={y};q=0) at {P}", enum == res, f"{enum} vs {res}"))
        reps.append(check(f"reference Z_2 at {P}, y={y}",
                          z_q0_explicit(P, y, 2) == poly_eval(z2q0, g.point(y))))
        for deg in range(5):
            p = _random_poly(rng, deg)
            a, b = aw_integrate_q0(p, P), aw_integrate_poly(p, P)
            reps.append(check(f"residue integral deg {deg} at {P}", a == b, f"{a} vs {b}"))
    return CheckReport.combine("6 q=0 machinery", reps)


# -- 7 ------------------------------------------------------------------------


def _fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def criterion_7(n_max=None, seed=0):
    reps = []
    N = 5
    g = genfun_coeffs("genfun", N)
    reps.append(check("genfun Z_0..Z_5", [read_poly(t) for t in GENFUN_TEXTS] == g[:N + 1],
                      f"{[str(c) for c in g]}"))
    f = genfun_coeffs("fib2", N)
    reps.append(check("fib2 Z_1..Z_5", [read_poly(t) for t in FIB2_TEXTS] == f[1:N + 1],
                      f"{[str(c) for c in f]}"))
    M = _cap(6, n_max)
    g0 = genfun_coeffs("genfun", M, y=0)
    reps.append(check("y=0: F_{2n+1}", g0 == [_fib(2 * n + 1) for n in range(M + 1)], f"{g0}"))
    f0 = genfun_coeffs("fib2", M, y=0)
    reps.append(check("y=0: 2F_{2n}", f0[1:] == [2 * _fib(2 * n) for n in range(1, M + 1)], f"{f0}"))
    specs = {
        "narayana": dict(alpha=1, beta=1, gamma=0, delta=0, q=0),
        "genfun": dict(alpha=1, beta=1, gamma=1, delta=0, q=0),
        "fib2": dict(alpha=1, beta=1, gamma=1, delta=1, q=0),
    }
    for name, pt in specs.items():
        col = genfun_coeffs(name, M, y=1)
        sym = genfun_coeffs(name, M)
        for n in range(1, M + 1):
            Zn = z_poly(n).subs(**pt)
            reps.append(check(f"{name} n={n} vs enumeration", Zn == sym[n] and
                              col[n] == poly_eval(Zn, {"y": 1}), f"{Zn} vs {sym[n]}"))
    return CheckReport.combine("7 generating-function corollaries", reps)


# -- 8 ------------------------------------------------------------------------


def criterion_8(n_max=None, seed=0):
    reps = [check(f"NTW example {NTW_SIGMA}", z_sigma_ntw(NTW_SIGMA) == read_poly(NTW_TEXT),
                  f"{z_sigma_ntw(NTW_SIGMA)}")]
    for n in range(_cap(6, n_max) + 1):
        bad = [w for w in _words(n)
               if z_sigma_poly(w).subs(alpha=1, beta=1, gamma=0, delta=0) != z_sigma_ntw(w)]
        reps.append(check(f"NTW vs enumeration, |sigma|={n}", not bad, f"fails at {bad[:3]}"))
    for n in range(_cap(5, n_max) + 1):
        bad = [w for w in _words(n) if z_sigma_poly(w).subs(delta=0) != z_sigma_delta0(w)]
        reps.append(check(f"delta=0 recurrence vs enumeration, |sigma|={n}", not bad,
                          f"fails at {bad[:3]}"))
    reps.append(check_cwth_all(_cap(5, n_max)))
    return CheckReport.combine("8 per-type formulas", reps)


# -- 9 ------------------------------------------------------------------------


def criterion_9(n_max=None, seed=0):
    rng = random.Random(5000 + seed)
    reps = []
    for _ in range(5):
        g = random_greek_point(rng)
        u = Fraction(rng.randint(1, 9), rng.randint(10, 13))
        for n in range(_cap(4, n_max) + 1):
            rep = verify_newthm(n, g, u)
            rep.name += f" at {g.alpha, g.beta, g.gamma, g.delta, g.q}, u={u}"
            reps.append(rep)
        for n in range(_cap(3, n_max) + 1):
            reps.append(verify_fugacity_marginal(n, g, u))
    g = random_greek_point(rng)
    g0 = GreekParams(g.alpha, g.beta, g.gamma, 0, g.q)
    reps.append(verify_newthm(_cap(3, n_max), g0))
    return CheckReport.combine("9 ASEP stationary distribution", reps)


# -- 10 -----------------------------------------------------------------------


def criterion_10(n_max=None, seed=0):
    sym = tuple(MultiPoly.var(v) for v in ("alpha", "beta", "gamma", "delta"))
    reps = []
    for n in range(_cap(5, n_max) + 1):
        Z1 = z_poly(n).subs(q=1, y=1)
        reps.append(check(f"Z_{n}(1;...;1) closed form", Z1 == z_q1_closed(n, sym),
                          f"difference {Z1 - z_q1_closed(n, sym)}"))
        dfact = 1
        for k in range(1, 2 * n + 2, 2):
            dfact *= k
        reps.append(check(f"specializations n={n}",
                          z_q1_closed(n, (1, 1, 1, 1)) == 4 ** n * factorial(n)
                          and z_q1_closed(n, (1, 1, 1, 0)) == dfact
                          and z_q1_closed(n, (1, 1, 0, 0)) == factorial(n + 1)))
    return CheckReport.combine("10 q=1 closed form", reps)


# -- 11 -----------------------------------------------------------------------


def criterion_11(n_max=None, seed=0):
    rep = factorization_checks(_cap(6, n_max))
    rep.name = "11 factorizations"
    return rep


# -- 12 -----------------------------------------------------------------------


def _label_counts(n):
    """``(#(alpha,beta)-tableaux, #(alpha,beta,gamma)-tableaux)`` from the census."""
    ab = abg = 0
    for (bits, ea, eb, eg, ed, eq, eu), c in census(n).items():
        if ed == 0:
            abg += c
            if eg == 0:
                ab += c
    return ab, abg


def criterion_12(n_max=None, seed=0):
    reps = []
    for n in range(1, _cap(7, n_max) + 1):
        t, bf = count_staircase_trees(n), brute_force_tree_count(n)
        reps.append(check(f"t({n}) = (n-1)!", t == bf == factorial(n - 1),
                          f"recurrence {t}, brute force {bf}"))
    for n in range(1, _cap(6, n_max) + 1):
        nf = len(_ab_forests(n))
        reps.append(check(f"{n}! forests", nf == factorial(n), f"{nf}"))
    reps.append(check_bijections(_cap(4, n_max)))
    for n in range(_cap(6, n_max) + 1):
        ab, abg = _label_counts(n)
        dfact = 1
        for k in range(1, 2 * n + 2, 2):
            dfact *= k
        reps.append(check(f"(n+1)! and (2n+1)!! counts, n={n}", ab == factorial(n + 1) and abg == dfact,
                          f"{ab}, {abg}"))
    for n in range(_cap(5, n_max) + 1):
        rhs = z_poly(n).subs(beta=1, delta=0, y=1)
        reps.append(check(f"Dyck paths n={n}", dyck_moment(n) == rhs, f"{dyck_moment(n)} vs {rhs}"))
    for n in range(_cap(4, n_max) + 1):
        reps.append(check_fcrossing_theorem(n))
    return CheckReport.combine("12 bijections", reps)


# -- 13 -----------------------------------------------------------------------


def criterion_13(n_max=None, seed=0):
    rng = random.Random(6000 + seed)
    reps = []
    for _ in range(5):
        P = random_aw_point(rng)
        for m in range(4):
            for n in range(4):
                got = orthogonality_check(m, n, P)
                want = hn_ratio(n, P) if m == n else 0
                reps.append(check(f"<P_{m},P_{n}> at {P}", got == want, f"{got} vs {want}"))
    for _ in range(5):
        P = random_aw_point(rng)
        for deg in range(_cap(6, n_max) + 1):
            p = _random_poly(rng, deg)
            co = phi_basis_coeffs(p, P.a, P.q)
            back = []
            for k, c in enumerate(co):
                back = _padd(back, [c * x for x in phi_coeffs(k, P.a, P.q)])
            ok = PolySample(back).coeffs == p.coeffs
            integ = aw_integrate_poly(p, P)
            via_mu = sum((c * aw_moments_tridiagonal(P, k) for k, c in enumerate(p.coeffs)), Fraction(0))
            reps.append(check(f"phi-basis deg {deg} at {P}", ok and integ == via_mu,
                              f"reconstruction {ok}, integral {integ} vs {via_mu}"))
        # P_n in the monomial basis has the right leading term
        lead = aw_poly_coeffs(3, P)[-1]
        reps.append(check(f"P_3 has degree 3 at {P}", lead != 0))
    return CheckReport.combine("13 orthogonality and phi-basis", reps)


# -- 14 -----------------------------------------------------------------------


def criterion_14(n_max=None, seed=0):
    rng = random.Random(7000 + seed)
    reps = []
    for _ in range(5):
        P = random_aw_point(rng)
        for n in range(_cap(5, n_max) + 1):
            vals = {aw_moments_explicit(AWParams(*perm, P.q), n)
                    for perm in permutations((P.a, P.b, P.c, P.d))}
            reps.append(check(f"mu_{n} symmetric at {P}", len(vals) == 1, f"{len(vals)} distinct values"))
    return CheckReport.combine("14 moment symmetry", reps)


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 15)}


def run_criterion(k, n_max=None, seed=0):
    rep = timed(f"criterion {k}", CRITERIA[k], n_max=n_max, seed=seed)
    return rep


def run_all(n_max=None, seed=0):
    return [run_criterion(k, n_max, seed) for k in CRITERIA]
