"""Closed forms for the partition function ``Z_n(y; alpha, beta, gamma, delta; q)``.

Parameter flow is from Askey-Wilson parameters ``(a, b, c, d, q)`` to Greek
parameters; the inverse map is only taken when both discriminants are
rational squares.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (
    BudgetExceeded,
    IrrationalDiscriminant,
    IrrationalResidual,
    ZeroDenominator,
    ZeroVariable,
)
from .exact import (
    GaussianRational,
    QuadExt,
    as_rational,
    is_zero,
    qpochhammer,
    rational_sqrt,
    require_nonzero,
    sqrt_exact,
)
from .moments import AWParams, _q0_limit
from .polyring import MultiPoly, TruncatedSeries, series_compose, series_reverse
from .report import check, CheckReport

__all__ = [
    "GreekParams",
    "greek_from_abcd",
    "greek_from_abcd_signed",
    "abcd_from_greek",
    "z_fugacity_explicit",
    "homog_sym_8",
    "z_q0_explicit",
    "z_q1_closed",
    "genfun_coeffs",
    "factorization_checks",
    "GENFUN_SPECS",
]

SERIES_BUDGET = 24


@dataclass(frozen=True)
class GreekParams:
    alpha: object
    beta: object
    gamma: object
    delta: object
    q: object = 0
    y: object = None

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "q", "y"):
            v = getattr(self, name)
            if isinstance(v, (int, str)):
                object.__setattr__(self, name, as_rational(v))

    def point(self, y=None, u=1):
        """Assignment for :func:`~staircase.polyring.poly_eval`."""
        yy = self.y if y is None else y
        pt = {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma,
              "delta": self.delta, "q": self.q, "u": u}
        if yy is not None:
            pt["y"] = yy
        return pt


def greek_from_abcd(params):
    """``alpha = (1-q)/(1+ac+a+c)``, ``gamma = -(1-q)ac/(1+ac+a+c)``, same for b, d."""
    a, b, c, d, q = params.as_tuple()
    dac = require_nonzero(1 + a * c + a + c, "1+ac+a+c")
    dbd = require_nonzero(1 + b * d + b + d, "1+bd+b+d")
    one_q = 1 - q
    return GreekParams(one_q / dac, one_q / dbd, -one_q * a * c / dac, -one_q * b * d / dbd, q)


def greek_from_abcd_signed(params):
    """The Gaussian substitution ``alpha = (1-q)/(1-ac+ai+ci)`` etc."""
    a, b, c, d, q = params.as_tuple()
    i = GaussianRational(0, 1)
    dac = require_nonzero(1 - a * c + a * i + c * i, "1-ac+ai+ci")
    dbd = require_nonzero(1 - b * d - b * i - d * i, "1-bd-bi-di")
    one_q = 1 - q
    return GreekParams(one_q / dac, one_q / dbd, one_q * a * c / dac, one_q * b * d / dbd, q)


def _root_pair(lead, lin, const, label):
    """Roots of the substitution: ``(1-q-x+z +- sqrt(disc)) / (2x)``."""
    if is_zero(lead):
        raise ZeroDenominator(f"2*{label}")
    s = 1 - const - lead + lin
    disc = s * s + 4 * lead * lin
    r = rational_sqrt(disc)
    if r is None:
        raise IrrationalDiscriminant(f"discriminant {disc} for {label} is not a rational square")
    return (s + r) / (2 * lead), (s - r) / (2 * lead)


def abcd_from_greek(g):
    """Invert the alpha..delta to a..d substitution, taking + for a, b and - for c, d."""
    a, c = _root_pair(g.alpha, g.gamma, g.q, "alpha")
    b, d = _root_pair(g.beta, g.delta, g.q, "beta")
    return AWParams(a, b, c, d, g.q)


def z_fugacity_explicit(params, y, n):
    """``Z_n(y; ...)`` from its explicit double sum.

    The sum is the phi-basis expansion at ``(a/sqrt(y), b sqrt(y), c/sqrt(y),
    d sqrt(y))`` of ``(1 + y + 2 sqrt(y) x)^n``; every square root cancels, so
    the arithmetic stays rational.
    """
    if n == 0:
        return Fraction(1)
    a, b, c, d, q = params.as_tuple()
    require_nonzero(a, "a")
    require_nonzero(y, "y")
    g = greek_from_abcd(params)
    one_q = require_nonzero(1 - q, "1-q")
    ab, ac, ad, abcd, a2 = a * b, a * c / y, a * d, a * b * c * d, a * a / y

    def run(qv):
        total = 0
        ab_k = ac_k = ad_k = abcd_k = Fraction(1)
        qk = 1
        for k in range(n + 1):
            if k:
                ab_k = ab_k * (1 - ab * qk)
                ac_k = ac_k * (1 - ac * qk)
                ad_k = ad_k * (1 - ad * qk)
                abcd_k = abcd_k * (1 - abcd * qk)
                qk = qk * qv
            require_nonzero(abcd_k, f"(abcd;q)_{k}")
            pre = ab_k * ac_k * ad_k * qk / abcd_k
            if is_zero(pre):
                continue
            inner = 0
            for j in range(k + 1):
                qj = qv ** j
                val = (1 + y + qj * a + y / (qj * a)) ** n
                if is_zero(val):
                    continue
                den = (qpochhammer(qv, qv, j) * qpochhammer(qv / (qj * qj * a2), qv, j)
                       * qpochhammer(qv, qv, k - j) * qpochhammer(a2 * qv * qj * qj, qv, k - j))
                require_nonzero(den, f"(q, q^{1 - 2 * j}y/a^2; q)_{j} (q, a^2q^{1 + 2 * j}/y; q)_{k - j}")
                inner = inner + val / (qj ** j * a2 ** j * den)
            total = total + pre * inner
        return total

    s = _q0_limit(run, q)
    return qpochhammer(abcd, q, n) * (g.alpha * g.beta / one_q) ** n * s


def _h_list(m_max, xs):
    """Complete homogeneous symmetric functions ``h_0 .. h_{m_max}`` of ``xs``."""
    h = [1] + [0] * m_max
    for x in xs:
        for m in range(1, m_max + 1):
            h[m] = h[m] + x * h[m - 1]
    return h


def homog_sym_8(m, A, B, C, D):
    """``h_m(A, B, C, D, 1/A, 1/B, 1/C, 1/D)``; zero for ``m < 0``."""
    for name, v in zip("ABCD", (A, B, C, D)):
        if is_zero(v):
            raise ZeroVariable(f"{name} = 0")
    if m < 0:
        return 0
    xs = [A, B, C, D, 1 / A, 1 / B, 1 / C, 1 / D]
    return _h_list(m, xs)[m]


def _rationalize(z, what):
    if isinstance(z, QuadExt):
        if not z.is_rational():
            raise IrrationalResidual(f"{what} kept sqrt(y) component {z.q}")
        return z.to_rational()
    return z


def z_q0_explicit(params, y, n):
    """``Z_n(y; ...; 0)`` from residues at ``A, B, C, D`` and at ``z = 0``.

    ``A = a/sqrt(y), B = b sqrt(y), C = c/sqrt(y), D = d sqrt(y)``; arithmetic
    in ``Q(sqrt(y))``.  The residue bracket is multiplied by
    ``(abcd;0)_n/(1-abcd)``, which is 1 for ``n >= 1`` and restores ``Z_0 = 1``.
    """
    a, b, c, d, q = params.as_tuple()
    if not is_zero(q):
        raise ValueError("z_q0_explicit needs q = 0")
    g = greek_from_abcd(params)
    s = sqrt_exact(y)
    require_nonzero(s, "sqrt(y)")
    X = [a / s, b * s, c / s, d * s]
    names = "ABCD"
    for nm, v in zip(names, X):
        require_nonzero(v, nm)
    pref = -(g.alpha * g.beta) ** n / 2
    for i in range(4):
        for j in range(i + 1, 4):
            pref = pref * (1 - X[i] * X[j])
    total = 0
    for i, x in enumerate(X):
        den = require_nonzero(1 - x * x, f"1-{names[i]}^2")
        for j, w in enumerate(X):
            if j != i:
                den = den * require_nonzero(1 - x * w, f"1-{names[i]}{names[j]}")
                den = den * require_nonzero(1 - w / x, f"1-{names[j]}/{names[i]}")
        total = total + (1 + (1 / x + x) * s + y) ** n * (x - 1 / x) ** 2 / den
    H = _h_list(max(n - 2, 0), X + [1 / v for v in X])

    def h(m):
        return H[m] if 0 <= m < len(H) else 0

    res = 0
    for j in range(n + 1):
        for k in range(n + 1):
            m = n - 2 - k - j
            if m < 0:
                continue
            res = res + comb(n, k) * comb(n, j) * s ** (n + k - j) * (h(m) - 2 * h(m - 2) + h(m - 4))
    res = res / (X[0] * X[1] * X[2] * X[3])
    abcd = a * b * c * d
    corr = qpochhammer(abcd, 0, n) / require_nonzero(1 - abcd, "1-abcd")
    return _rationalize(corr * pref * (total + res), f"Z_{n}(y;...;0)")


def z_q1_closed(n, g):
    """``prod_{j<n} (alpha+beta+gamma+delta + j(alpha+gamma)(beta+delta))``.

    ``g`` is a GreekParams or a 4-tuple; entries may be MultiPoly symbols.
    """
    if isinstance(g, GreekParams):
        al, be, ga, de = g.alpha, g.beta, g.gamma, g.delta
    else:
        al, be, ga, de = g
    s = al + be + ga + de
    p = (al + ga) * (be + de)
    out = 1
    for j in range(n):
        out = out * (s + j * p)
    return out


def _genfun_F(spec, t, yv):
    one = TruncatedSeries([1], t.order)
    base = (one + t) * (one + yv * t)
    if spec == "narayana":
        return base
    fib_t = one - t - t * t
    if spec in ("genfun", "odd_fib"):
        return base / fib_t
    if spec == "fib2":
        fib_yt = one - yv * t - yv * yv * t * t
        return (2 * (1 + yv)) * t * base / (fib_t * fib_yt)
    raise ValueError(f"unknown generating-function spec {spec!r}")


GENFUN_SPECS = {
    "narayana": "(1+t)(1+yt)",
    "genfun": "(1+t)(1+yt)/(1-t-t^2)",
    "odd_fib": "(1+t)(1+yt)/(1-t-t^2)",
    "fib2": "2(1+y)t(1+t)(1+yt)/((1-t-t^2)(1-yt-y^2t^2))",
}


def genfun_coeffs(spec, N, y=None):
    """``[Z_0(y), ..., Z_N(y)]`` as coefficients of ``w^n`` in ``F(t(w))``.

    ``w = t/((1+t)(1+yt))``; ``y`` defaults to the polynomial variable.
    """
    if N > SERIES_BUDGET:
        raise BudgetExceeded(f"series order {N} exceeds {SERIES_BUDGET}")
    yv = MultiPoly.var("y") if y is None else y
    t = TruncatedSeries.t(N)
    one = TruncatedSeries([1], N)
    w = t * ((one + t) * (one + yv * t)).inverse()
    tw = series_reverse(w)
    F = _genfun_F(spec, t, yv)
    out = series_compose(F, tw).coeffs
    return [c if isinstance(c, MultiPoly) or y is not None else MultiPoly.const(c) for c in out]


def _prod(factors):
    out = MultiPoly.const(1)
    for f in factors:
        out = out * f
    return out


def factorization_checks(n_max, budget=None):
    """Factorizations at delta=beta, y=1 and q=0, plus the closed-form special values, symbolically."""
    from .tableaux import z_poly

    al, be, ga, de = (MultiPoly.var(v) for v in ("alpha", "beta", "gamma", "delta"))
    qq, yy = MultiPoly.var("q"), MultiPoly.var("y")
    reports = []

    def add(name, n, lhs, rhs):
        reports.append(check(f"{name} n={n}", lhs == rhs, f"lhs={lhs} rhs={rhs}"))

    for n in range(n_max + 1):
        Z = z_poly(n, budget=budget)
        add("d-b: Z(1;a,b,g,-b;q)=prod(a+q^j g)", n, Z.subs(y=1, delta=-be),
            _prod(al + qq ** j * ga for j in range(n)))
        add("y-1: Z(-1;a,b,g,b;q)=(-1)^n prod(a-q^j g)", n, Z.subs(y=-1, delta=be),
            (-1) ** n * _prod(al - qq ** j * ga for j in range(n)))
        if n >= 3:
            add("prop-0: Z(y;a,a,a,a;-1)=0", n, Z.subs(beta=al, gamma=al, delta=al, q=-1),
                MultiPoly())
        add("table1: Z(y;a,0,g,0;q)=prod(y a+q^j g)", n, Z.subs(beta=0, delta=0),
            _prod(yy * al + qq ** j * ga for j in range(n)))
        add("table1: Z(1;a,0,g,0;q)=prod(a+q^j g)", n, Z.subs(y=1, beta=0, delta=0),
            _prod(al + qq ** j * ga for j in range(n)))
        add("table1: Z(y;0,b,g,0;q)=prod(b+b g[j]_q+g q^j)", n, Z.subs(alpha=0, delta=0),
            _prod(be + be * ga * sum((qq ** i for i in range(j)), MultiPoly()) + ga * qq ** j
                  for j in range(n)))
        add("table1: Z(y;1,1,0,0;-1)=(y+1)^n", n,
            Z.subs(alpha=1, beta=1, gamma=0, delta=0, q=-1), (yy + 1) ** n)
        add("table1: Z(y;1,1,1,1;1)=2^n(y+1)^n n!", n,
            Z.subs(alpha=1, beta=1, gamma=1, delta=1, q=1), 2 ** n * factorial(n) * (yy + 1) ** n)
        catalan = comb(2 * n + 2, n + 1) // (n + 2)
        add("table1: Z(1;1,1,0,0;0)=C_{n+1}", n,
            Z.subs(alpha=1, beta=1, gamma=0, delta=0, q=0, y=1), MultiPoly.const(catalan))
    return CheckReport.combine("factorizations", reports)
