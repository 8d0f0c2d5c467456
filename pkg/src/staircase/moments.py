"""Askey-Wilson polynomials and moments.

Four independent routes to ``mu_n(a,b,c,d|q)``:

* ``aw_moments_explicit``: the double sum obtained from the phi-basis
  expansion (integral of ``x^n``),
* ``aw_moments_tridiagonal``: Motzkin paths on the symmetrized three-term
  recurrence,
* ``aw_moments_combinatorial``: the alternating sum of staircase-tableau
  partition functions,
* ``aw_moments_signed``: the ``y = -1`` formula with Gaussian-rational
  Greek parameters.

Formulas that carry negative powers of ``q`` are evaluated at ``q = 0`` as
exact limits: ``q`` is replaced by a truncated Laurent series and the
constant term is read off after checking that the polar part cancels.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DegenerateParameters, NonrealResult
from .exact import (
    GaussianRational,
    LaurentSeries,
    as_rational,
    is_zero,
    qpochhammer,
    require_nonzero,
)

__all__ = [
    "AWParams",
    "TridiagonalSpec",
    "PolySample",
    "aw_poly_eval",
    "aw_poly_coeffs",
    "recurrence_coeffs",
    "tridiag_moments",
    "aw_moments_explicit",
    "aw_moments_tridiagonal",
    "aw_moments_combinatorial",
    "aw_moments_signed",
    "phi_eval",
    "phi_coeffs",
    "phi_basis_coeffs",
    "aw_integrate_poly",
    "hn_ratio",
    "orthogonality_check",
    "aw_integrate_q0",
]


def _scalar(x):
    if isinstance(x, (GaussianRational, LaurentSeries, Fraction)):
        return x
    return as_rational(x)


@dataclass(frozen=True)
class AWParams:
    a: object
    b: object
    c: object
    d: object
    q: object

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "q"):
            v = getattr(self, name)
            if isinstance(v, (int, str)):
                object.__setattr__(self, name, as_rational(v))

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d, self.q)

    def replace(self, **kw):
        vals = dict(zip("abcdq", self.as_tuple()))
        vals.update(kw)
        return AWParams(**vals)

    def __str__(self):
        return "(a,b,c,d,q)=(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


class TridiagonalSpec:
    """Monic recurrence ``P_{k+1} = (x - b_k) P_k - lam_k P_{k-1}``.

    ``b`` and ``lam`` are callables ``k -> scalar`` or sequences; values are
    requested lazily, so only the levels a path can actually reach are
    ever evaluated.
    """

    def __init__(self, b, lam):
        self._b = b
        self._lam = lam
        self._cache_b = {}
        self._cache_lam = {}

    @staticmethod
    def _get(src, cache, k):
        if k not in cache:
            cache[k] = src(k) if callable(src) else src[k]
        return cache[k]

    def b(self, k):
        return self._get(self._b, self._cache_b, k)

    def lam(self, k):
        return self._get(self._lam, self._cache_lam, k)


class PolySample:
    """Univariate polynomial ``sum coeffs[k] x^k`` over exact scalars."""

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = coeffs

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return PolySample(_padd(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, PolySample):
            return PolySample(_pmul(self.coeffs, other.coeffs))
        return PolySample([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolySample):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"PolySample({self.coeffs!r})"


def _padd(p, r):
    n = max(len(p), len(r))
    return [(p[k] if k < len(p) else 0) + (r[k] if k < len(r) else 0) for k in range(n)]


def _pmul(p, r):
    if not p or not r:
        return []
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if is_zero(a):
            continue
        for j, b in enumerate(r):
            out[i + j] = out[i + j] + a * b
    return out


def _den(x, name):
    """Guard a denominator factor, naming it in the error."""
    return require_nonzero(x, name)


def _q0_limit(fn, q):
    """Evaluate ``fn(q)``; at ``q == 0`` take the exact limit via Laurent series."""
    if not (isinstance(q, (int, Fraction)) and q == 0):
        return fn(q)
    saved = LaurentSeries.default_rel_prec
    try:
        prec = saved
        for _ in range(4):
            LaurentSeries.default_rel_prec = prec
            res = fn(LaurentSeries.gen())
            if not isinstance(res, LaurentSeries):
                return res
            if res.prec is None or res.prec > 0:
                for e in range(res.val, 0):
                    if res.coefficient(e) != 0:
                        raise DegenerateParameters("q", f"pole of order {-e} at q=0")
                return res.coefficient(0)
            prec *= 2
        raise DegenerateParameters("q", "q=0 limit did not stabilize")
    finally:
        LaurentSeries.default_rel_prec = saved


# -- Askey-Wilson polynomials -------------------------------------------------


def phi_coeffs(n, a, q):
    """Coefficients in ``x`` of ``phi_n(x;a) = prod_{k<n} (1 - 2axq^k + a^2 q^{2k})``."""
    out = [1]
    qk = 1
    for _ in range(n):
        out = _pmul(out, [1 + a * a * qk * qk, -2 * a * qk])
        qk = qk * q
    return out


def phi_eval(n, x, a, q):
    val = 1
    qk = 1
    for _ in range(n):
        val = val * (1 - 2 * a * x * qk + a * a * qk * qk)
        qk = qk * q
    return val


def _aw_poly_terms(n, params, qv):
    """Yield ``(k, coefficient)`` with ``P_n = sum_k coefficient * phi_k(x;a)``."""
    a, b, c, d = params.a, params.b, params.c, params.d
    _den(a, "a")
    abcd = a * b * c * d
    for k in range(n + 1):
        # (ab,ac,ad;q)_n / (ab,ac,ad;q)_k = (abq^k, acq^k, adq^k; q)_{n-k}
        qk = qv ** k
        tail = (qpochhammer(a * b * qk, qv, n - k) * qpochhammer(a * c * qk, qv, n - k)
                * qpochhammer(a * d * qk, qv, n - k))
        num = qpochhammer(1 / qv ** n, qv, k) * qpochhammer(qv ** (n - 1) * abcd, qv, k)
        den = _den(qpochhammer(qv, qv, k), f"(q;q)_{k}")
        yield k, tail * num * qk / den / a ** n


def aw_poly_coeffs(n, params):
    """Monomial coefficients (in ``x``) of ``P_n(x; a,b,c,d | q)``."""

    def run(qv):
        out = []
        for k, coef in _aw_poly_terms(n, params, qv):
            out = _padd(out, [coef * c for c in phi_coeffs(k, params.a, qv)])
        return out

    if n == 0:
        return [Fraction(1)]
    q = params.q
    if isinstance(q, (int, Fraction)) and q == 0:
        return [_q0_limit(lambda qv, m=m: run(qv)[m], q) for m in range(n + 1)]
    return run(q)


def aw_poly_eval(n, x, params):
    """``P_n(x; a,b,c,d | q)`` from the defining basic hypergeometric sum."""
    if n == 0:
        return Fraction(1)

    def run(qv):
        return sum((coef * phi_eval(k, x, params.a, qv) for k, coef in _aw_poly_terms(n, params, qv)), 0)

    return _q0_limit(run, params.q)


def recurrence_coeffs(n, params):
    """``(A_n, B_n, C_n)`` of ``A_n P_{n+1} + B_n P_n + C_n P_{n-1} = 2x P_n``.

    ``B_n`` uses ``abcd * s' = abc + abd + acd + bcd`` so that vanishing
    parameters need no division.  At ``n = 0`` the closed forms contain the
    removable factor ``(1 - q^{-1} abcd)``; the cancelled values
    ``A_0 = 1/(1-abcd)``, ``B_0 = (s - abcd s')/(1-abcd)``, ``C_0 = 0`` are used.
    """
    a, b, c, d, q = params.as_tuple()
    e1 = a + b + c + d
    e3 = a * b * c + a * b * d + a * c * d + b * c * d
    e4 = a * b * c * d
    if n == 0:
        den = _den(1 - e4, "1-abcd")
        return 1 / den, (e1 - e3) / den, 0
    qn1 = q ** (n - 1)
    d_2n2 = _den(1 - q ** (2 * n - 2) * e4, f"1-q^{2 * n - 2}abcd")
    d_2n1 = _den(1 - q ** (2 * n - 1) * e4, f"1-q^{2 * n - 1}abcd")
    d_2n = _den(1 - q ** (2 * n) * e4, f"1-q^{2 * n}abcd")
    A = (1 - qn1 * e4) / (d_2n1 * d_2n)
    B = qn1 / (d_2n2 * d_2n) * (
        (1 + q ** (2 * n - 1) * e4) * (q * e1 + e3) - qn1 * (1 + q) * (e4 * e1 + q * e3))
    C = (1 - q ** n)
    for p in (a * b, a * c, a * d, b * c, b * d, c * d):
        C = C * (1 - qn1 * p)
    C = C / (d_2n2 * d_2n1)
    return A, B, C


def tridiag_moments(spec, n):
    """``[mu_0, ..., mu_n]`` for the monic recurrence ``spec``.

    Dynamic programming over Motzkin paths: ``row[j]`` is the weight of
    paths from level 0 that are at level ``j`` after ``t`` steps.  A path
    contributing to ``mu_m`` (``m <= n``) is at level ``<= min(t, m - t)``,
    so levels above ``n // 2`` never contribute; truncating there is exact.
    """
    if isinstance(spec, tuple):
        spec = TridiagonalSpec(*spec)
    top = n // 2
    row = [Fraction(1)]
    mus = [Fraction(1)]
    for t in range(1, n + 1):
        reach = min(t, n - t, top)
        new = []
        for j in range(reach + 1):
            v = 0
            if j - 1 >= 0 and j - 1 < len(row):
                v = v + row[j - 1]
            if j < len(row) and not is_zero(row[j]):
                v = v + row[j] * spec.b(j)
            if j + 1 < len(row) and not is_zero(row[j + 1]):
                v = v + row[j + 1] * spec.lam(j + 1)
            new.append(v)
        row = new
        mus.append(row[0])
    return mus


# -- phi-basis expansion and the integral --------------------------------------


def _check_a(params):
    if is_zero(params.a):
        raise DegenerateParameters("a", "the expansion point a must be nonzero")


def _swap_nonzero_a(params):
    """The weight is symmetric in a,b,c,d; move a nonzero parameter into slot a."""
    if not is_zero(params.a):
        return params
    for name in ("b", "c", "d"):
        v = getattr(params, name)
        if not is_zero(v):
            return params.replace(a=v, **{name: params.a})
    raise DegenerateParameters("a", "a=b=c=d=0 has no nonzero expansion point")


def _expansion_sum(a, b, c, d, qv, pvals, deg):
    """``sum_k (ab,ac,ad;q)_k/(abcd;q)_k q^k sum_j q^{-j^2} a^{-2j} p(x_j) / (...)``.

    ``pvals[j]`` is ``p((q^j a + q^{-j}/a)/2)``.
    """
    abcd = a * b * c * d
    total = 0
    ab_k = ac_k = ad_k = abcd_k = Fraction(1)
    qk = 1
    for k in range(deg + 1):
        if k:
            qprev = qk
            ab_k = ab_k * (1 - a * b * qprev)
            ac_k = ac_k * (1 - a * c * qprev)
            ad_k = ad_k * (1 - a * d * qprev)
            abcd_k = abcd_k * (1 - abcd * qprev)
            qk = qk * qv
        _den(abcd_k, f"(abcd;q)_{k}")
        pre = ab_k * ac_k * ad_k * qk / abcd_k
        if is_zero(pre):
            continue
        inner = 0
        for j in range(k + 1):
            if is_zero(pvals[j]):
                continue
            qj = qv ** j
            den = (qpochhammer(qv, qv, j) * qpochhammer(qv / (qj * qj * a * a), qv, j)
                   * qpochhammer(qv, qv, k - j) * qpochhammer(a * a * qv * qj * qj, qv, k - j))
            _den(den, f"(q, q^{1 - 2 * j}/a^2; q)_{j} (q, a^2 q^{1 + 2 * j}; q)_{k - j}")
            inner = inner + pvals[j] / (qj ** j * a ** (2 * j) * den)
        total = total + pre * inner
    return total


def aw_integrate_poly(p, params):
    """``oint p(x) w(x) dz / (4 pi i z)`` via the phi-basis double sum."""
    if not isinstance(p, PolySample):
        p = PolySample(p)
    if p.degree < 0:
        return Fraction(0)
    params = _swap_nonzero_a(params)
    a, b, c, d = params.a, params.b, params.c, params.d

    def run(qv):
        pvals = []
        for j in range(p.degree + 1):
            qj = qv ** j
            pvals.append(p((qj * a + 1 / (qj * a)) / 2))
        return _expansion_sum(a, b, c, d, qv, pvals, p.degree)

    return _q0_limit(run, params.q)


def aw_moments_explicit(params, n):
    """The double-sum formula for ``mu_n``: ``2^{-n} sum_k ... (q^j a + q^{-j}/a)^n``."""
    if n == 0:
        return Fraction(1)
    params = _swap_nonzero_a(params)
    a, b, c, d = params.a, params.b, params.c, params.d

    def run(qv):
        pvals = []
        for j in range(n + 1):
            qj = qv ** j
            pvals.append((qj * a + 1 / (qj * a)) ** n)
        return _expansion_sum(a, b, c, d, qv, pvals, n) / 2 ** n

    return _q0_limit(run, params.q)


def phi_basis_coeffs(p, a, q):
    """``[p_0, ..., p_n]`` with ``p = sum_k p_k phi_k(x; a)``.

    ``p_k = q^k sum_j q^{-(k-j)^2} a^{2j-2k} pc(a q^{k-j})
    / ((q, q^{1+2k-2j} a^2; q)_j (q, q^{1-2k+2j} a^{-2}; q)_{k-j})`` with
    ``pc(z) = p((z + 1/z)/2)``.
    """
    if not isinstance(p, PolySample):
        p = PolySample(p)
    if p.degree < 0:
        return []
    if is_zero(a):
        raise DegenerateParameters("a", "the expansion point a must be nonzero")

    def coeff(k, qv):
        total = 0
        for j in range(k + 1):
            m = k - j
            qm = qv ** m
            z = a * qm
            val = p((z + 1 / z) / 2)
            if is_zero(val):
                continue
            den = (qpochhammer(qv, qv, j) * qpochhammer(qv * qm * qm * a * a, qv, j)
                   * qpochhammer(qv, qv, m) * qpochhammer(qv / (qm * qm * a * a), qv, m))
            _den(den, f"(q, q^{1 + 2 * m} a^2; q)_{j} (q, q^{1 - 2 * m} a^-2; q)_{m}")
            total = total + val * a ** (-2 * m) / (qm ** m * den)
        return qv ** k * total

    return [_q0_limit(lambda qv, k=k: coeff(k, qv), q) for k in range(p.degree + 1)]


def hn_ratio(n, params):
    """``h_n/h_0 = (1-q^{n-1}abcd)(q,ab,ac,ad,bc,bd,cd;q)_n / ((1-q^{2n-1}abcd)(abcd;q)_n)``."""
    if n == 0:
        return Fraction(1)
    a, b, c, d, q = params.as_tuple()
    e4 = a * b * c * d
    num = (1 - q ** (n - 1) * e4) * qpochhammer(q, q, n)
    for x in (a * b, a * c, a * d, b * c, b * d, c * d):
        num = num * qpochhammer(x, q, n)
    den = _den(1 - q ** (2 * n - 1) * e4, f"1-q^{2 * n - 1}abcd") * _den(
        qpochhammer(e4, q, n), f"(abcd;q)_{n}")
    return num / den


def _moment_functional(params, deg):
    """``[mu_0, ..., mu_deg]``; the integral of ``x^m`` is ``mu_m``."""
    return [aw_moments_explicit(params, m) for m in range(deg + 1)]


def orthogonality_check(m, n, params):
    """``oint P_m P_n w``, integrated term by term against the moments."""
    prod = _pmul(aw_poly_coeffs(m, params), aw_poly_coeffs(n, params))
    mus = _moment_functional(params, len(prod) - 1)
    return sum((c * mu for c, mu in zip(prod, mus)), Fraction(0))


# -- moments through the recurrence and through tableaux ----------------------


def aw_moments_tridiagonal(params, n):
    """``mu_n`` from Motzkin paths with ``b_k = B_k/2``, ``lam_k = A_{k-1} C_k / 4``."""
    coeffs = {}

    def rc(k):
        if k not in coeffs:
            coeffs[k] = recurrence_coeffs(k, params)
        return coeffs[k]

    spec = TridiagonalSpec(lambda k: rc(k)[1] / 2, lambda k: rc(k - 1)[0] * rc(k)[2] / 4)
    return tridiag_moments(spec, n)[n]


def _greek_product(g, n):
    prod = 1
    qj = 1
    for j in range(n):
        f = g.alpha * g.beta - g.gamma * g.delta * qj
        _den(f, f"alpha*beta - gamma*delta*q^{j}")
        prod = prod * f
        qj = qj * g.q
    return prod


def _z_value(ell, g, y):
    from .polyring import poly_eval
    from .tableaux import get_budget, z_poly

    if ell <= get_budget():
        point = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma, "delta": g.delta,
                 "q": g.q, "u": 1, "y": y}
        return poly_eval(z_poly(ell), point)
    raise DegenerateParameters("budget", f"Z_{ell} needs enumeration beyond the budget")


def aw_moments_combinatorial(params, n):
    """Alternating sum of ``Z_l(alpha,beta,gamma,delta;q)`` at the Greek point."""
    from .partition import greek_from_abcd

    if n == 0:
        return Fraction(1)
    g = greek_from_abcd(params)
    q = params.q
    total = 0
    half = (1 - q) / 2
    for ell in range(n + 1):
        term = comb(n, ell) * half ** ell * _z_value(ell, g, 1) / _greek_product(g, ell)
        total = total + (term if (n - ell) % 2 == 0 else -term)
    return total


def aw_moments_signed(params, n):
    """``(1-q)^n / (2^n i^n prod(alpha beta - gamma delta q^j)) Z_n(-1; ...)``.

    The Greek parameters are the complex substitution with ``i``; the result
    must be real.
    """
    from .partition import greek_from_abcd_signed

    if n == 0:
        return Fraction(1)
    g = greek_from_abcd_signed(params)
    q = params.q
    z = _z_value(n, g, -1)
    val = (1 - q) ** n * z / (GaussianRational(2 ** n) * GaussianRational(0, 1) ** n
                              * _greek_product(g, n))
    if not isinstance(val, GaussianRational):
        return val
    if val.im != 0:
        raise NonrealResult(f"mu_{n} has imaginary part {val.im}")
    return val.re


# -- q = 0 residue calculus ---------------------------------------------------


def _laurent_inv_f(params, order):
    """Coefficients of ``1/f(z)`` around ``z = 0`` from ``z^{v}`` up to ``z^{order}``.

    ``f = prod_{x in a,b,c,d} (1 - xz)(1 - x/z)``.  Each factor with ``x != 0``
    is ``(1 - xz)(-x/z)(1 - z/x)``; zero parameters contribute 1.
    Returns ``(v, coeffs)`` with ``1/f = sum coeffs[k] z^{v + k}``.
    """
    nonzero = [x for x in (params.a, params.b, params.c, params.d) if not is_zero(x)]
    v = len(nonzero)
    pref = Fraction(1)
    for x in nonzero:
        pref = pref * (-x)
    # 1/f = z^v / pref * prod 1/((1 - xz)(1 - z/x))
    n = order - v + 1
    if n <= 0:
        return v, []
    series = [Fraction(0)] * n
    series[0] = 1 / pref
    for x in nonzero:
        for r in (x, 1 / x):
            # multiply by 1/(1 - r z) = sum r^m z^m
            for k in range(1, n):
                series[k] = series[k] + r * series[k - 1]
    return v, series


def aw_integrate_q0(p, params):
    """The ``q = 0`` integral by residues at ``z = a, b, c, d`` and ``z = 0``."""
    if not isinstance(p, PolySample):
        p = PolySample(p)
    a, b, c, d = params.a, params.b, params.c, params.d
    if not (isinstance(params.q, (int, Fraction)) and params.q == 0):
        raise ValueError("aw_integrate_q0 needs q = 0")
    if p.degree < 0:
        return Fraction(0)
    pars = [a, b, c, d]
    names = "abcd"
    for i in range(4):
        _den(1 - pars[i] * pars[i], f"1-{names[i]}^2")
        for j in range(i + 1, 4):
            _den(1 - pars[i] * pars[j], f"1-{names[i]}{names[j]}")
    e4 = _den(1 - a * b * c * d, "1-abcd")
    pref = Fraction(-1, 2) / e4
    for i in range(4):
        for j in range(i + 1, 4):
            pref = pref * (1 - pars[i] * pars[j])

    total = Fraction(0)
    for i, x in enumerate(pars):
        if is_zero(x):
            continue  # the residue at z = 0 absorbs this parameter
        den = 1 - x * x
        for j, w in enumerate(pars):
            if j == i:
                continue
            den = den * (1 - x * w) * _den(1 - w / x, f"1-{names[j]}/{names[i]}")
        total = total + p((x + 1 / x) / 2) * (x - 1 / x) ** 2 / den

    # residue at 0 of p((z+1/z)/2) (z - 1/z)^2 / (z f(z))
    deg = p.degree
    # g(z) = z^deg p((z+1/z)/2) = sum_m c_m z^{deg-m} ((1+z^2)/2)^m
    gpoly = []
    half = [Fraction(1, 2), 0, Fraction(1, 2)]
    power = [Fraction(1)]
    for m, coef in enumerate(p.coeffs):
        if not is_zero(coef):
            gpoly = _padd(gpoly, [0] * (deg - m) + [coef * t for t in power])
        power = _pmul(power, half)
    # numerator: z^{-deg} g(z) * (z^2 - 1)^2 z^{-2} * z^{-1} * (1/f)
    sq = _pmul([Fraction(-1), 0, Fraction(1)], [Fraction(-1), 0, Fraction(1)])
    num = _pmul(gpoly, sq)  # times z^{-deg-3}
    shift = deg + 3
    # residue = coefficient of z^{-1}: need coefficient of z^{shift - 1} in num * (1/f)
    v, inv = _laurent_inv_f(params, shift - 1)
    res = Fraction(0)
    for k, cn in enumerate(num):
        e = shift - 1 - k - v
        if 0 <= e < len(inv):
            res = res + cn * inv[e]
    return pref * (total + res)

