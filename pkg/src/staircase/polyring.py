"""Sparse polynomials in (alpha, beta, gamma, delta, q, u, y) over Q, and
truncated power series in an auxiliary variable ``t``.
"""

from fractions import Fraction
import numbers

from .errors import NonInvertible, NonzeroConstantTerm

__all__ = [
    "VARS",
    "MultiPoly",
    "TruncatedSeries",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_eval",
    "series_reverse",
    "series_compose",
    "alpha",
    "beta",
    "gamma",
    "delta",
    "q",
    "u",
    "y",
]

VARS = ("alpha", "beta", "gamma", "delta", "q", "u", "y")
NVARS = len(VARS)
_INDEX = {name: k for k, name in enumerate(VARS)}
_ALIASES = {"a": "alpha", "b": "beta", "g": "gamma", "d": "delta"}
_ZERO_EXP = (0,) * NVARS


def _var_index(name):
    name = _ALIASES.get(name, name)
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class MultiPoly:
    """Polynomial stored as ``{exponent 7-tuple: nonzero rational}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    clean[tuple(e)] = _normalize(c)
        self.terms = clean

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c):
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name, power=1):
        e = [0] * NVARS
        e[_var_index(name)] = power
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, coeff=1, **powers):
        e = [0] * NVARS
        for name, p in powers.items():
            e[_var_index(name)] = p
        return cls({tuple(e): coeff})

    @classmethod
    def _lift(cls, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (numbers.Integral, Fraction)):
            return cls.const(other)
        return None

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (numbers.Integral, Fraction)):
            if other == 0:
                return MultiPoly()
            return _raw({e: _normalize(c * other) for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return _raw({e: _normalize(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (numbers.Integral, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            return self * (Fraction(1) / other)
        o = other if isinstance(other, MultiPoly) else None
        if o is not None and o.is_constant() and not o.is_zero():
            return self * (Fraction(1) / o.constant_term())
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral) or n < 0:
            raise ValueError("MultiPoly powers need a nonnegative integer exponent")
        result, base = MultiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # queries ------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {_ZERO_EXP}

    def constant_term(self):
        return self.terms.get(_ZERO_EXP, 0)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        k = _var_index(name)
        if not self.terms:
            return -1
        return max(e[k] for e in self.terms)

    def coefficient(self, name, power):
        """Coefficient of ``name**power`` as a polynomial in the other variables."""
        k = _var_index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k] == power:
                e2 = list(e)
                e2[k] = 0
                out[tuple(e2)] = c
        return _raw(out)

    def coefficient_of(self, **powers):
        e = [0] * NVARS
        for name, p in powers.items():
            e[_var_index(name)] = p
        return self.terms.get(tuple(e), 0)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(VARS[k] for k in range(NVARS) if e[k])
        return used

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def div_monomial(self, **powers):
        """Exact division by a monomial; ``None`` if some term is not divisible."""
        d = [0] * NVARS
        for name, p in powers.items():
            d[_var_index(name)] = p
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(a - b for a, b in zip(e, d))
            if min(e2) < 0:
                return None
            out[e2] = c
        return _raw(out)

    # evaluation ---------------------------------------------------------
    def eval(self, point=None, **kw):
        return poly_eval(self, {**(point or {}), **kw})

    def subs(self, point=None, **kw):
        """Partial substitution; unassigned variables stay symbolic."""
        pt = {**(point or {}), **kw}
        full = {}
        for name in VARS:
            full[name] = pt.get(name, pt.get(_inverse_alias(name), MultiPoly.var(name)))
        result = poly_eval(self, full)
        if not isinstance(result, MultiPoly):
            result = MultiPoly.const(result)
        return result

    # text -----------------------------------------------------------------
    def sorted_terms(self):
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def to_str(self, names=VARS):
        if not self.terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                names[k] if e[k] == 1 else f"{names[k]}^{e[k]}"
                for k in range(NVARS) if e[k]
            )
            neg = c < 0
            mag = -c if neg else c
            if mono:
                body = mono if mag == 1 else f"{_fmt(mag)}*{mono}"
            else:
                body = _fmt(mag)
            if i == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r})"


def _fmt(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _inverse_alias(name):
    for short, long in _ALIASES.items():
        if long == name:
            return short
    return name


def _raw(terms):
    p = MultiPoly.__new__(MultiPoly)
    p.terms = terms
    return p


alpha = MultiPoly.var("alpha")
beta = MultiPoly.var("beta")
gamma = MultiPoly.var("gamma")
delta = MultiPoly.var("delta")
q = MultiPoly.var("q")
u = MultiPoly.var("u")
y = MultiPoly.var("y")


def poly_add(p, r):
    return MultiPoly._lift(p) + r


def poly_mul(p, r):
    return MultiPoly._lift(p) * r


def poly_pow(p, n):
    return MultiPoly._lift(p) ** n


def _is_monomial_value(v):
    return isinstance(v, MultiPoly) and len(v.terms) == 1


def poly_eval(p, point):
    """Evaluate ``p`` at ``point`` (a mapping from variable names to values).

    Values may be any exact scalars or MultiPoly; all seven variables that
    occur in ``p`` must be assigned.  When every assigned value is a scalar or
    a single-term polynomial the substitution is done by exponent arithmetic.
    """
    vals = {}
    for name, v in point.items():
        vals[_var_index(name)] = v
    used = set()
    for e in p.terms:
        used.update(k for k in range(NVARS) if e[k])
    missing = [VARS[k] for k in used if k not in vals]
    if missing:
        raise KeyError(f"no value for variable(s) {missing}")

    if all(_is_monomial_value(vals[k]) or isinstance(vals[k], (numbers.Integral, Fraction))
           for k in used):
        return _eval_monomial_subs(p, vals, used)

    powers = {k: [1] for k in used}

    def power(k, m):
        lst = powers[k]
        while len(lst) <= m:
            lst.append(lst[-1] * vals[k])
        return lst[m]

    total = 0
    for e, c in p.terms.items():
        term = c
        for k in used:
            if e[k]:
                term = term * power(k, e[k])
        total = total + term
    return total


def _eval_monomial_subs(p, vals, used):
    scal = {}
    mono = {}
    for k in used:
        v = vals[k]
        if isinstance(v, MultiPoly):
            (e, c), = v.terms.items()
            mono[k] = (e, c)
        else:
            scal[k] = v
    if not mono:
        total = Fraction(0)
        for e, c in p.terms.items():
            term = Fraction(c)
            for k in used:
                if e[k]:
                    term *= Fraction(scal[k]) ** e[k]
            total += term
        return _normalize(total)
    out = {}
    for e, c in p.terms.items():
        coeff = Fraction(c)
        exp = [0] * NVARS
        for k in range(NVARS):
            m = e[k]
            if not m:
                continue
            if k in scal:
                coeff *= Fraction(scal[k]) ** m
                if coeff == 0:
                    break
            else:
                me, mc = mono[k]
                coeff *= Fraction(mc) ** m
                for j in range(NVARS):
                    exp[j] += me[j] * m
        if coeff == 0:
            continue
        t = tuple(exp)
        s = out.get(t, 0) + coeff
        if s == 0:
            out.pop(t, None)
        else:
            out[t] = s
    return _raw({e: _normalize(c) for e, c in out.items()})


class TruncatedSeries:
    """Power series ``sum_k coeffs[k] t^k`` known up to and including ``t^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=16):
        coeffs = list(coeffs)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def t(cls, order=16):
        return cls([0, 1], order)

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError("series truncated at different orders")
            return other
        if isinstance(other, (numbers.Integral, Fraction, MultiPoly)):
            return TruncatedSeries([other], self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j in range(n + 1 - i):
                b = o.coeffs[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries([1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        c0 = self.coeffs[0]
        inv0 = _unit_inverse(c0)
        n = self.order
        out = [0] * (n + 1)
        out[0] = inv0
        for k in range(1, n + 1):
            s = 0
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if not _is_zero(a):
                    s = s + a * out[k - j]
            out[k] = -(s * inv0)
        return TruncatedSeries(out, n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return all(_eq(a, b) for a, b in zip(self.coeffs, o.coeffs))

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if not _is_zero(c))
        return f"TruncatedSeries({body or '0'} + O(t^{self.order + 1}))"


def _is_zero(c):
    if isinstance(c, MultiPoly):
        return c.is_zero()
    return c == 0


def _eq(a, b):
    return _is_zero(a - b)


def _unit_inverse(c):
    if isinstance(c, MultiPoly):
        if not c.is_constant() or c.is_zero():
            raise NonInvertible(f"coefficient {c} is not a unit")
        c = c.constant_term()
    if c == 0:
        raise NonInvertible("zero leading coefficient")
    return Fraction(1) / c


def series_compose(f, g):
    """``f(g(t))`` truncated at the common order; ``g`` needs zero constant term."""
    if not _is_zero(g.coeffs[0]):
        raise NonzeroConstantTerm("inner series has a nonzero constant term")
    if f.order != g.order:
        raise ValueError("series truncated at different orders")
    result = TruncatedSeries([f.coeffs[-1]], f.order)
    for c in reversed(f.coeffs[:-1]):
        result = result * g + c
    return result


def series_reverse(w):
    """Compositional inverse ``t(s)`` with ``w(t(s)) = s`` to the truncation order.

    Uses Lagrange inversion: ``[s^n] t = (1/n) [t^(n-1)] (t / w(t))^n``.
    """
    if not _is_zero(w.coeffs[0]):
        raise NonzeroConstantTerm("series to reverse has a nonzero constant term")
    if _is_zero(w.coeffs[1]):
        raise NonInvertible("linear coefficient is zero")
    n = w.order
    shifted = TruncatedSeries(w.coeffs[1:], n)  # w(t)/t
    h = shifted.inverse()
    out = [0] * (n + 1)
    hp = TruncatedSeries([1], n)
    for k in range(1, n + 1):
        hp = hp * h
        out[k] = hp.coeffs[k - 1] * Fraction(1, k)
    return TruncatedSeries(out, n)
