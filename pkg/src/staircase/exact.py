"""Exact scalars and q-series primitives.

Rationals are :class:`fractions.Fraction`.  On top of them this module adds
Gaussian rationals (for the ``i`` substitution in the signed moment formula),
elements of a quadratic extension ``Q(sqrt(y))`` and truncated Laurent series
in ``q`` used to take exact ``q -> 0`` limits of formulas with removable poles.

All q-series helpers are written against the ring operations only, so they
accept any of these scalar types, and also :class:`~staircase.polyring.MultiPoly`.
"""

from fractions import Fraction
from math import isqrt
import numbers

from .errors import DegenerateParameters

__all__ = [
    "Fraction",
    "GaussianRational",
    "QuadExt",
    "LaurentSeries",
    "I",
    "as_rational",
    "format_rational",
    "rational_sqrt",
    "sqrt_exact",
    "qpochhammer",
    "qpochhammer_multi",
    "qint",
    "qbinomial",
    "is_zero",
    "require_nonzero",
]


def as_rational(x):
    """Parse ``"p/q"``, ``"p"``, ints or Fractions into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def format_rational(x):
    """Canonical text: ``p/q`` with ``q > 0``, or ``p`` when ``q == 1``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_sqrt(x):
    """Return the rational square root of ``x`` or ``None`` if there is none."""
    x = Fraction(x)
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def is_zero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def require_nonzero(x, name):
    """Raise :class:`DegenerateParameters` naming ``name`` when ``x == 0``."""
    if is_zero(x):
        raise DegenerateParameters(name)
    return x


def _coerce_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    return None


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _lift(cls, other):
        if isinstance(other, GaussianRational):
            return other
        r = _coerce_rational(other)
        if r is None:
            return None
        return cls(r, 0)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self):
        return self.re * self.re + self.im * self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by the Gaussian rational 0")
        return GaussianRational(self.re / n, -self.im / n)

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

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = GaussianRational(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)} {sign} {format_rational(abs(self.im))}*i"


I = GaussianRational(0, 1)


class QuadExt:
    """``p + q*sqrt(r)`` for a fixed rational radicand ``r``.

    The radicand is expected not to be a rational square; use :func:`sqrt_exact`,
    which hands back a plain Fraction in that case, so that the representation
    stays unique and componentwise comparison is sound.
    """

    __slots__ = ("radicand", "p", "q")

    def __init__(self, radicand, p=0, q=0):
        self.radicand = Fraction(radicand)
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def sqrt_of(cls, radicand):
        return cls(radicand, 0, 1)

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.radicand != self.radicand:
                raise ValueError("QuadExt elements over different radicands")
            return other
        r = _coerce_rational(other)
        if r is None:
            return None
        return QuadExt(self.radicand, r, 0)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.radicand, self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.radicand, -self.p, -self.q)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.radicand, self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        r = self.radicand
        return QuadExt(r, self.p * o.p + self.q * o.q * r, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.radicand, self.p, -self.q)

    def norm(self):
        """``p^2 - q^2 r``, the product with the conjugate."""
        return self.p * self.p - self.q * self.q * self.radicand

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} is not invertible")
        return QuadExt(self.radicand, self.p / n, -self.q / n)

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

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadExt(self.radicand, 1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return self.p == 0 and self.q == 0

    def is_rational(self):
        return self.q == 0

    def to_rational(self):
        if self.q != 0:
            raise ValueError(f"{self} has a nonzero sqrt component")
        return self.p

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.radicand, self.p, self.q))

    def __repr__(self):
        return f"QuadExt({format_rational(self.radicand)}, {format_rational(self.p)}, {format_rational(self.q)})"

    def __str__(self):
        return f"{format_rational(self.p)} + {format_rational(self.q)}*sqrt({format_rational(self.radicand)})"


def sqrt_exact(y):
    """Exact square root of a rational: a Fraction if possible, else a QuadExt."""
    y = Fraction(y)
    r = rational_sqrt(y)
    if r is not None:
        return r
    return QuadExt.sqrt_of(y)


class LaurentSeries:
    """Truncated Laurent series in ``q`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``q**(val + k)``.  ``prec`` is the
    absolute precision: every coefficient of ``q**e`` with ``e < prec`` is
    known.  ``prec is None`` marks an exact Laurent polynomial.  Inverting an
    exact element keeps ``default_rel_prec`` terms.
    """

    __slots__ = ("val", "coeffs", "prec")
    default_rel_prec = 48

    def __init__(self, coeffs, val=0, prec=None):
        coeffs = [Fraction(c) for c in coeffs]
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        coeffs = coeffs[k:]
        val += k
        if prec is not None:
            keep = max(prec - val, 0)
            coeffs = coeffs[:keep]
        else:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        if not coeffs:
            val = prec if prec is not None else 0
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def gen(cls):
        return cls([1], 1)

    @classmethod
    def _lift(cls, other):
        if isinstance(other, LaurentSeries):
            return other
        r = _coerce_rational(other)
        if r is None:
            return None
        return cls([r], 0)

    def _rel_prec(self):
        if self.prec is None:
            return None
        return self.prec - self.val

    def coefficient(self, e):
        if self.prec is not None and e >= self.prec:
            raise ValueError(f"coefficient of q^{e} is beyond precision {self.prec}")
        k = e - self.val
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        precs = [p for p in (self.prec, o.prec) if p is not None]
        prec = min(precs) if precs else None
        lo = min(self.val if self.coeffs else 10**9, o.val if o.coeffs else 10**9)
        if lo == 10**9:
            return LaurentSeries([], 0, prec)
        hi = max(self.val + len(self.coeffs), o.val + len(o.coeffs))
        if prec is not None:
            hi = min(hi, prec)
        out = [Fraction(0)] * max(hi - lo, 0)
        for s in (self, o):
            for k, c in enumerate(s.coeffs):
                e = s.val + k
                if lo <= e < hi:
                    out[e - lo] += c
        return LaurentSeries(out, lo, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.val, self.prec)

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
        val = self.val + o.val
        rels = [r for r in (self._rel_prec(), o._rel_prec()) if r is not None]
        if not self.coeffs or not o.coeffs:
            if (not self.coeffs and self.prec is None) or (not o.coeffs and o.prec is None):
                return LaurentSeries([])
            lo1 = self.val if self.coeffs else self.prec
            lo2 = o.val if o.coeffs else o.prec
            return LaurentSeries([], 0, lo1 + lo2)
        rel = min(rels) if rels else None
        n = len(self.coeffs) + len(o.coeffs) - 1
        if rel is not None:
            n = min(n, rel)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs[: n - i]):
                out[i + j] += a * b
        return LaurentSeries(out, val, None if rel is None else val + rel)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a series that vanishes to known precision")
        rel = self._rel_prec()
        if rel is None:
            rel = self.default_rel_prec
        c0 = self.coeffs[0]
        inv = [Fraction(0)] * rel
        inv[0] = 1 / c0
        for k in range(1, rel):
            s = Fraction(0)
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                s += self.coeffs[j] * inv[k - j]
            inv[k] = -s / c0
        return LaurentSeries(inv, -self.val, -self.val + rel)

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

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = LaurentSeries([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def __repr__(self):
        terms = " + ".join(f"{format_rational(c)}*q^{self.val + k}"
                           for k, c in enumerate(self.coeffs) if c != 0) or "0"
        tail = "" if self.prec is None else f" + O(q^{self.prec})"
        return f"LaurentSeries({terms}{tail})"


def qpochhammer(x, q, n):
    """``(x;q)_n = prod_{k<n} (1 - x q^k)``; the empty product is 1."""
    if n < 0:
        raise ValueError("negative q-Pochhammer order is not supported")
    result = 1
    qk = 1
    for _ in range(n):
        result = result * (1 - x * qk)
        qk = qk * q
    return result


def qpochhammer_multi(xs, q, n):
    """``(x_1, ..., x_s; q)_n``, the product of the single symbols."""
    result = 1
    for x in xs:
        result = result * qpochhammer(x, q, n)
    return result


def qint(p, q):
    """The q-integer ``[p]_q = 1 + q + ... + q^(p-1)``, with ``[0]_q = 0``."""
    if p < 0:
        raise ValueError("q-integer of a negative number")
    result = 0
    qk = 1
    for _ in range(p):
        result = result + qk
        qk = qk * q
    return result


def qbinomial(k, j, q):
    """Gaussian binomial ``(q;q)_k / ((q;q)_j (q;q)_{k-j})`` at a scalar ``q``."""
    if not 0 <= j <= k:
        raise ValueError(f"qbinomial needs 0 <= j <= k, got k={k}, j={j}")
    num = qpochhammer(q, q, k)
    den = qpochhammer(q, q, j) * qpochhammer(q, q, k - j)
    if is_zero(den):
        raise DegenerateParameters(f"(q;q)_{j}(q;q)_{k - j}", "q is a root of unity")
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den

