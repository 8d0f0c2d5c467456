"""Staircase tableaux: validation, enumeration, q/u filling, weights and the
generating polynomials ``Z_n``, ``Z_sigma`` and ``Z_n(y)``.

Orientation is English: row 1 is on top with ``n`` boxes, row ``i`` has
columns ``1 .. n+1-i`` and its diagonal box is ``(i, n+1-i)``.  The type word
is read from row 1's diagonal box down to row n's.  Type words are plain
strings over ``B`` (a particle, written as a filled dot) and ``W`` (a hole).
"""

from dataclasses import dataclass, field
from functools import lru_cache
import json
import os

from . import kernel
from .errors import BudgetExceeded, IncompleteRule, IrrationalResidual, OutOfShape
from .exact import QuadExt, qpochhammer, require_nonzero, sqrt_exact
from .polyring import NVARS, MultiPoly

__all__ = [
    "LABELS",
    "StaircaseTableau",
    "parse_type",
    "format_type",
    "type_bits",
    "get_budget",
    "validate",
    "enumerate_tableaux",
    "enumerate_type",
    "type_of",
    "fill_qu",
    "weight",
    "fugacity",
    "census",
    "z_poly",
    "z_sigma_poly",
    "z_fast",
]

LABELS = ("alpha", "beta", "gamma", "delta")
_SHORT = {"a": "alpha", "b": "beta", "g": "gamma", "d": "delta"}
BLACK = frozenset({"alpha", "delta"})
DEFAULT_BUDGET = 6


def parse_type(word):
    """Normalize a type word to ``B``/``W`` letters; accepts filled/hollow dots."""
    table = {"B": "B", "W": "W", "•": "B", "∘": "W", "●": "B", "○": "W",
             "1": "B", "0": "W"}
    try:
        return "".join(table[ch] for ch in word if not ch.isspace())
    except KeyError as exc:
        raise ValueError(f"bad letter {exc.args[0]!r} in type word {word!r}") from None


def format_type(word, dots=False):
    word = parse_type(word)
    if dots:
        return word.replace("B", "•").replace("W", "∘")
    return word


def type_bits(word):
    """Integer with the first letter as the most significant bit, B = 1."""
    bits = 0
    for ch in parse_type(word):
        bits = (bits << 1) | (ch == "B")
    return bits


def bits_to_type(bits, n):
    return "".join("B" if bits >> (n - 1 - k) & 1 else "W" for k in range(n))


def get_budget(budget=None):
    if budget is not None:
        return budget
    env = os.environ.get("STAIRCASE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(n, budget):
    limit = get_budget(budget)
    if n > limit:
        raise BudgetExceeded(f"size {n} exceeds the enumeration budget {limit}")


def _in_shape(n, i, j):
    return 1 <= i <= n and 1 <= j <= n + 1 - i


@dataclass(frozen=True)
class StaircaseTableau:
    """A filling of the staircase diagram of size ``n``.

    ``cells`` maps ``(row, col)`` to one of :data:`LABELS`; boxes that are not
    keys are empty.
    """

    n: int
    cells: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), lab in self.cells.items():
            if not _in_shape(self.n, i, j):
                raise OutOfShape(f"box ({i}, {j}) is outside the staircase of size {self.n}")
            lab = _SHORT.get(lab, lab)
            if lab not in LABELS:
                raise ValueError(f"unknown label {lab!r}")
            clean[(i, j)] = lab
        object.__setattr__(self, "cells", clean)

    def __hash__(self):
        return hash((self.n, frozenset(self.cells.items())))

    def __eq__(self, other):
        if not isinstance(other, StaircaseTableau):
            return NotImplemented
        return self.n == other.n and self.cells == other.cells

    def label(self, i, j):
        if not _in_shape(self.n, i, j):
            raise OutOfShape(f"box ({i}, {j}) is outside the staircase of size {self.n}")
        return self.cells.get((i, j))

    def boxes(self):
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 2 - i):
                yield i, j

    def diagonal(self):
        """Diagonal labels from row 1 (northeast) to row n (southwest)."""
        return [self.cells.get((i, self.n + 1 - i)) for i in range(1, self.n + 1)]

    def to_json(self):
        cells = [{"row": i, "col": j, "label": lab} for (i, j), lab in sorted(self.cells.items())]
        return {"n": self.n, "cells": cells}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        cells = {(c["row"], c["col"]): c["label"] for c in data["cells"]}
        return cls(int(data["n"]), cells)

    def __str__(self):
        sym = {"alpha": "a", "beta": "b", "gamma": "g", "delta": "d", None: "."}
        rows = []
        for i in range(1, self.n + 1):
            rows.append(" ".join(sym[self.cells.get((i, j))] for j in range(1, self.n + 2 - i)))
        return "\n".join(rows)


def validate(T):
    """True iff ``T`` obeys the three defining rules of a staircase tableau."""
    n = T.n
    for (i, j) in T.cells:
        if not _in_shape(n, i, j):
            raise OutOfShape(f"box ({i}, {j}) is outside the staircase of size {n}")
    for i in range(1, n + 1):
        if (i, n + 1 - i) not in T.cells:
            return False
    for (i, j), lab in T.cells.items():
        if lab in ("beta", "delta"):
            if any((i, jj) in T.cells for jj in range(1, j)):
                return False
        else:
            if any((ii, j) in T.cells for ii in range(1, i)):
                return False
    return True


def _walk(n, bits=None, labels=LABELS):
    """Yield cell dictionaries of every tableau (optionally of one type or label set)."""
    order = []
    for i in range(n, 0, -1):
        c0 = n + 1 - i
        order.append((i, c0, True))
        order.extend((i, j, False) for j in range(c0 - 1, 0, -1))
    nbox = len(order)
    top = [None] * (n + 2)
    cells = {}

    def rec(k, closed):
        if k == nbox:
            yield dict(cells)
            return
        i, j, diag = order[k]
        if diag:
            bit = 1 << (n - i)
            for lab in labels:
                if bits is not None and bool(bits & bit) != (lab in BLACK):
                    continue
                saved = top[j]
                top[j] = lab
                cells[(i, j)] = lab
                yield from rec(k + 1, lab in ("beta", "delta"))
                del cells[(i, j)]
                top[j] = saved
            return
        yield from rec(k + 1, closed)
        below = top[j]
        if closed or below in ("alpha", "gamma"):
            return
        for lab in labels:
            top[j] = lab
            cells[(i, j)] = lab
            yield from rec(k + 1, lab in ("beta", "delta"))
            del cells[(i, j)]
            top[j] = below

    yield from rec(0, False)


def enumerate_tableaux(n, labels=None):
    """Yield every staircase tableau of size ``n`` exactly once.

    ``labels`` restricts the alphabet, e.g. ``("alpha", "beta")``.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    labels = LABELS if labels is None else tuple(_SHORT.get(l, l) for l in labels)
    for cells in _walk(n, labels=labels):
        yield StaircaseTableau(n, cells)


def enumerate_type(sigma):
    """Yield every staircase tableau whose type is ``sigma``."""
    sigma = parse_type(sigma)
    n = len(sigma)
    for cells in _walk(n, type_bits(sigma)):
        yield StaircaseTableau(n, cells)


def type_of(T):
    return "".join("B" if lab in BLACK else "W" for lab in T.diagonal())


def fugacity(T):
    """Number of particles in the type of ``T``."""
    return type_of(T).count("B")


def _nearest_right(T, i, j):
    for jj in range(j + 1, T.n + 2 - i):
        lab = T.cells.get((i, jj))
        if lab is not None:
            return lab
    return None


def _nearest_below(T, i, j):
    for ii in range(i + 1, T.n + 2 - j):
        lab = T.cells.get((ii, j))
        if lab is not None:
            return lab
    return None


def fill_qu(T):
    """Assign ``"q"`` or ``"u"`` to every empty box of ``T``."""
    filling = {}
    for i, j in T.boxes():
        if (i, j) in T.cells:
            continue
        right = _nearest_right(T, i, j)
        if right == "beta":
            filling[(i, j)] = "u"
            continue
        if right == "delta":
            filling[(i, j)] = "q"
            continue
        below = _nearest_below(T, i, j)
        if right is None or below is None:
            raise IncompleteRule(f"box ({i}, {j}) sees no label to its right or below")
        filling[(i, j)] = "u" if below in BLACK else "q"
    return filling


def weight(T):
    """The monomial in alpha, beta, gamma, delta, q, u carried by ``T``."""
    e = [0] * NVARS
    idx = {"alpha": 0, "beta": 1, "gamma": 2, "delta": 3, "q": 4, "u": 5}
    for lab in T.cells.values():
        e[idx[lab]] += 1
    for sym in fill_qu(T).values():
        e[idx[sym]] += 1
    return MultiPoly({tuple(e): 1})


@lru_cache(maxsize=None)
def census(n):
    """``{(type_bits, ea, eb, eg, ed, eq, eu): count}`` from the census kernel."""
    return kernel.census(n)


@lru_cache(maxsize=None)
def _z_poly_cached(n, keep_u):
    terms = {}
    for (bits, ea, eb, eg, ed, eq, eu), cnt in census(n).items():
        e = (ea, eb, eg, ed, eq, eu if keep_u else 0, bin(bits).count("1"))
        terms[e] = terms.get(e, 0) + cnt
    return MultiPoly(terms)


def z_poly(n, keep_u=False, budget=None):
    """``Z_n(y; alpha, beta, gamma, delta; q)``; ``u`` is kept only with ``keep_u``."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    _check_budget(n, budget)
    return _z_poly_cached(n, bool(keep_u))


@lru_cache(maxsize=None)
def _z_sigma_cached(n, bits, keep_u):
    terms = {}
    for (b, ea, eb, eg, ed, eq, eu), cnt in census(n).items():
        if b != bits:
            continue
        e = (ea, eb, eg, ed, eq, eu if keep_u else 0, 0)
        terms[e] = terms.get(e, 0) + cnt
    return MultiPoly(terms)


def z_sigma_poly(sigma, keep_u=False, budget=None):
    """Generating polynomial of the tableaux of type ``sigma``."""
    sigma = parse_type(sigma)
    _check_budget(len(sigma), budget)
    return _z_sigma_cached(len(sigma), type_bits(sigma), bool(keep_u))


def z_fast(params, y, n):
    """``Z_n(y; alpha, beta, gamma, delta; q)`` at the Greek point of ``params``.

    Moments of the monic recurrence with diagonal
    ``(1/sqrt(y) + sqrt(y) + B_k)/(1-q)`` and off-diagonal products
    ``A_{k-1} C_k/(1-q)^2``, where A, B, C are the Askey-Wilson recurrence
    coefficients at ``(a/sqrt(y), b sqrt(y), c/sqrt(y), d sqrt(y))``; then
    ``Z_n = (abcd;q)_n sqrt(y)^n (alpha beta)^n mu_n``.
    """
    from .moments import AWParams, TridiagonalSpec, recurrence_coeffs, tridiag_moments
    from .partition import greek_from_abcd

    if n == 0:
        return 1
    g = greek_from_abcd(params)
    a, b, c, d, q = params.a, params.b, params.c, params.d, params.q
    s = sqrt_exact(y)
    require_nonzero(s, "sqrt(y)")
    one_q = require_nonzero(1 - q, "1-q")
    shifted = AWParams(a / s, b * s, c / s, d * s, q)
    coeffs = {}

    def rc(k):
        if k not in coeffs:
            coeffs[k] = recurrence_coeffs(k, shifted)
        return coeffs[k]

    spec = TridiagonalSpec(lambda k: (1 / s + s + rc(k)[1]) / one_q,
                           lambda k: rc(k - 1)[0] * rc(k)[2] / (one_q * one_q))
    mu = tridiag_moments(spec, n)[n]
    z = qpochhammer(a * b * c * d, q, n) * s ** n * (g.alpha * g.beta) ** n * mu
    if isinstance(z, QuadExt):
        if not z.is_rational():
            raise IrrationalResidual(f"Z_{n} kept sqrt(y) component {z.q}")
        z = z.to_rational()
    return z
