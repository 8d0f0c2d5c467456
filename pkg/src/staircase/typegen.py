"""Generating polynomials of a fixed type ``Z_sigma``.

* compositions and the closed form for ``Z_sigma(1,1,0,0;q)``,
* the three relations among the ``Z_sigma`` (checked as polynomial identities),
* the ``delta = 0`` rewriting engine, which computes ``Z_sigma(alpha,beta,gamma,0;q)``
  without enumeration.
"""

from functools import lru_cache
from itertools import product

from .errors import NoncancelingDenominator, NotCoarser
from .exact import qint
from .polyring import MultiPoly
from .report import CheckReport, check
from .tableaux import parse_type, z_sigma_poly

__all__ = [
    "composition_of_type",
    "descent_set",
    "coarsenings",
    "qstat",
    "st_statistic",
    "z_sigma_ntw",
    "check_cwth",
    "check_cwth_all",
    "z_sigma_delta0",
]

ALPHA, BETA, GAMMA, DELTA, Q = (MultiPoly.var(v) for v in ("alpha", "beta", "gamma", "delta", "q"))


def composition_of_type(sigma):
    """``I(sigma)``: white-block lengths read right to left, each plus one."""
    word = parse_type(sigma)
    return tuple(len(block) + 1 for block in word[::-1].split("B"))


def descent_set(I):
    out, s = [], 0
    for part in I[:-1]:
        s += part
        out.append(s)
    return out


def coarsenings(I):
    """All ``J`` weakly coarser than ``I``; bit ``k`` of the mask merges across gap ``k``."""
    I = tuple(I)
    gaps = len(I) - 1
    out = []
    for mask in range(1 << gaps):
        parts = [I[0]]
        for k in range(gaps):
            if mask >> k & 1:
                parts[-1] += I[k + 1]
            else:
                parts.append(I[k + 1])
        out.append(tuple(parts))
    return out


def qstat(J, q):
    """``[p]_q^{j_1} [p-1]_q^{j_2} ... [1]_q^{j_p}`` for ``J = (j_1, ..., j_p)``."""
    p = len(J)
    out = 1
    for r, j in enumerate(J):
        out = out * qint(p - r, q) ** j
    return out


def st_statistic(I, J):
    """``#{(i, j) in Des(I) x Des(J) : i <= j}``."""
    dI, dJ = descent_set(I), descent_set(J)
    if sum(I) != sum(J) or not set(dJ) <= set(dI):
        raise NotCoarser(f"{tuple(J)} is not weakly coarser than {tuple(I)}")
    return sum(1 for i in dI for j in dJ if i <= j)


def z_sigma_ntw(sigma):
    """``Z_sigma(1,1,0,0;q) = sum_{J <= I} (-1/q)^{l(I)-l(J)} q^{-st(I,J)} QStat(J)``.

    Terms are collected as Laurent polynomials in ``q``; the negative powers
    cancel and the result is returned as a MultiPoly in ``q``.
    """
    I = composition_of_type(sigma)
    acc = {}
    for J in coarsenings(I):
        drop = len(I) - len(J)
        sign = -1 if drop % 2 else 1
        shift = -drop - st_statistic(I, J)
        poly = qstat(J, Q)
        if not isinstance(poly, MultiPoly):
            poly = MultiPoly.const(poly)
        for e, c in poly.terms.items():
            k = e[4] + shift
            acc[k] = acc.get(k, 0) + sign * c
    acc = {k: c for k, c in acc.items() if c != 0}
    if any(k < 0 for k in acc):
        raise NoncancelingDenominator(f"negative powers of q survive for {sigma}")
    return MultiPoly({(0, 0, 0, 0, k, 0, 0): c for k, c in acc.items()})


def _lam(n):
    return ALPHA * BETA - GAMMA * DELTA * Q ** (n - 1)


def check_cwth(sigma1="", sigma2="", sigma="", budget=None):
    """The three relations among ``Z_sigma`` as identities of polynomials."""
    s1, s2, s = parse_type(sigma1), parse_type(sigma2), parse_type(sigma)

    def Z(w):
        return z_sigma_poly(w, budget=budget)

    lhs1 = Z(s1 + "BW" + s2) - Q * Z(s1 + "WB" + s2)
    rhs1 = _lam(len(s1) + len(s2) + 2) * (Z(s1 + "B" + s2) + Z(s1 + "W" + s2))
    lhs2 = ALPHA * Z("W" + s) - GAMMA * Z("B" + s)
    rhs2 = _lam(len(s) + 1) * Z(s)
    lhs3 = BETA * Z(s + "B") - DELTA * Z(s + "W")
    rhs3 = _lam(len(s) + 1) * Z(s)
    tag1 = f"sigma1={s1 or '-'} sigma2={s2 or '-'}"
    reports = [
        check(f"cwth(1) {tag1}", lhs1 == rhs1, f"difference {lhs1 - rhs1}"),
        check(f"cwth(2) sigma={s or '-'}", lhs2 == rhs2, f"difference {lhs2 - rhs2}"),
        check(f"cwth(3) sigma={s or '-'}", lhs3 == rhs3, f"difference {lhs3 - rhs3}"),
    ]
    return CheckReport.combine(f"cwth {tag1} sigma={s or '-'}", reports)


def _words(n):
    return ["".join(w) for w in product("BW", repeat=n)]


def check_cwth_all(max_len, budget=None):
    """Every relation whose words have length at most ``max_len``."""
    reports = []
    for total in range(max_len - 1):
        for k in range(total + 1):
            for s1 in _words(k):
                for s2 in _words(total - k):
                    reports.append(check_cwth(s1, s2, "", budget).children[0])
    for n in range(max_len):
        for s in _words(n):
            rep = check_cwth("", "", s, budget)
            reports.extend(rep.children[1:])
    return CheckReport.combine(f"cwth relations, total length <= {max_len}", reports)


# -- delta = 0 rewriting --------------------------------------------------------


def _lift(p, m, target):
    return p * ALPHA ** (target - m) if target > m else p


def _combine(*pairs):
    """Sum of ``coef * (poly / alpha^m)`` terms, as ``(poly, m)``."""
    top = max(m for _, (_, m) in pairs)
    total = MultiPoly()
    for coef, (p, m) in pairs:
        total = total + coef * _lift(p, m, top)
    return _reduce(total, top)


def _reduce(p, m):
    while m > 0:
        r = p.div_monomial(alpha=1)
        if r is None:
            break
        p, m = r, m - 1
    return p, m


@lru_cache(maxsize=None)
def _delta0(word):
    if word == "":
        return MultiPoly.const(1), 0
    if word.endswith("B"):
        p, m = _delta0(word[:-1])
        return _reduce(ALPHA * p, m)
    if "B" not in word:
        # alpha Z_{W s} = gamma Z_{B s} + alpha beta Z_s
        rest = word[1:]
        pb, mb = _delta0("B" + rest)
        pb, mb = pb, mb + 1  # divide by alpha
        return _combine((GAMMA, (pb, mb)), (BETA, _delta0(rest)))
    k = word.rfind("BW")
    s1, s2 = word[:k], word[k + 2:]
    return _combine(
        (Q, _delta0(s1 + "WB" + s2)),
        (ALPHA * BETA, _delta0(s1 + "B" + s2)),
        (ALPHA * BETA, _delta0(s1 + "W" + s2)),
    )


def z_sigma_delta0(sigma):
    """``Z_sigma(alpha, beta, gamma, 0; q)`` by the three delta-free relations."""
    p, m = _delta0(parse_type(sigma))
    if m:
        raise NoncancelingDenominator(f"alpha^{m} does not divide the result for {sigma}")
    return p
