"""The open-boundary ASEP as an exact finite Markov chain.

States are type words; state ``s`` has index ``int(s, 2)`` with ``B = 1``, so
the leftmost site is the most significant bit.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
import warnings

from .errors import BudgetExceeded, NonUniqueStationary
from .exact import as_rational
from .polyring import poly_eval
from .report import CheckReport, check
from .tableaux import bits_to_type, get_budget, z_poly, z_sigma_poly

__all__ = [
    "ASEPChain",
    "build_chain",
    "stationary_exact",
    "verify_newthm",
    "verify_fugacity_marginal",
    "state_index",
]


def state_index(word):
    return int(word.replace("B", "1").replace("W", "0"), 2) if word else 0


@dataclass(frozen=True)
class ASEPChain:
    n: int
    params: dict
    matrix: tuple  # rows of Fractions

    @property
    def states(self):
        return [bits_to_type(k, self.n) for k in range(1 << self.n)]


def _rates(g, u):
    vals = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma, "delta": g.delta,
            "q": g.q, "u": u}
    return {k: as_rational(v) if not isinstance(v, Fraction) else v for k, v in vals.items()}


def build_chain(n, g, u=1):
    """Transition matrix of the discrete-time ASEP on ``n`` sites."""
    r = _rates(g, u)
    for name, v in r.items():
        if not 0 <= v <= 1:
            warnings.warn(f"{name}={v} is outside [0, 1]; the chain is only algebraic", stacklevel=2)
    N = 1 << n
    scale = Fraction(1, n + 1)
    P = [[Fraction(0)] * N for _ in range(N)]

    def bit(x, site):  # site 0 is the leftmost
        return x >> (n - 1 - site) & 1

    def flip(x, site):
        return x ^ (1 << (n - 1 - site))

    for x in range(N):
        row = P[x]
        if n:
            if bit(x, 0):
                row[flip(x, 0)] += r["gamma"] * scale
            else:
                row[flip(x, 0)] += r["alpha"] * scale
            if bit(x, n - 1):
                row[flip(x, n - 1)] += r["beta"] * scale
            else:
                row[flip(x, n - 1)] += r["delta"] * scale
        for s in range(n - 1):
            left, right = bit(x, s), bit(x, s + 1)
            if left and not right:
                row[flip(flip(x, s), s + 1)] += r["u"] * scale
            elif right and not left:
                row[flip(flip(x, s), s + 1)] += r["q"] * scale
        row[x] += 1 - sum(row[y] for y in range(N) if y != x)
    return ASEPChain(n, r, tuple(tuple(row) for row in P))


def _bareiss_solve(A, b):
    """Solve ``A x = b`` exactly; rows are first scaled to integers."""
    N = len(A)
    M = []
    for row, rhs in zip(A, b):
        den = lcm(*(Fraction(v).denominator for v in row), Fraction(rhs).denominator)
        M.append([int(v * den) for v in row] + [int(rhs * den)])
    prev = 1
    for k in range(N):
        piv = next((i for i in range(k, N) if M[i][k] != 0), None)
        if piv is None:
            raise NonUniqueStationary("the balance equations are singular")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        mk = M[k]
        for i in range(k + 1, N):
            mi = M[i]
            f = mi[k]
            for j in range(k + 1, N + 1):
                mi[j] = (mi[j] * mk[k] - f * mk[j]) // prev
            mi[k] = 0
        prev = mk[k]
    x = [Fraction(0)] * N
    for i in range(N - 1, -1, -1):
        s = Fraction(M[i][N]) - sum(M[i][j] * x[j] for j in range(i + 1, N))
        x[i] = s / M[i][i]
    return x


def stationary_exact(chain):
    """The unique ``pi`` with ``pi P = pi`` and ``sum(pi) = 1``."""
    P = chain.matrix
    N = len(P)
    A = [[P[j][i] - (1 if i == j else 0) for j in range(N)] for i in range(N)]
    A[-1] = [Fraction(1)] * N
    b = [Fraction(0)] * (N - 1) + [Fraction(1)]
    return _bareiss_solve(A, b)


def _z_sigma_values(n, g, u, budget):
    pt = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma, "delta": g.delta,
          "q": g.q, "u": u}
    return {w: poly_eval(z_sigma_poly(w, keep_u=True, budget=budget), pt)
            for w in (bits_to_type(k, n) for k in range(1 << n))}


def verify_newthm(n, g, u=1, budget=None):
    """``pi(sigma) = Z_sigma / Z_n`` for every state, with ``u`` kept general."""
    if n > min(8, get_budget(budget)):
        raise BudgetExceeded(f"n={n} exceeds the ASEP/enumeration budget")
    chain = build_chain(n, g, u)
    pi = stationary_exact(chain)
    zs = _z_sigma_values(n, g, u, budget)
    zn = sum(zs.values())
    reports = []
    for k, p in enumerate(pi):
        w = bits_to_type(k, n)
        ratio = zs[w] / zn
        rep = check(f"state {w or '-'}", p == ratio, f"pi={p} Z_sigma/Z_n={ratio}")
        rep.detail = f"pi={p} Z_sigma/Z_n={ratio} {'MATCH' if p == ratio else 'MISMATCH'}"
        reports.append(rep)
    residual = [sum(pi[x] * chain.matrix[x][y] for x in range(len(pi))) - pi[y]
                for y in range(len(pi))]
    reports.append(check("pi P = pi, sum pi = 1", all(r == 0 for r in residual) and sum(pi) == 1))
    if g.delta == 0 and u == 1:
        from .typegen import z_sigma_delta0

        pt = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma, "q": g.q}
        ok = all(poly_eval(z_sigma_delta0(w), pt) == zs[w] for w in zs)
        reports.append(check("delta=0 recurrence agrees", ok))
    return CheckReport.combine(f"ASEP stationary law n={n}", reports)


def verify_fugacity_marginal(n, g, u=1, budget=None):
    """Occupation-number marginals are the ``y^i`` coefficients of ``Z_n(y)`` over ``Z_n(1)``."""
    chain = build_chain(n, g, u)
    pi = stationary_exact(chain)
    pt = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma, "delta": g.delta,
          "q": g.q, "u": u}
    Z = z_poly(n, keep_u=True, budget=budget)
    coeffs = [poly_eval(Z.coefficient("y", i), pt) if not Z.coefficient("y", i).is_zero() else 0
              for i in range(n + 1)]
    zn = sum(coeffs)
    reports = []
    for i in range(n + 1):
        mass = sum(p for k, p in enumerate(pi) if bin(k).count("1") == i)
        reports.append(check(f"{i} particles", mass * zn == coeffs[i],
                             f"marginal={mass} coefficient/Z_n={Fraction(coeffs[i]) / zn}"))
    return CheckReport.combine(f"fugacity marginals n={n}", reports)
