"""Forests, cycles, signed permutations, Dyck paths and matchings.

Staircase forests live on the labeled cells of a tableau.  Row ``i`` has
columns ``1..n+1-i`` and the ``i``-th diagonal vertex is ``v_i = (i, n+1-i)``.
Permutations are stored in one-line form: ``perm[i-1] = pi(i)``.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import BudgetExceeded, NotATree
from .exact import qint
from .polyring import MultiPoly
from .report import CheckReport, check
from .tableaux import enumerate_tableaux, z_poly

__all__ = [
    "StaircaseForest",
    "DoublySignedPermutation",
    "forest_of",
    "count_staircase_trees",
    "brute_force_tree_count",
    "forest_permutation",
    "tree_to_cycle",
    "cycles_of",
    "phi",
    "dyck_paths",
    "dyck_path_weight",
    "dyck_moment",
    "perfect_matchings",
    "matching_stats",
    "check_fcrossing_theorem",
    "check_bijections",
]

@dataclass(frozen=True)
class StaircaseForest:
    n: int
    vertices: frozenset
    row_child: dict
    col_child: dict

    def __hash__(self):
        return hash((self.n, self.vertices))

    def __eq__(self, other):
        return isinstance(other, StaircaseForest) and (self.n, self.vertices) == (other.n, other.vertices)

    def diagonal(self, i):
        return (i, self.n + 1 - i)

    def is_endpoint(self, v):
        return v[0] + v[1] == self.n + 1

    @property
    def parent(self):
        par = {}
        for v, c in self.row_child.items():
            par[c] = (v, "row")
        for v, c in self.col_child.items():
            par[c] = (v, "col")
        return par

    def roots(self):
        par = self.parent
        return sorted(v for v in self.vertices if v not in par)

    def components(self):
        """Endpoint sets of the trees, one per root."""
        out = []
        for r in self.roots():
            stack, leaves = [r], []
            while stack:
                v = stack.pop()
                if self.is_endpoint(v):
                    leaves.append(v[0])
                else:
                    stack.extend((self.row_child[v], self.col_child[v]))
            out.append(sorted(leaves))
        return out

    def is_tree(self):
        return len(self.roots()) == 1


def forest_of(T):
    """The staircase forest of ``T`` (gamma and delta read as alpha and beta)."""
    n = T.n
    verts = frozenset(T.cells)
    row_child, col_child = {}, {}
    for (i, j) in verts:
        if i + j == n + 1:
            continue
        row_child[(i, j)] = next((i, jj) for jj in range(j + 1, n + 2 - i) if (i, jj) in verts)
        col_child[(i, j)] = next((ii, j) for ii in range(i + 1, n + 2 - j) if (ii, j) in verts)
    return StaircaseForest(n, verts, row_child, col_child)


@lru_cache(maxsize=None)
def count_staircase_trees(n):
    """``t(n)`` from ``t(n) = sum_i C(n-2, i-1) t(i) t(n-i)``, ``t(1) = 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return 1
    return sum(comb(n - 2, i - 1) * count_staircase_trees(i) * count_staircase_trees(n - i)
               for i in range(1, n))


def _ab_tableaux(n):
    return enumerate_tableaux(n, labels=("alpha", "beta"))


def _ab_forests(n):
    return {forest_of(T) for T in _ab_tableaux(n)}


def brute_force_tree_count(n):
    return sum(1 for F in _ab_forests(n) if F.is_tree())


def _endpoint_image(F, i, par):
    v = F.diagonal(i)
    if v not in par:
        return i
    kind = par[v][1]
    while v in par and par[v][1] == kind:
        v = par[v][0]
    step = "row" if kind == "col" else "col"
    while not F.is_endpoint(v):
        v = F.row_child[v] if step == "row" else F.col_child[v]
        step = "col" if step == "row" else "row"
    return v[0]


def forest_permutation(F):
    """The zig-zag rule applied to every endpoint; one cycle per component."""
    par = F.parent
    return tuple(_endpoint_image(F, i, par) for i in range(1, F.n + 1))


def cycles_of(perm):
    """Disjoint cycles, each starting at its least element."""
    seen, out = set(), []
    for s in range(1, len(perm) + 1):
        if s in seen:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x - 1]
        out.append(tuple(cyc))
    return out


def tree_to_cycle(F):
    """The ``n``-cycle of a staircase tree, as a tuple starting at 1."""
    if not F.is_tree():
        raise NotATree(f"forest has {len(F.roots())} components")
    cyc = cycles_of(forest_permutation(F))
    if len(cyc) != 1:
        raise NotATree("zig-zag image is not a single cycle")
    return cyc[0]


@dataclass(frozen=True)
class DoublySignedPermutation:
    perm: tuple
    sign1: tuple
    sign2: tuple

    def __str__(self):
        fmt = lambda s: "".join("+" if x > 0 else "-" for x in s)
        return f"{self.perm} {fmt(self.sign1)} {fmt(self.sign2)}"

    def to_json(self):
        return {"perm": list(self.perm), "sign1": list(self.sign1), "sign2": list(self.sign2)}


def phi(T):
    """Staircase tableau to doubly signed permutation."""
    n = T.n
    perm = forest_permutation(forest_of(T))
    s1, s2 = [], []
    for i in range(1, n + 1):
        col = n + 1 - i
        d = T.cells[(i, col)]
        s1.append(1 if d in ("alpha", "delta") else -1)
        if d in ("alpha", "gamma"):
            ref = T.cells[min((i, j) for j in range(1, col + 1) if (i, j) in T.cells)]
            s2.append(1 if ref in ("alpha", "delta") else -1)
        else:
            ref = T.cells[min((ii, col) for ii in range(1, i + 1) if (ii, col) in T.cells)]
            s2.append(1 if ref in ("alpha", "beta") else -1)
    return DoublySignedPermutation(perm, tuple(s1), tuple(s2))


# -- Dyck paths -----------------------------------------------------------------

ALPHA, GAMMA, Q = MultiPoly.var("alpha"), MultiPoly.var("gamma"), MultiPoly.var("q")


def _se_weight(k, alpha, gamma, q):
    """Weight of a down step starting at height ``k``."""
    if k % 2 == 0:
        i = k // 2 - 1
        return (alpha + gamma * q ** i) * qint(i + 1, q)
    i = (k - 1) // 2
    return q ** i + (alpha + gamma * q ** i) * qint(i, q)


def dyck_paths(n):
    """Dyck paths of length ``2n+2`` as strings over ``U``/``D``."""
    m = n + 1

    def rec(prefix, h, ups):
        if len(prefix) == 2 * m:
            yield prefix
            return
        if ups < m:
            yield from rec(prefix + "U", h + 1, ups + 1)
        if h > 0:
            yield from rec(prefix + "D", h - 1, ups)

    return rec("", 0, 0)


def dyck_path_weight(path, alpha=ALPHA, gamma=GAMMA, q=Q):
    w, h = 1, 0
    for s in path:
        if s == "U":
            h += 1
        else:
            w = w * _se_weight(h, alpha, gamma, q)
            h -= 1
    return w


def dyck_moment(n, alpha=ALPHA, gamma=GAMMA, q=Q):
    """Weighted count of Dyck paths of length ``2n+2`` (transfer over heights)."""
    L = 2 * n + 2
    row = {0: 1}
    for _ in range(L):
        nxt = {}
        for h, w in row.items():
            if h + 1 <= L // 2:
                nxt[h + 1] = nxt.get(h + 1, 0) + w
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, 0) + w * _se_weight(h, alpha, gamma, q)
        row = nxt
    return row.get(0, 0)


# -- matchings ------------------------------------------------------------------


def perfect_matchings(m):
    """All perfect matchings of ``{1..m}`` as sorted tuples of pairs."""
    def rec(points):
        if not points:
            yield ()
            return
        a, rest = points[0], points[1:]
        for k, b in enumerate(rest):
            for tail in rec(rest[:k] + rest[k + 1:]):
                yield ((a, b),) + tail

    if m % 2:
        raise ValueError("a perfect matching needs an even ground set")
    return rec(tuple(range(1, m + 1)))


def matching_stats(M):
    """``(f-crossings, nested edges, crossed edges)``."""
    edges = [tuple(sorted(e)) for e in M]
    f = nested = crossed = 0
    for i, j in edges:
        cr = sum(1 for l, k in edges if i < l < j < k)
        ne = sum(1 for l, k in edges if l < i and j < k)
        f += cr if ne > 0 else cr // 2
        nested += cr < ne
        crossed += cr > ne
    return f, nested, crossed


def _matching_poly(n):
    acc = Counter(matching_stats(M) for M in perfect_matchings(2 * n + 2))
    return MultiPoly({(a, 0, g, 0, f, 0, 0): c for (f, a, g), c in acc.items()})


def _delta_free_poly(n, budget=None):
    return z_poly(n, budget=budget).subs(beta=1, delta=0, y=1)


def check_fcrossing_theorem(n, budget=None):
    """Matchings by (f-crossings, nested, crossed) against delta-free tableaux by (q, alpha, gamma)."""
    limit = 4 if budget is None else budget
    if n > limit:
        raise BudgetExceeded(f"n={n} exceeds the matching budget {limit}")
    lhs = _matching_poly(n)
    rhs = _delta_free_poly(n, budget=max(n, 6))
    return check(f"f-crossing equidistribution n={n}", lhs == rhs,
                 f"matchings {lhs} vs tableaux {rhs}")


def check_bijections(n_max=4, budget=None):
    """Counting and bijectivity checks of this module up to size ``n_max``."""
    reports = []
    for n in range(1, n_max + 1):
        t = count_staircase_trees(n)
        reports.append(check(f"t({n}) = {n - 1}!", t == factorial(n - 1) == brute_force_tree_count(n),
                             f"recurrence {t}, brute force {brute_force_tree_count(n)}"))
        forests = _ab_forests(n)
        reports.append(check(f"{n}! staircase forests", len(forests) == factorial(n), f"{len(forests)}"))
        perms = {forest_permutation(F) for F in forests}
        reports.append(check(f"forests <-> S_{n}", len(perms) == factorial(n)))
        cyc_ok = all(len(cycles_of(forest_permutation(F))) == len(F.components()) for F in forests)
        reports.append(check(f"components = cycles, n={n}", cyc_ok))
        images = Counter(phi(T) for T in enumerate_tableaux(n))
        ok = len(images) == 4 ** n * factorial(n) and max(images.values()) == 1
        reports.append(check(f"Phi bijective, n={n}", ok, f"{len(images)} images"))
    return CheckReport.combine(f"bijections n <= {n_max}", reports)
