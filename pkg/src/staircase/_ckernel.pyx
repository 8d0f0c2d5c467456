# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled tableau census; same walk and key layout as ``_kernel_py``."""

from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref, preincrement as inc

cdef enum:
    MAXN = 8
    MAXBOX = 36

ctypedef long long i64

cdef enum:
    ALPHA = 1
    BETA = 2
    GAMMA = 3
    DELTA = 4
    Q_EXP = 4
    U_EXP = 5


cdef struct Walk:
    int n
    int nbox
    int rows[MAXBOX]
    int cols[MAXBOX]
    int diag[MAXBOX]
    int top[MAXN + 2]
    int exps[6]
    int bits
    i64 type_filter   # -1: all types
    i64 leaves


cdef inline int blank_slot(int right, int below) noexcept nogil:
    if right == BETA:
        return U_EXP
    if right == DELTA:
        return Q_EXP
    if below == ALPHA or below == DELTA:
        return U_EXP
    return Q_EXP


cdef inline i64 leaf_key(Walk* w) noexcept nogil:
    cdef i64 key = w.bits
    cdef int s
    for s in range(6):
        key = (key << 5) | w.exps[s]
    return key


cdef void rec(Walk* w, int k, int right, int closed,
              unordered_map[i64, i64]* out) noexcept nogil:
    cdef int i, j, lab, below, slot, saved, black, bit
    cdef i64* cell
    if k == w.nbox:
        w.leaves += 1
        if out != NULL:
            cell = &deref(out)[leaf_key(w)]
            cell[0] += 1
        return
    i = w.rows[k]
    j = w.cols[k]
    if w.diag[k]:
        bit = 1 << (w.n - i)
        for lab in range(1, 5):
            black = lab == ALPHA or lab == DELTA
            if w.type_filter >= 0 and ((w.type_filter & bit) != 0) != black:
                continue
            saved = w.top[j]
            w.top[j] = lab
            w.exps[lab - 1] += 1
            if black:
                w.bits |= bit
            rec(w, k + 1, lab, lab == BETA or lab == DELTA, out)
            if black:
                w.bits &= ~bit
            w.exps[lab - 1] -= 1
            w.top[j] = saved
        return
    below = w.top[j]
    slot = blank_slot(right, below)
    w.exps[slot] += 1
    rec(w, k + 1, right, closed, out)
    w.exps[slot] -= 1
    if closed or below == ALPHA or below == GAMMA:
        return
    for lab in range(1, 5):
        w.top[j] = lab
        w.exps[lab - 1] += 1
        rec(w, k + 1, lab, lab == BETA or lab == DELTA, out)
        w.exps[lab - 1] -= 1
        w.top[j] = below


cdef void setup(Walk* w, int n, i64 type_filter):
    cdef int i, j, c0, k = 0
    w.n = n
    for i in range(n, 0, -1):
        c0 = n + 1 - i
        w.rows[k] = i; w.cols[k] = c0; w.diag[k] = 1
        k += 1
        for j in range(c0 - 1, 0, -1):
            w.rows[k] = i; w.cols[k] = j; w.diag[k] = 0
            k += 1
    w.nbox = k
    for i in range(MAXN + 2):
        w.top[i] = 0
    for i in range(6):
        w.exps[i] = 0
    w.bits = 0
    w.type_filter = type_filter
    w.leaves = 0


def census(int n, type_bits=None):
    """Map ``(type_bits, ea, eb, eg, ed, eq, eu) -> count`` over all tableaux."""
    if n < 0 or n > MAXN:
        raise ValueError(f"compiled census supports 0 <= n <= {MAXN}")
    cdef Walk w
    cdef unordered_map[i64, i64] out
    cdef i64 filt = -1 if type_bits is None else type_bits
    setup(&w, n, filt)
    with nogil:
        rec(&w, 0, 0, 0, &out)
    result = {}
    cdef unordered_map[i64, i64].iterator it = out.begin()
    cdef i64 key
    while it != out.end():
        key = deref(it).first
        exps = []
        for _ in range(6):
            exps.append(key & 31)
            key >>= 5
        exps.reverse()
        result[(int(key),) + tuple(exps)] = deref(it).second
        inc(it)
    return result


def count(int n):
    """Number of staircase tableaux of size ``n``, by explicit enumeration."""
    if n < 0 or n > MAXN:
        raise ValueError(f"compiled census supports 0 <= n <= {MAXN}")
    cdef Walk w
    setup(&w, n, -1)
    with nogil:
        rec(&w, 0, 0, 0, NULL)
    return w.leaves
