"""Pure-Python tableau census; the reference twin of ``_ckernel.pyx``.

Both kernels walk every staircase tableau of size ``n`` depth-first, rows
bottom to top and each row right to left, so every blank box already knows
its nearest labeled neighbour to the right (same row) and below (the current
top label of its column).  Leaves are aggregated by
``(type_bits, e_alpha, e_beta, e_gamma, e_delta, e_q, e_u)``.

Label codes: 1 alpha, 2 beta, 3 gamma, 4 delta.  ``type_bits`` has bit
``n - i`` set when the diagonal box of row ``i`` holds alpha or delta, so the
first letter of the type word is the most significant bit.
"""

from collections import Counter

ALPHA, BETA, GAMMA, DELTA = 1, 2, 3, 4
Q_EXP, U_EXP = 4, 5


def box_order(n):
    """Boxes as (row, col, is_diagonal) in the order the kernels visit them."""
    order = []
    for i in range(n, 0, -1):
        c0 = n + 1 - i
        order.append((i, c0, True))
        for j in range(c0 - 1, 0, -1):
            order.append((i, j, False))
    return order


def blank_weight(right, below):
    """Exponent slot (Q_EXP or U_EXP) for a blank box."""
    if right == BETA:
        return U_EXP
    if right == DELTA:
        return Q_EXP
    if below == ALPHA or below == DELTA:
        return U_EXP
    return Q_EXP


def census(n, type_bits=None):
    """Map ``(type_bits, ea, eb, eg, ed, eq, eu) -> count`` over all tableaux.

    With ``type_bits`` given, only tableaux of that type are visited.
    """
    order = box_order(n)
    nbox = len(order)
    top = [0] * (n + 2)
    exps = [0] * 6
    out = Counter()
    # row state: nearest label to the right, and whether a beta/delta closed the row
    state = {"right": 0, "closed": False, "bits": 0}

    def rec(k):
        if k == nbox:
            out[(state["bits"],) + tuple(exps)] += 1
            return
        i, j, diag = order[k]
        if diag:
            bit = 1 << (n - i)
            for lab in (ALPHA, BETA, GAMMA, DELTA):
                black = lab == ALPHA or lab == DELTA
                if type_bits is not None and bool(type_bits & bit) != black:
                    continue
                saved = (top[j], state["right"], state["closed"], state["bits"])
                top[j] = lab
                exps[lab - 1] += 1
                state["right"] = lab
                state["closed"] = lab == BETA or lab == DELTA
                if black:
                    state["bits"] |= bit
                rec(k + 1)
                exps[lab - 1] -= 1
                top[j], state["right"], state["closed"], state["bits"] = saved
            return
        below = top[j]
        slot = blank_weight(state["right"], below)
        exps[slot] += 1
        rec(k + 1)
        exps[slot] -= 1
        if state["closed"] or below == ALPHA or below == GAMMA:
            return
        for lab in (ALPHA, BETA, GAMMA, DELTA):
            saved = (top[j], state["right"], state["closed"])
            top[j] = lab
            exps[lab - 1] += 1
            state["right"] = lab
            state["closed"] = lab == BETA or lab == DELTA
            rec(k + 1)
            exps[lab - 1] -= 1
            top[j], state["right"], state["closed"] = saved

    rec(0)
    return dict(out)


def count(n):
    """Number of staircase tableaux of size ``n``, by explicit enumeration."""
    order = box_order(n)
    nbox = len(order)
    top = [0] * (n + 2)

    def rec(k, right, closed):
        if k == nbox:
            return 1
        i, j, diag = order[k]
        if diag:
            total = 0
            for lab in (ALPHA, BETA, GAMMA, DELTA):
                saved = top[j]
                top[j] = lab
                total += rec(k + 1, lab, lab == BETA or lab == DELTA)
                top[j] = saved
            return total
        total = rec(k + 1, right, closed)
        below = top[j]
        if closed or below == ALPHA or below == GAMMA:
            return total
        for lab in (ALPHA, BETA, GAMMA, DELTA):
            top[j] = lab
            total += rec(k + 1, lab, lab == BETA or lab == DELTA)
            top[j] = below
        return total

    return rec(0, 0, False)
