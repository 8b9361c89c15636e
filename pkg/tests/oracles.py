"""Independent brute-force oracles used to pin expected values in tests.

These deliberately avoid the library's own formulas: conjugation goes
through an explicit cell set, hooks are counted by walking boxes, and
the classical sequences come from their recurrences.
"""

from functools import lru_cache


def cells(parts):
    return {(i, j) for i, row in enumerate(parts, start=1) for j in range(1, row + 1)}


def transpose_by_cells(parts):
    """Conjugate partition read off a transposed cell set."""
    flipped = {(j, i) for i, j in cells(parts)}
    rows = {}
    for i, _ in flipped:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def hooks_by_cells(parts):
    """All hook lengths, each counted by walking arm and leg cells."""
    boxes = cells(parts)
    out = []
    for i, j in boxes:
        arm = sum(1 for jj in range(j + 1, 10_000) if (i, jj) in boxes)
        leg = sum(1 for ii in range(i + 1, 10_000) if (ii, j) in boxes)
        out.append(arm + leg + 1)
    return sorted(out)


def catalan_by_recurrence(n):
    vals = [1]
    for m in range(n):
        vals.append(sum(vals[i] * vals[m - i] for i in range(m + 1)))
    return vals[n]


def motzkin_by_recurrence(n):
    vals = [1]
    for m in range(n):
        nxt = vals[m] + sum(vals[i] * vals[m - 1 - i] for i in range(m))
        vals.append(nxt)
    return vals[n]


@lru_cache(maxsize=None)
def partitions_brute(n, cap=None):
    """All partitions of n with parts at most cap, as tuples (naive recursion)."""
    cap = n if cap is None else cap
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in partitions_brute(n - first, first):
            out.append((first,) + rest)
    return tuple(out)
