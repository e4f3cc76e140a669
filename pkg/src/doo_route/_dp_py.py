"""Pure-Python unit-cost Levenshtein kernels (fallback backend).

Op codes: 0 match, 1 substitute, 2 delete (from ``a``), 3 insert (from
``b``).  Each op is ``(code, i, j)`` with -1 for the absent side.
"""
import numpy as np

MATCH, SUB, DELETE, INSERT = 0, 1, 2, 3


def distance(a, b):
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        ai = a[i - 1]
        cur = [i] + [0] * m
        for j in range(1, m + 1):
            best = prev[j - 1] + (ai != b[j - 1])
            d = prev[j] + 1
            if d < best:
                best = d
            d = cur[j - 1] + 1
            if d < best:
                best = d
            cur[j] = best
        prev = cur
    return prev[m]


def _fill(a, b):
    n, m = len(a), len(b)
    T = [[0] * (m + 1) for _ in range(n + 1)]
    for j in range(m + 1):
        T[0][j] = j
    for i in range(1, n + 1):
        row, up = T[i], T[i - 1]
        row[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            best = up[j - 1] + (ai != b[j - 1])
            d = up[j] + 1
            if d < best:
                best = d
            d = row[j - 1] + 1
            if d < best:
                best = d
            row[j] = best
    return T


def table(a, b):
    return np.array(_fill(a, b), dtype=np.int32)


def _trace(T, a, b):
    i, j = len(a), len(b)
    ops = []
    while i > 0 or j > 0:
        t = T[i][j]
        if i > 0 and j > 0 and a[i - 1] == b[j - 1] and t == T[i - 1][j - 1]:
            i -= 1
            j -= 1
            ops.append((MATCH, i, j))
        elif i > 0 and j > 0 and t == T[i - 1][j - 1] + 1:
            i -= 1
            j -= 1
            ops.append((SUB, i, j))
        elif i > 0 and t == T[i - 1][j] + 1:
            i -= 1
            ops.append((DELETE, i, -1))
        else:
            j -= 1
            ops.append((INSERT, -1, j))
    ops.reverse()
    return ops


def trace(tab, a, b):
    return _trace(tab.tolist() if hasattr(tab, "tolist") else tab, a, b)


def align(a, b):
    T = _fill(a, b)
    return T[len(a)][len(b)], _trace(T, a, b)
