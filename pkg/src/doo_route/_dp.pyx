# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled unit-cost Levenshtein kernels; same API as ``_dp_py``."""
from libc.stdlib cimport malloc, free
import numpy as np

cdef enum:
    MATCH = 0
    SUB = 1
    DELETE = 2
    INSERT = 3


cdef long* _load(seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*>malloc((n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


cdef void _fill(const long* a, Py_ssize_t n, const long* b, Py_ssize_t m, int* T) nogil:
    cdef Py_ssize_t i, j, w = m + 1
    cdef int best, d
    cdef long ai
    for j in range(w):
        T[j] = <int>j
    for i in range(1, n + 1):
        T[i * w] = <int>i
        ai = a[i - 1]
        for j in range(1, w):
            best = T[(i - 1) * w + j - 1] + (ai != b[j - 1])
            d = T[(i - 1) * w + j] + 1
            if d < best:
                best = d
            d = T[i * w + j - 1] + 1
            if d < best:
                best = d
            T[i * w + j] = best


cdef list _trace(const long* a, Py_ssize_t n, const long* b, Py_ssize_t m, const int* T):
    cdef Py_ssize_t i = n, j = m, w = m + 1
    cdef int t
    ops = []
    while i > 0 or j > 0:
        t = T[i * w + j]
        if i > 0 and j > 0 and a[i - 1] == b[j - 1] and t == T[(i - 1) * w + j - 1]:
            i -= 1
            j -= 1
            ops.append((MATCH, i, j))
        elif i > 0 and j > 0 and t == T[(i - 1) * w + j - 1] + 1:
            i -= 1
            j -= 1
            ops.append((SUB, i, j))
        elif i > 0 and t == T[(i - 1) * w + j] + 1:
            i -= 1
            ops.append((DELETE, i, -1))
        else:
            j -= 1
            ops.append((INSERT, -1, j))
    ops.reverse()
    return ops


def distance(a, b):
    cdef Py_ssize_t n = len(a), m = len(b), i, j
    if n == 0:
        return m
    if m == 0:
        return n
    cdef long* pa = _load(a, n)
    cdef long* pb = NULL
    cdef int* row = NULL
    cdef int diag, up, best, d
    cdef long ai
    try:
        pb = _load(b, m)
        row = <int*>malloc((m + 1) * sizeof(int))
        if row == NULL:
            raise MemoryError()
        for j in range(m + 1):
            row[j] = <int>j
        for i in range(1, n + 1):
            diag = row[0]
            row[0] = <int>i
            ai = pa[i - 1]
            for j in range(1, m + 1):
                up = row[j]
                best = diag + (ai != pb[j - 1])
                d = up + 1
                if d < best:
                    best = d
                d = row[j - 1] + 1
                if d < best:
                    best = d
                row[j] = best
                diag = up
        return row[m]
    finally:
        free(pa)
        free(pb)
        free(row)


def table(a, b):
    cdef Py_ssize_t n = len(a), m = len(b)
    out = np.empty((n + 1, m + 1), dtype=np.int32)
    cdef int[:, ::1] view = out
    cdef long* pa = _load(a, n)
    cdef long* pb = NULL
    try:
        pb = _load(b, m)
        _fill(pa, n, pb, m, &view[0, 0])
    finally:
        free(pa)
        free(pb)
    return out


def trace(tab, a, b):
    cdef Py_ssize_t n = len(a), m = len(b)
    cdef int[:, ::1] view = np.ascontiguousarray(tab, dtype=np.int32)
    cdef long* pa = _load(a, n)
    cdef long* pb = NULL
    try:
        pb = _load(b, m)
        return _trace(pa, n, pb, m, &view[0, 0])
    finally:
        free(pa)
        free(pb)


def align(a, b):
    cdef Py_ssize_t n = len(a), m = len(b)
    cdef long* pa = _load(a, n)
    cdef long* pb = NULL
    cdef int* T = NULL
    try:
        pb = _load(b, m)
        T = <int*>malloc((n + 1) * (m + 1) * sizeof(int))
        if T == NULL:
            raise MemoryError()
        _fill(pa, n, pb, m, T)
        return T[n * (m + 1) + m], _trace(pa, n, pb, m, T)
    finally:
        free(pa)
        free(pb)
        free(T)
