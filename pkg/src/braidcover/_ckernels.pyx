# cython: boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels; same contracts as ``_pykernels``.

``apply_twists`` runs on a machine-word copy of the matrix and drops back to
Python ints the moment any addition would overflow, so results stay exact.
"""

from libc.stdlib cimport malloc, free


cdef extern from *:
    bint __builtin_saddll_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_ssubll_overflow(long long a, long long b, long long *res) nogil


cdef long long _LL_MAX = 9223372036854775807
cdef long long _LL_MIN = -9223372036854775807 - 1


cdef bint _fits(object x):
    return _LL_MIN <= x <= _LL_MAX


cdef void _object_twists(list rows, object letters, Py_ssize_t start, Py_ssize_t start_row):
    cdef Py_ssize_t rank = len(rows)
    cdef Py_ssize_t idx = 0, j, r, first
    cdef long letter
    cdef bint left, right, neg
    cdef list row
    for letter in letters:
        if idx < start:
            idx += 1
            continue
        if letter > 0:
            j = letter - 1
            neg = False
        else:
            j = -letter - 1
            neg = True
        left = j > 0
        right = j < rank - 1
        first = start_row if idx == start else 0
        for r in range(first, rank):
            row = <list>rows[r]
            x = row[j]
            if not x:
                continue
            if neg:
                x = -x
            if left:
                row[j - 1] = row[j - 1] + x
            if right:
                row[j + 1] = row[j + 1] - x
        idx += 1


def apply_twists(list rows, letters):
    cdef Py_ssize_t rank = len(rows)
    cdef Py_ssize_t n_letters, idx, j, r, c, i
    cdef list row
    cdef long long *m
    cdef long long x, lo, hi
    cdef long letter
    cdef bint neg, left, right, overflow = False
    cdef list seq = list(letters)
    n_letters = len(seq)
    if rank == 0 or n_letters == 0:
        return rows
    for r in range(rank):
        for c in range(rank):
            if not _fits(rows[r][c]):
                _object_twists(rows, seq, 0, 0)
                return rows
    m = <long long *>malloc(rank * rank * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for r in range(rank):
            for c in range(rank):
                m[r * rank + c] = rows[r][c]
        idx = 0
        r = 0
        while idx < n_letters:
            letter = seq[idx]
            if letter > 0:
                j = letter - 1
                neg = False
            else:
                j = -letter - 1
                neg = True
            left = j > 0
            right = j < rank - 1
            r = 0
            while r < rank:
                x = m[r * rank + j]
                if x != 0:
                    lo = m[r * rank + j - 1] if left else 0
                    hi = m[r * rank + j + 1] if right else 0
                    if neg:
                        if left and __builtin_ssubll_overflow(lo, x, &lo):
                            overflow = True
                        if right and __builtin_saddll_overflow(hi, x, &hi):
                            overflow = True
                    else:
                        if left and __builtin_saddll_overflow(lo, x, &lo):
                            overflow = True
                        if right and __builtin_ssubll_overflow(hi, x, &hi):
                            overflow = True
                    if overflow:
                        break
                    if left:
                        m[r * rank + j - 1] = lo
                    if right:
                        m[r * rank + j + 1] = hi
                r += 1
            if overflow:
                break
            idx += 1
        for i in range(rank):
            row = rows[i]
            for c in range(rank):
                row[c] = m[i * rank + c]
    finally:
        free(m)
    if overflow:
        _object_twists(rows, seq, idx, r)
    return rows


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list a, row_i, row_k
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = <list>a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def berkowitz(rows, zero, one):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t r, k, i, j, c, lo, hi
    cdef list coeffs = [one]
    cdef list row_part, vec, q, new_vec, new_coeffs, row_i
    cdef list mat = [list(row) for row in rows]
    for r in range(n):
        row_part = (<list>mat[r])[:r]
        vec = [mat[i][r] for i in range(r)]
        q = [one, -mat[r][r]]
        for k in range(r):
            acc = zero
            for c in range(r):
                acc = acc + row_part[c] * vec[c]
            q.append(-acc)
            if k < r - 1:
                new_vec = []
                for i in range(r):
                    row_i = <list>mat[i]
                    acc = zero
                    for c in range(r):
                        acc = acc + row_i[c] * vec[c]
                    new_vec.append(acc)
                vec = new_vec
        new_coeffs = []
        for i in range(r + 2):
            acc = zero
            lo = i - r - 1
            if lo < 0:
                lo = 0
            hi = i if i < r else r
            for j in range(lo, hi + 1):
                acc = acc + q[i - j] * coeffs[j]
            new_coeffs.append(acc)
        coeffs = new_coeffs
    return coeffs


def poly_mul(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef list ca, cb, out
    if la == 0 or lb == 0:
        return []
    ca = list(a)
    cb = list(b)
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = ca[i]
        if x:
            for j in range(lb):
                out[i + j] += x * cb[j]
    return out
