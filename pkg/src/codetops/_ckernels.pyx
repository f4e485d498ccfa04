# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan elimination over GF(q) on int64 code arrays."""

import numpy as np


cdef long _inv_mod(long a, long p):
    cdef long t = 0, newt = 1, r = p, newr = a, quo, tmp
    while newr != 0:
        quo = r // newr
        tmp = t - quo * newt
        t = newt
        newt = tmp
        tmp = r - quo * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


_DUMMY2 = np.zeros((1, 1), dtype=np.int64)
_DUMMY1 = np.zeros(1, dtype=np.int64)


def rref_inplace(A, spec):
    """Same contract as the pure-Python kernel: in-place RREF, returns (rank, pivots)."""
    if spec.prime_mode:
        return _rref(A, spec.p, 1, _DUMMY2, _DUMMY2, _DUMMY1, _DUMMY1)
    return _rref(A, spec.p, 0, spec.add_table, spec.mul_table, spec.neg_table, spec.inv_table)


cdef tuple _rref(long[:, ::1] A, long p, int prime_mode,
                 const long[:, ::1] add, const long[:, ::1] mul,
                 const long[::1] neg, const long[::1] inv):
    cdef Py_ssize_t rows = A.shape[0], cols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long lead, f, tmp, il
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        lead = A[r, c]
        if lead != 1:
            if prime_mode:
                il = _inv_mod(lead, p)
                for j in range(c, cols):
                    A[r, j] = (A[r, j] * il) % p
            else:
                il = inv[lead]
                for j in range(c, cols):
                    A[r, j] = mul[il, A[r, j]]
        for i in range(rows):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            if prime_mode:
                for j in range(c, cols):
                    A[i, j] = (A[i, j] - f * A[r, j]) % p
                    if A[i, j] < 0:
                        A[i, j] += p
            else:
                f = neg[f]
                for j in range(c, cols):
                    A[i, j] = add[A[i, j], mul[f, A[r, j]]]
        pivots.append(c)
        r += 1
    return r, pivots
