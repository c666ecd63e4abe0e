# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled coefficient kernels (see ``incpoly._purepy`` for the reference)."""

from libc.stdlib cimport malloc, free

cdef long long _LIMIT = (1 << 62)


cdef bint _fits(list a, list b):
    # int64 fast path is safe when max|a| * max|b| * min(len) stays below 2**62
    cdef Py_ssize_t bits = 0
    ma = 0
    mb = 0
    for c in a:
        if c > ma:
            ma = c
        elif -c > ma:
            ma = -c
    for c in b:
        if c > mb:
            mb = c
        elif -c > mb:
            mb = -c
    bits = (<object>ma).bit_length() + (<object>mb).bit_length() \
        + (<object>min(len(a), len(b))).bit_length()
    return bits <= 62


cdef list _convolve_i64(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), n = na + nb - 1, i, j
    cdef long long *pa = <long long *> malloc(na * sizeof(long long))
    cdef long long *pb = <long long *> malloc(nb * sizeof(long long))
    cdef long long *po = <long long *> malloc(n * sizeof(long long))
    cdef long long bj
    if pa == NULL or pb == NULL or po == NULL:
        free(pa); free(pb); free(po)
        raise MemoryError()
    try:
        for i in range(na):
            pa[i] = a[i]
        for j in range(nb):
            pb[j] = b[j]
        for i in range(n):
            po[i] = 0
        for j in range(nb):
            bj = pb[j]
            if bj != 0:
                for i in range(na):
                    po[i + j] += pa[i] * bj
        return [po[i] for i in range(n)]
    finally:
        free(pa)
        free(pb)
        free(po)


cdef list _convolve_obj(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out = [0] * (na + nb - 1)
    for j in range(nb):
        bj = b[j]
        if bj:
            for i in range(na):
                out[i + j] = out[i + j] + a[i] * bj
    return out


def convolve(a, b):
    """Return the coefficient list of the product of two coefficient sequences."""
    cdef list la = list(a)
    cdef list lb = list(b)
    if not la or not lb:
        return []
    if _fits(la, lb):
        return _convolve_i64(la, lb)
    return _convolve_obj(la, lb)


def horner(coeffs, v):
    cdef list c = list(coeffs)
    cdef Py_ssize_t i
    acc = 0
    for i in range(len(c) - 1, -1, -1):
        acc = acc * v + c[i]
    return acc
