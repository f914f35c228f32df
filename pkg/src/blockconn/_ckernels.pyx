# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled hot kernels; mirrors ``_pykernels`` function for function."""
cimport cython
from numpy cimport intp_t, uint8_t

NAME = "cython"


def row_is_zero(uint8_t[:, ::1] a, Py_ssize_t i, Py_ssize_t n):
    cdef Py_ssize_t c
    for c in range(n):
        if a[i, c]:
            return False
    return True


cdef inline Py_ssize_t _first(uint8_t[:, ::1] a, Py_ssize_t j, Py_ssize_t n) nogil:
    cdef Py_ssize_t c
    for c in range(n):
        if a[j, c]:
            return c
    return -1


def first_nonzero(uint8_t[:, ::1] a, Py_ssize_t j, Py_ssize_t n):
    return _first(a, j, n)


def first_nonzero_all(uint8_t[:, ::1] a, Py_ssize_t p, Py_ssize_t n, intp_t[::1] out):
    cdef Py_ssize_t j
    with nogil:
        for j in range(p, n):
            out[j - p] = _first(a, j, n)


def pivot(uint8_t[:, ::1] a, Py_ssize_t p, Py_ssize_t n, Py_ssize_t limit):
    # limit is only a hint for the numpy backend; the early exit below
    # already restricts every scan to columns left of the best so far
    cdef Py_ssize_t j, c, best_q = n, best_s = -1
    with nogil:
        for j in range(p, n):
            for c in range(best_q):
                if a[j, c]:
                    best_q = c
                    best_s = j
                    break
            if best_q == 0:
                break
    if best_s < 0:
        return -1, -1
    return best_s, best_q


def swap(uint8_t[:, ::1] a, intp_t[::1] label_at, intp_t[::1] position_of,
         Py_ssize_t x, Py_ssize_t y):
    cdef Py_ssize_t c, m = a.shape[0]
    cdef uint8_t t
    cdef intp_t lx, ly
    if x == y:
        return
    with nogil:
        for c in range(m):
            t = a[x, c]
            a[x, c] = a[y, c]
            a[y, c] = t
        for c in range(m):
            t = a[c, x]
            a[c, x] = a[c, y]
            a[c, y] = t
        lx = label_at[x]
        ly = label_at[y]
        label_at[x] = ly
        label_at[y] = lx
        position_of[ly] = x
        position_of[lx] = y


def cut_holds(uint8_t[:, ::1] a, Py_ssize_t i, Py_ssize_t n):
    cdef Py_ssize_t s, t
    for s in range(i + 1, n):
        if a[i, s]:
            return False
    for t in range(i + 1, n):
        for s in range(i + 1):
            if a[t, s]:
                return False
    return True
