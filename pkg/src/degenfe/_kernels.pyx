# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contract as ``_kernels_py``."""

BACKEND = "cython"


def int_poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out
    cdef object ai
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] += ai * b[j]
    return out


def int_taylor_shift(list c, object s):
    cdef list out = list(c)
    cdef Py_ssize_t n = len(out), i, j
    if s == 0:
        return out
    for i in range(n - 1):
        j = n - 2
        while j >= i:
            out[j] += s * out[j + 1]
            j -= 1
    return out


def int_horner(list c, object s, object d):
    cdef object acc = 0, dpow = 1
    cdef Py_ssize_t i = len(c) - 1
    while i >= 0:
        acc = acc * s + c[i] * dpow
        dpow *= d
        i -= 1
    return acc


def int_binomial_convolve(list a, list b, list binom_rows):
    cdef Py_ssize_t n = min(len(a), len(b)), m, k
    cdef list out = [0] * n
    cdef list row
    cdef object acc
    for m in range(n):
        row = binom_rows[m]
        acc = 0
        for k in range(m + 1):
            acc += row[k] * a[k] * b[m - k]
        out[m] = acc
    return out
