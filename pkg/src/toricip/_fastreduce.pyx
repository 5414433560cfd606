# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: language_level=3
"""Compiled monomial reduction kernel.

Same contract as the pure module: first-match scan over the reducer table,
restart after every rewrite. Callers guarantee that every intermediate
coordinate fits in 64 bits (the grading bound is checked before dispatch).
"""

from cpython cimport array
import array as _array

IMPLEMENTATION = "cython"


def reduce_monomial(u, const long long[:] leads, const long long[:] tails,
                    Py_ssize_t m, Py_ssize_t n):
    """Reduce exponent vector u by the flat reducer table."""
    cdef array.array out_arr = _array.array('q', u)
    cdef long long[:] out = out_arr
    cdef Py_ssize_t k = 0, i, base
    cdef bint fits
    while k < m:
        base = k * n
        fits = True
        for i in range(n):
            if leads[base + i] > out[i]:
                fits = False
                break
        if fits:
            for i in range(n):
                out[i] += tails[base + i] - leads[base + i]
            k = 0
        else:
            k += 1
    return tuple(out_arr)
