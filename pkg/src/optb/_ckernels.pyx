# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; see ``_pykernels`` for the reference semantics.

Arithmetic is int64 with explicit overflow checks.  Any overflow raises
OverflowError so the caller can redo the computation exactly.
"""

from libc.stdint cimport int64_t, INT64_MIN

cdef extern from *:
    """
    #include <stdint.h>
    /* out = x + y * k, nonzero on overflow */
    static inline int axpy_ovf(int64_t x, int64_t y, int64_t k, int64_t *out) {
        int64_t t;
        if (__builtin_mul_overflow(y, k, &t)) return 1;
        return __builtin_add_overflow(x, t, out);
    }
    /* out = x - y * k, nonzero on overflow */
    static inline int axmy_ovf(int64_t x, int64_t y, int64_t k, int64_t *out) {
        int64_t t;
        if (__builtin_mul_overflow(y, k, &t)) return 1;
        return __builtin_sub_overflow(x, t, out);
    }
    """
    int axpy_ovf(int64_t x, int64_t y, int64_t k, int64_t *out) nogil
    int axmy_ovf(int64_t x, int64_t y, int64_t k, int64_t *out) nogil


def word_matrix(codes, exps):
    cdef Py_ssize_t n = len(codes), i
    cdef int64_t a = 1, b = 0, c = 0, d = 1, k
    cdef int g
    if len(exps) != n:
        raise ValueError("codes and exps differ in length")
    for i in range(n):
        g = codes[i]
        k = exps[i]  # OverflowError for exponents beyond int64
        if g == 0:
            if axpy_ovf(b, a, k, &b) or axpy_ovf(d, c, k, &d):
                raise OverflowError("int64 overflow in word_matrix")
        elif g == 1:
            if axmy_ovf(a, b, k, &a) or axmy_ovf(c, d, k, &c):
                raise OverflowError("int64 overflow in word_matrix")
        elif g == 3:
            if k & 1:
                if a == INT64_MIN or b == INT64_MIN or c == INT64_MIN or d == INT64_MIN:
                    raise OverflowError("int64 overflow in word_matrix")
                a = -a
                b = -b
                c = -c
                d = -d
        elif g != 2:
            raise ValueError(f"unknown generator code {g}")
    return a, b, c, d


def gof_hits(long long m):
    cdef long long p, q, v
    if m > 2000000000:
        raise OverflowError("m too large for exhaustive search")
    hits = []
    for q in range(1, m + 1):
        for p in range(1, m + 1):
            v = 2 * p * q + p + q
            if v == m and p > 1 and q > 1:
                hits.append((2 * q + 1, 1, p, q))
            elif v + 1 == m:
                hits.append((2 * q + 1, 2, p, q))
    return hits
