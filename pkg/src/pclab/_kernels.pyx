# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: truncated convolution, unit inversion and the Euler
pentagonal recurrence (exact via GMP, or modulo a word-sized modulus)."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        int _mp_alloc
        int _mp_size
    ctypedef __mpz_struct mpz_t[1]
    ctypedef __mpz_struct* mpz_ptr
    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set(mpz_ptr, mpz_ptr)
    void mpz_set_ui(mpz_ptr, unsigned long)
    void mpz_add(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_sub(mpz_ptr, mpz_ptr, mpz_ptr)
    int mpz_set_str(mpz_ptr, const char *, int)
    size_t mpz_sizeinbase(mpz_ptr, int)
    char *mpz_get_str(char *, int, mpz_ptr)


def convolve(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t i, j, t, lim, la = min(len(a), n), nnz
    cdef list out = [0] * n
    cdef list bj = []
    cdef list bv = []
    for j in range(min(len(b), n)):
        if b[j]:
            bj.append(j)
            bv.append(b[j])
    nnz = len(bj)
    for i in range(la):
        x = a[i]
        if not x:
            continue
        lim = n - i
        for t in range(nnz):
            j = <Py_ssize_t>bj[t]
            if j >= lim:
                break
            out[i + j] = out[i + j] + x * bv[t]
    return out


def convolve_mod(list a, list b, Py_ssize_t n, modulus):
    if modulus >= (1 << 31):
        from pclab._pykernels import convolve_mod as slow
        return slow(a, b, n, modulus)
    cdef int64_t m = modulus
    cdef Py_ssize_t i, j, lim, la = min(len(a), n), lb = min(len(b), n)
    cdef int64_t *av = <int64_t *>malloc(max(la, 1) * sizeof(int64_t))
    cdef int64_t *bw = <int64_t *>malloc(max(lb, 1) * sizeof(int64_t))
    cdef int64_t *acc = <int64_t *>malloc(max(n, 1) * sizeof(int64_t))
    cdef int64_t x
    try:
        for i in range(la):
            av[i] = a[i] % modulus
        for j in range(lb):
            bw[j] = b[j] % modulus
        for i in range(n):
            acc[i] = 0
        for i in range(la):
            x = av[i]
            if x == 0:
                continue
            lim = min(lb, n - i)
            for j in range(lim):
                if bw[j]:
                    acc[i + j] = (acc[i + j] + x * bw[j]) % m
        return [acc[i] for i in range(n)]
    finally:
        free(av)
        free(bw)
        free(acc)


def inverse(list a, Py_ssize_t n):
    a0 = a[0]
    if a0 != 1 and a0 != -1:
        raise ValueError(f"constant term {a0} is not a unit")
    cdef Py_ssize_t m, t, k, nnz
    cdef list ks = []
    cdef list cs = []
    for k in range(1, min(len(a), n)):
        if a[k]:
            ks.append(k)
            cs.append(a[k])
    nnz = len(ks)
    cdef list out = [0] * n
    out[0] = a0
    for m in range(1, n):
        acc = 0
        for t in range(nnz):
            k = <Py_ssize_t>ks[t]
            if k > m:
                break
            acc = acc + cs[t] * out[m - k]
        out[m] = -a0 * acc
    return out


def inverse_mod(list a, Py_ssize_t n, modulus):
    if modulus >= (1 << 31):
        from pclab._pykernels import inverse_mod as slow
        return slow(a, n, modulus)
    cdef int64_t md = modulus
    cdef int64_t a0 = a[0] % modulus
    if a0 != 1 and a0 != md - 1:
        raise ValueError(f"constant term {a[0]} is not +1 or -1")
    cdef Py_ssize_t m, k, la = min(len(a), n)
    cdef int64_t *av = <int64_t *>malloc(max(la, 1) * sizeof(int64_t))
    cdef int64_t *out = <int64_t *>malloc(max(n, 1) * sizeof(int64_t))
    cdef int64_t acc
    try:
        for k in range(la):
            av[k] = a[k] % modulus
        out[0] = a0
        for m in range(1, n):
            acc = 0
            for k in range(1, min(m, la - 1) + 1):
                if av[k]:
                    acc = (acc + av[k] * out[m - k]) % md
            if a0 == 1:
                out[m] = (md - acc) % md
            else:
                out[m] = acc
        return [out[m] for m in range(n)]
    finally:
        free(av)
        free(out)


cdef object _mpz_to_int(mpz_ptr z, char *buf):
    mpz_get_str(buf, 16, z)
    return int(buf, 16)


def partitions(Py_ssize_t nmax, prefix=None):
    cdef Py_ssize_t n, k, g1, g2, start, i
    cdef __mpz_struct *p = <__mpz_struct *>malloc((nmax + 1) * sizeof(__mpz_struct))
    cdef mpz_t acc
    cdef char *buf = NULL
    cdef size_t width = 0, w
    if p == NULL:
        raise MemoryError()
    for n in range(nmax + 1):
        mpz_init(&p[n])
    mpz_init(acc)
    try:
        start = 1
        mpz_set_ui(&p[0], 1)
        if prefix:
            start = min(len(prefix), nmax + 1)
            for i in range(start):
                mpz_set_str(&p[i], format(prefix[i], "x").encode(), 16)
        for n in range(start, nmax + 1):
            mpz_set_ui(acc, 0)
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > n:
                    break
                g2 = g1 + k
                if k & 1:
                    mpz_add(acc, acc, &p[n - g1])
                    if g2 <= n:
                        mpz_add(acc, acc, &p[n - g2])
                else:
                    mpz_sub(acc, acc, &p[n - g1])
                    if g2 <= n:
                        mpz_sub(acc, acc, &p[n - g2])
                k += 1
            mpz_set(&p[n], acc)
        width = mpz_sizeinbase(&p[nmax], 16) + 2
        buf = <char *>malloc(width)
        out = [None] * (nmax + 1)
        for n in range(nmax + 1):
            out[n] = _mpz_to_int(&p[n], buf)
        return out
    finally:
        for n in range(nmax + 1):
            mpz_clear(&p[n])
        mpz_clear(acc)
        free(p)
        if buf != NULL:
            free(buf)


def partitions_mod(Py_ssize_t nmax, modulus):
    if modulus >= (1 << 62):
        raise ValueError("modulus must be below 2**62")
    cdef uint64_t m = modulus
    cdef cnp.ndarray[cnp.int64_t, ndim=1] arr = np.zeros(nmax + 1, dtype=np.int64)
    cdef int64_t *p = <int64_t *>arr.data
    cdef Py_ssize_t n, k, g1, g2
    cdef uint64_t pos, neg
    p[0] = 1 % m
    for n in range(1, nmax + 1):
        pos = 0
        neg = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            g2 = g1 + k
            if k & 1:
                pos += <uint64_t>p[n - g1]
                if g2 <= n:
                    pos += <uint64_t>p[n - g2]
                if pos >= m:
                    pos %= m
            else:
                neg += <uint64_t>p[n - g1]
                if g2 <= n:
                    neg += <uint64_t>p[n - g2]
                if neg >= m:
                    neg %= m
            k += 1
        p[n] = <int64_t>((pos + m - neg % m) % m)
    return arr


def two_color_mod(p, Py_ssize_t ell, Py_ssize_t nmax, modulus):
    """p_{1,ell}(0..nmax) modulo ``modulus``, given ``p`` reduced modulo it."""
    if modulus >= (1 << 62):
        raise ValueError("modulus must be below 2**62")
    cdef uint64_t m = modulus
    cdef cnp.ndarray[cnp.int64_t, ndim=1] src = np.ascontiguousarray(p[: nmax + 1], dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] arr = np.zeros(nmax + 1, dtype=np.int64)
    cdef int64_t *pv = <int64_t *>src.data
    cdef int64_t *a = <int64_t *>arr.data
    cdef Py_ssize_t n, k, g1, g2
    cdef uint64_t pos, neg
    for n in range(nmax + 1):
        pos = <uint64_t>pv[n]
        neg = 0
        k = 1
        while True:
            g1 = ell * (k * (3 * k - 1) // 2)
            if g1 > n:
                break
            g2 = g1 + ell * k
            if k & 1:
                pos += <uint64_t>a[n - g1]
                if g2 <= n:
                    pos += <uint64_t>a[n - g2]
                if pos >= m:
                    pos %= m
            else:
                neg += <uint64_t>a[n - g1]
                if g2 <= n:
                    neg += <uint64_t>a[n - g2]
                if neg >= m:
                    neg %= m
            k += 1
        a[n] = <int64_t>((pos % m + m - neg % m) % m)
    return arr
