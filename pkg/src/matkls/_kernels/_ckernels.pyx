# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; mirrors ``_pykernels`` exactly."""

from libc.stdint cimport uint32_t, int64_t
from libc.stdlib cimport malloc, free


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef inline int _popcount(uint32_t x) nogil:
    return __builtin_popcount(x)


cdef uint32_t* _as_masks(object seq, Py_ssize_t* length) except NULL:
    cdef Py_ssize_t m = len(seq), i
    cdef uint32_t* buf = <uint32_t*> malloc((m if m > 0 else 1) * sizeof(uint32_t))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = <uint32_t> seq[i]
    length[0] = m
    return buf


def rank_table(int n, bases):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef Py_ssize_t nb, i
    cdef uint32_t* bs = _as_masks(bases, &nb)
    indep_obj = bytearray(size)
    ranks_obj = bytearray(size)
    cdef unsigned char[::1] indep = indep_obj
    cdef unsigned char[::1] ranks = ranks_obj
    cdef uint32_t full = <uint32_t> (size - 1)
    cdef uint32_t s, fr, low, rest
    cdef int best, v
    cdef Py_ssize_t k
    try:
        with nogil:
            for i in range(nb):
                indep[bs[i]] = 1
            k = size - 1
            while k >= 0:
                s = <uint32_t> k
                if not indep[s]:
                    fr = ~s & full
                    while fr:
                        low = fr & (~fr + 1)
                        if indep[s | low]:
                            indep[s] = 1
                            break
                        fr ^= low
                k -= 1
            for k in range(1, size):
                s = <uint32_t> k
                if indep[s]:
                    ranks[s] = _popcount(s)
                    continue
                best = 0
                rest = s
                while rest:
                    low = rest & (~rest + 1)
                    v = ranks[s ^ low]
                    if v > best:
                        best = v
                    rest ^= low
                ranks[s] = best
    finally:
        free(bs)
    return ranks_obj


def max_intersection(bases, mask):
    cdef Py_ssize_t nb, i
    cdef uint32_t* bs = _as_masks(bases, &nb)
    cdef uint32_t m = <uint32_t> mask
    cdef int best = 0, c
    with nogil:
        for i in range(nb):
            c = _popcount(bs[i] & m)
            if c > best:
                best = c
    free(bs)
    return best


def tutte_counts(ranks, int n, int r):
    cdef const unsigned char[::1] rk = ranks
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef Py_ssize_t cols = n - r + 1
    cdef int64_t* acc = <int64_t*> malloc((r + 1) * cols * sizeof(int64_t))
    if acc == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    cdef int v
    with nogil:
        for k in range((r + 1) * cols):
            acc[k] = 0
        for k in range(size):
            v = rk[k]
            acc[(r - v) * cols + (_popcount(<uint32_t> k) - v)] += 1
    out = [[acc[a * cols + b] for b in range(cols)] for a in range(r + 1)]
    free(acc)
    return out


def containment_lists(masks):
    cdef Py_ssize_t m, i, j
    cdef uint32_t* ms = _as_masks(masks, &m)
    cdef uint32_t a
    out = []
    try:
        for i in range(m):
            a = ms[i]
            row = []
            for j in range(m):
                if a & ~ms[j] == 0:
                    row.append(j)
            out.append(row)
    finally:
        free(ms)
    return out
