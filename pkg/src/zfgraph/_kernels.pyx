# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; results match ``_kernels_py`` exactly."""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy
from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline int _load(adj, int n, uint64_t* rows) except -1:
    cdef int v
    if n < 0 or n > MAXN:
        raise ValueError("order must lie in [0, 64]")
    for v in range(n):
        rows[v] = <uint64_t>adj[v]
    return 0


cdef inline uint64_t _derived(const uint64_t* adj, uint64_t black, int max_white) nogil:
    cdef bint changed = True
    cdef uint64_t b, white
    cdef int v
    while changed:
        changed = False
        b = black
        while b:
            v = __builtin_ctzll(b)
            b &= b - 1
            white = adj[v] & ~black
            if white and __builtin_popcountll(white) <= max_white:
                black |= white
                changed = True
    return black


def derived_set(adj, int n, black, int max_white=1):
    cdef uint64_t rows[MAXN]
    _load(adj, n, rows)
    return _derived(rows, <uint64_t>black, max_white)


def first_forcing_subset(adj, int n, int k, int max_white=1):
    cdef uint64_t rows[MAXN]
    cdef int idx[MAXN]
    cdef int i, j
    cdef uint64_t mask, full
    cdef long long tested = 0
    _load(adj, n, rows)
    if k < 0 or k > n:
        return -1, 0
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for i in range(k):
        idx[i] = i
    with nogil:
        while True:
            mask = 0
            for i in range(k):
                mask |= <uint64_t>1 << idx[i]
            tested += 1
            if _derived(rows, mask, max_white) == full:
                break
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                mask = 0
                tested = -tested
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    if tested < 0:
        return -1, -tested
    return mask, tested


cdef void _clique(const uint64_t* adj, int size, uint64_t cand, int* best) nogil:
    cdef int v
    if not cand:
        if size > best[0]:
            best[0] = size
        return
    while cand:
        if size + __builtin_popcountll(cand) <= best[0]:
            return
        v = __builtin_ctzll(cand)
        cand &= cand - 1
        _clique(adj, size + 1, cand & adj[v], best)


def max_clique(adj, int n):
    cdef uint64_t rows[MAXN]
    cdef int best = 0
    _load(adj, n, rows)
    if n == 0:
        return 0
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    with nogil:
        _clique(rows, 0, full, &best)
    return best


# -- induced path cover -----------------------------------------------------

cdef struct PathCover:
    const uint64_t* adj
    int n
    int best
    int stack_len[MAXN]
    int stack_seq[MAXN][MAXN]
    int best_len[MAXN]
    int best_seq[MAXN][MAXN]


# A path under construction lives in seq[lo:hi] of a 2*MAXN buffer; v is at index MAXN.

cdef void _cover(PathCover* st, uint64_t uncovered, int count) nogil:
    cdef int seq[2 * MAXN]
    cdef int v, i
    if not uncovered:
        if count < st.best:
            st.best = count
            for i in range(count):
                st.best_len[i] = st.stack_len[i]
                memcpy(st.best_seq[i], st.stack_seq[i], st.stack_len[i] * sizeof(int))
        return
    if count + 1 >= st.best:
        return
    v = __builtin_ctzll(uncovered)
    seq[MAXN] = v
    _grow_right(st, uncovered, count, seq, MAXN, MAXN + 1, <uint64_t>1 << v)


cdef void _commit(PathCover* st, uint64_t uncovered, int count, int* seq, int lo, int hi,
                  uint64_t pmask) nogil:
    st.stack_len[count] = hi - lo
    memcpy(st.stack_seq[count], &seq[lo], (hi - lo) * sizeof(int))
    _cover(st, uncovered & ~pmask, count + 1)


cdef void _grow_right(PathCover* st, uint64_t uncovered, int count, int* seq, int lo, int hi,
                      uint64_t pmask) nogil:
    cdef int end = seq[hi - 1]
    cdef uint64_t ext = st.adj[end] & uncovered & ~pmask
    cdef uint64_t endbit = <uint64_t>1 << end
    cdef int w
    while ext:
        w = __builtin_ctzll(ext)
        ext &= ext - 1
        if (st.adj[w] & pmask) == endbit:
            seq[hi] = w
            _grow_right(st, uncovered, count, seq, lo, hi + 1, pmask | (<uint64_t>1 << w))
        if count + 1 >= st.best:
            return
    if hi - lo == 1:
        _commit(st, uncovered, count, seq, lo, hi, pmask)
    else:
        _grow_left(st, uncovered, count, seq, lo, hi, pmask)


cdef void _grow_left(PathCover* st, uint64_t uncovered, int count, int* seq, int lo, int hi,
                     uint64_t pmask) nogil:
    cdef int end = seq[lo]
    cdef uint64_t ext = st.adj[end] & uncovered & ~pmask
    cdef uint64_t endbit = <uint64_t>1 << end
    cdef int right_nb = seq[MAXN + 1]
    cdef int w
    while ext:
        w = __builtin_ctzll(ext)
        ext &= ext - 1
        if lo == MAXN and w < right_nb:
            continue
        if (st.adj[w] & pmask) == endbit:
            seq[lo - 1] = w
            _grow_left(st, uncovered, count, seq, lo - 1, hi, pmask | (<uint64_t>1 << w))
        if count + 1 >= st.best:
            return
    _commit(st, uncovered, count, seq, lo, hi, pmask)


def path_cover(adj, int n):
    cdef uint64_t rows[MAXN]
    cdef PathCover* st
    cdef int i, j
    cdef uint64_t full
    _load(adj, n, rows)
    if n == 0:
        return 0, []
    st = <PathCover*>PyMem_Malloc(sizeof(PathCover))
    if st == NULL:
        raise MemoryError()
    try:
        st.adj = rows
        st.n = n
        st.best = n + 1
        full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
        with nogil:
            _cover(st, full, 0)
        paths = [[st.best_seq[i][j] for j in range(st.best_len[i])] for i in range(st.best)]
        return st.best, paths
    finally:
        PyMem_Free(st)
