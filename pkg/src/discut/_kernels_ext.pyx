# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled brute-force enumeration kernels.

Same Gray-code walk and tie-breaking as the pure-Python twin in
``_kernels_py``; outputs are bit-identical.
"""

from libc.stdlib cimport malloc, free

BACKEND = "ext"

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


def maxcut_bruteforce(adj_masks, int n):
    """Exact Max-Cut over neighbor bitmasks; vertex 0 fixed outside S."""
    if n == 0:
        return 0, 0, 1
    if n > 25:
        raise ValueError("kernel supports n <= 25")
    cdef unsigned int *adj = <unsigned int *> malloc(n * sizeof(unsigned int))
    cdef int *degs = <int *> malloc(n * sizeof(int))
    if adj == NULL or degs == NULL:
        free(adj); free(degs)
        raise MemoryError()
    cdef int v
    for v in range(n):
        adj[v] = adj_masks[v]
        degs[v] = __builtin_popcount(adj[v])
    cdef unsigned long long total = 1ULL << (n - 1)
    cdef unsigned long long i
    cdef unsigned int s = 0, best_mask = 0, bit
    cdef long long cur = 0, best_val = 0
    with nogil:
        for i in range(1, total):
            v = __builtin_ctz(<unsigned int> i) + 1
            bit = 1u << v
            if s & bit:
                s ^= bit
                cur += 2 * __builtin_popcount(adj[v] & s) - degs[v]
            else:
                cur += degs[v] - 2 * __builtin_popcount(adj[v] & s)
                s ^= bit
            if cur > best_val or (cur == best_val and s < best_mask):
                best_val = cur
                best_mask = s
    free(adj); free(degs)
    return int(best_val), int(best_mask), int(total)


def maxdicut_bruteforce(out_masks, in_masks, int n):
    """Exact Max-Dicut over out-/in-neighbor bitmasks; all 2^n subsets."""
    if n == 0:
        return 0, 0, 1
    if n > 25:
        raise ValueError("kernel supports n <= 25")
    cdef unsigned int *outm = <unsigned int *> malloc(n * sizeof(unsigned int))
    cdef unsigned int *inm = <unsigned int *> malloc(n * sizeof(unsigned int))
    cdef int *outdegs = <int *> malloc(n * sizeof(int))
    if outm == NULL or inm == NULL or outdegs == NULL:
        free(outm); free(inm); free(outdegs)
        raise MemoryError()
    cdef int v
    for v in range(n):
        outm[v] = out_masks[v]
        inm[v] = in_masks[v]
        outdegs[v] = __builtin_popcount(outm[v])
    cdef unsigned long long total = 1ULL << n
    cdef unsigned long long i
    cdef unsigned int s = 0, best_mask = 0, bit
    cdef long long cur = 0, best_val = 0
    with nogil:
        for i in range(1, total):
            v = __builtin_ctz(<unsigned int> i)
            bit = 1u << v
            if s & bit:
                s ^= bit
                cur += (__builtin_popcount(outm[v] & s)
                        + __builtin_popcount(inm[v] & s) - outdegs[v])
            else:
                cur += (outdegs[v] - __builtin_popcount(outm[v] & s)
                        - __builtin_popcount(inm[v] & s))
                s ^= bit
            if cur > best_val or (cur == best_val and s < best_mask):
                best_val = cur
                best_mask = s
    free(outm); free(inm); free(outdegs)
    return int(best_val), int(best_mask), int(total)
