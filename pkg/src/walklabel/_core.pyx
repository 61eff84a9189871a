# cython: language_level=3
"""Compiled subset-DP kernels; semantics documented in _core_py.

Every intermediate count is at most n! <= 24! < 2**80, so unsigned 128-bit
accumulators cannot overflow at the sizes the oracle admits; the single
conversion to a Python int happens on exit.
"""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"
    int __builtin_ctz(unsigned int x)

BACKEND = "compiled"


cdef object _to_pyint(u128 value):
    cdef uint64_t hi = <uint64_t> (value >> 64)
    cdef uint64_t lo = <uint64_t> value
    if hi == 0:
        return int(lo)
    return (int(hi) << 64) | int(lo)


cdef inline uint32_t _next_same_popcount(uint32_t c):
    cdef uint32_t low = c & (0 - c)
    cdef uint32_t lifted = c + low
    return lifted | ((c ^ lifted) >> (__builtin_ctz(low) + 2))


def dp_total(masks, int n):
    cdef uint32_t adj[32]
    cdef int v, p
    cdef uint32_t c, rem, low, prev, top
    cdef u128 acc
    cdef u128 *table
    if n < 1 or n > 25:
        raise ValueError("dp_total: n out of supported range")
    for v in range(n):
        adj[v] = masks[v]
    table = <u128 *> calloc((<size_t> 1) << n, sizeof(u128))
    if table == NULL:
        raise MemoryError()
    try:
        top = <uint32_t> ((<uint64_t> 1 << n) - 1)
        for v in range(n):
            table[(<uint32_t> 1) << v] = 1
        for p in range(2, n + 1):
            c = (<uint32_t> 1 << p) - 1
            while c <= top:
                acc = 0
                rem = c
                while rem:
                    low = rem & (0 - rem)
                    rem ^= low
                    prev = c ^ low
                    if adj[__builtin_ctz(low)] & prev:
                        acc += table[prev]
                table[c] = acc
                if c == top:
                    break
                c = _next_same_popcount(c)
        return _to_pyint(table[top])
    finally:
        free(table)


def dp_resume(masks, int n, unsigned int labeled_mask, int require_u=-1, int forbid_v=-1):
    cdef uint32_t adjc[32]
    cdef uint32_t anchored[32]
    cdef int pos[32]
    cdef int v, u, f, p, i, ju, jv
    cdef uint32_t full, free_mask, c, rem, low, prev, top, mv
    cdef u128 acc
    cdef u128 *table
    if n < 1 or n > 25:
        raise ValueError("dp_resume: n out of supported range")
    full = <uint32_t> ((<uint64_t> 1 << n) - 1)
    free_mask = full & ~labeled_mask
    f = 0
    for v in range(n):
        if free_mask >> v & 1:
            pos[v] = f
            f += 1
        else:
            pos[v] = -1
    if f == 0:
        return 1
    ju = -1
    jv = -1
    if require_u >= 0:
        ju = pos[require_u]
    if forbid_v >= 0:
        jv = pos[forbid_v]
    i = 0
    for v in range(n):
        if pos[v] < 0:
            continue
        mv = masks[v]
        adjc[i] = 0
        for u in range(n):
            if (mv >> u & 1) and pos[u] >= 0:
                adjc[i] |= (<uint32_t> 1) << pos[u]
        anchored[i] = 1 if (mv & labeled_mask) else 0
        i += 1
    table = <u128 *> calloc((<size_t> 1) << f, sizeof(u128))
    if table == NULL:
        raise MemoryError()
    try:
        top = <uint32_t> ((<uint64_t> 1 << f) - 1)
        table[0] = 1
        for p in range(1, f + 1):
            c = (<uint32_t> 1 << p) - 1
            while c <= top:
                acc = 0
                rem = c
                while rem:
                    low = rem & (0 - rem)
                    rem ^= low
                    i = __builtin_ctz(low)
                    prev = c ^ low
                    if i == jv and not (prev >> ju & 1):
                        continue
                    if anchored[i] or (adjc[i] & prev):
                        acc += table[prev]
                table[c] = acc
                if c == top:
                    break
                c = _next_same_popcount(c)
        return _to_pyint(table[top])
    finally:
        free(table)
