# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: subset scanning and packed-mask enumeration."""

from libc.stdlib cimport free, malloc
from libc.stdint cimport int32_t, int64_t, uint8_t, uint32_t, uint64_t
from libcpp.vector cimport vector

import numpy as np


def backend_name():
    return "compiled"


cdef inline int _pop(uint32_t x) noexcept nogil:
    x = x - ((x >> 1) & 0x55555555u)
    x = (x & 0x33333333u) + ((x >> 2) & 0x33333333u)
    x = (x + (x >> 4)) & 0x0F0F0F0Fu
    return <int>((x * 0x01010101u) >> 24)


def leafless_canonical_masks(tbl):
    """Canonical packed masks of connected min-degree-2 graphs, ascending."""
    cdef int n = tbl.n
    cdef int kbits = tbl.kbits
    cdef int chunks = tbl.chunks
    cdef const uint32_t[::1] inc = tbl.inc_mask
    cdef const uint8_t[:, :, ::1] nbr = tbl.nbr_tbl
    cdef const uint32_t[:, :, ::1] ptbl = tbl.perm_tbl
    cdef int nperm = ptbl.shape[0]
    cdef vector[uint32_t] found
    cdef uint64_t total = (<uint64_t>1) << kbits
    cdef uint64_t mm
    cdef uint32_t m, img, full, reach, nxt, r
    cdef int v, c, p
    cdef bint ok
    cdef int cv[4]
    cdef uint32_t nbs[8]

    full = ((<uint32_t>1) << n) - 1
    with nogil:
        for mm in range(total):
            m = <uint32_t>mm
            ok = True
            for v in range(n):
                if _pop(m & inc[v]) < 2:
                    ok = False
                    break
            if not ok:
                continue
            for c in range(chunks):
                cv[c] = <int>((m >> (7 * c)) & 127)
            for v in range(n):
                r = 0
                for c in range(chunks):
                    r |= nbr[v, c, cv[c]]
                nbs[v] = r
            reach = 1
            while True:
                nxt = reach
                r = reach
                v = 0
                while r:
                    if r & 1:
                        nxt |= nbs[v]
                    r >>= 1
                    v += 1
                if nxt == reach:
                    break
                reach = nxt
            if reach != full:
                continue
            ok = True
            for p in range(1, nperm):
                img = 0
                for c in range(chunks):
                    img |= ptbl[p, c, cv[c]]
                if img < m:
                    ok = False
                    break
            if ok:
                found.push_back(m)

    out = np.empty(found.size(), dtype=np.uint32)
    cdef uint32_t[::1] ov = out
    cdef size_t i
    for i in range(found.size()):
        ov[i] = found[i]
    return out


def canonical_mask(tbl, mask):
    """Smallest packed mask over all vertex relabelings."""
    cdef const uint32_t[:, :, ::1] ptbl = tbl.perm_tbl
    cdef int chunks = tbl.chunks
    cdef int nperm = ptbl.shape[0]
    cdef uint32_t m = <uint32_t>mask
    cdef uint32_t best = m
    cdef uint32_t img
    cdef int c, p
    cdef int cv[4]
    for c in range(chunks):
        cv[c] = <int>((m >> (7 * c)) & 127)
    with nogil:
        for p in range(nperm):
            img = 0
            for c in range(chunks):
                img |= ptbl[p, c, cv[c]]
            if img < best:
                best = img
    return int(best)


def scan_combinations(dist, pool, combo, count, extra):
    """Scan lexicographic combinations for a distinguishing landmark set.

    Same contract as the pure backend: first subset of ``pool`` rows of
    ``dist`` (plus ``extra``, if >= 0) whose target signatures are all
    distinct, starting from ``combo`` and trying ``count`` combinations.
    """
    cdef const int32_t[:, ::1] D = dist
    cdef const int32_t[::1] P = pool
    cdef int T = D.shape[1]
    cdef int k = len(combo)
    cdef int m = P.shape[0]
    cdef int kk = k + (1 if extra >= 0 else 0)
    cdef int64_t left = count
    cdef int xtra = extra

    if kk == 0 or T == 0:
        return None

    cdef int tsize = 1
    while tsize < 2 * T:
        tsize <<= 1

    cdef int* c = <int*>malloc(k * sizeof(int))
    cdef const int32_t** rows = <const int32_t**>malloc(kk * sizeof(void*))
    cdef uint64_t* stamp = <uint64_t*>malloc(tsize * sizeof(uint64_t))
    cdef int* slot = <int*>malloc(tsize * sizeof(int))
    if c == NULL or rows == NULL or stamp == NULL or slot == NULL:
        free(c); free(rows); free(stamp); free(slot)
        raise MemoryError()

    cdef int i, j, t, t2, probe
    cdef uint64_t epoch = 0
    cdef uint64_t h
    cdef bint ok, same, hit = False
    for i in range(k):
        c[i] = combo[i]
    for i in range(tsize):
        stamp[i] = 0

    with nogil:
        if xtra >= 0:
            rows[k] = &D[xtra, 0]
        while left > 0:
            for i in range(k):
                rows[i] = &D[P[c[i]], 0]
            epoch += 1
            ok = True
            for t in range(T):
                h = <uint64_t>1469598103934665603
                for i in range(kk):
                    h = (h ^ <uint64_t><int64_t>rows[i][t]) * <uint64_t>1099511628211
                probe = <int>(h & <uint64_t>(tsize - 1))
                while stamp[probe] == epoch:
                    t2 = slot[probe]
                    same = True
                    for i in range(kk):
                        if rows[i][t2] != rows[i][t]:
                            same = False
                            break
                    if same:
                        ok = False
                        break
                    probe = (probe + 1) & (tsize - 1)
                if not ok:
                    break
                stamp[probe] = epoch
                slot[probe] = t
            if ok:
                hit = True
                break
            left -= 1
            i = k - 1
            while i >= 0 and c[i] == m - k + i:
                i -= 1
            if i < 0:
                break
            c[i] += 1
            for j in range(i + 1, k):
                c[j] = c[j - 1] + 1

    result = None
    if hit:
        subset = [P[c[i]] for i in range(k)]
        if xtra >= 0:
            subset.append(xtra)
        result = tuple(sorted(subset))
    free(c); free(rows); free(stamp); free(slot)
    return result
