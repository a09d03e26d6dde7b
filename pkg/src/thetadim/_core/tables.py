"""Precomputed bit-level tables shared by both kernel backends.

A graph on n <= 7 vertices is packed into one integer: the upper
triangle of the adjacency matrix in column-major order (x01, x02, x12,
x03, ...) read as a bit string, most significant bit first.  Integer
comparison of packed masks therefore equals lexicographic comparison of
the bit strings, and the canonical form of a graph is the smallest
packed mask over all vertex relabelings.

Masks are processed in 7-bit chunks so that permutation images, vertex
degrees and neighbor sets become a handful of table lookups.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

MAX_N = 7


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in column-major upper-triangle order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


class PackedTables:
    """All lookup tables for packed masks on n vertices."""

    def __init__(self, n: int):
        if not (2 <= n <= MAX_N):
            raise ValueError(f"packed masks support 2..{MAX_N} vertices, got {n}")
        self.n = n
        self.pairs = pair_order(n)
        self.kbits = len(self.pairs)
        self.chunks = max(1, -(-self.kbits // 7))
        # packed bit position of pair index k (MSB-first packing)
        self.packed_bit = [self.kbits - 1 - k for k in range(self.kbits)]

        inc = np.zeros(n, dtype=np.uint32)
        for k, (i, j) in enumerate(self.pairs):
            inc[i] |= np.uint32(1 << self.packed_bit[k])
            inc[j] |= np.uint32(1 << self.packed_bit[k])
        self.inc_mask = inc

        nbr = np.zeros((n, self.chunks, 128), dtype=np.uint8)
        for v in range(n):
            for c in range(self.chunks):
                for b in range(7):
                    pos = 7 * c + b
                    add = 0
                    if pos < self.kbits:
                        i, j = self.pairs[self.kbits - 1 - pos]
                        if v == i:
                            add = 1 << j
                        elif v == j:
                            add = 1 << i
                    half = 1 << b
                    nbr[v, c, half : 2 * half] = nbr[v, c, 0:half] | np.uint8(add)
        self.nbr_tbl = nbr

        self.perms = tuple(itertools.permutations(range(n)))
        self.nperm = len(self.perms)
        self.perm_tbl = self._build_perm_tbl()

    def _build_perm_tbl(self) -> np.ndarray:
        n, kbits, chunks = self.n, self.kbits, self.chunks
        perm_arr = np.array(self.perms, dtype=np.int64)
        pairpos = np.zeros((n, n), dtype=np.int64)
        for k, (i, j) in enumerate(self.pairs):
            pairpos[i, j] = pairpos[j, i] = k
        tbl = np.zeros((self.nperm, chunks, 128), dtype=np.uint32)
        for c in range(chunks):
            for b in range(7):
                pos = 7 * c + b
                if pos >= kbits:
                    continue
                i, j = self.pairs[kbits - 1 - pos]
                dest_pair = pairpos[perm_arr[:, i], perm_arr[:, j]]
                dest_bit = np.left_shift(
                    np.uint32(1), (kbits - 1 - dest_pair).astype(np.uint32)
                )
                half = 1 << b
                tbl[:, c, half : 2 * half] = tbl[:, c, 0:half] | dest_bit[:, None]
        return tbl

    # list views are only touched by the pure backend
    @cached_property
    def perm_tbl_list(self) -> list:
        return self.perm_tbl.tolist()

    @cached_property
    def nbr_tbl_list(self) -> list:
        return self.nbr_tbl.tolist()

    def mask_from_edges(self, edges) -> int:
        pos = {}
        for k, pair in enumerate(self.pairs):
            pos[pair] = self.packed_bit[k]
        m = 0
        for u, v in edges:
            if u > v:
                u, v = v, u
            m |= 1 << pos[(u, v)]
        return m

    def edges_from_mask(self, mask: int) -> list[tuple[int, int]]:
        return [
            self.pairs[k]
            for k in range(self.kbits)
            if mask >> self.packed_bit[k] & 1
        ]


@lru_cache(maxsize=None)
def get_tables(n: int) -> PackedTables:
    return PackedTables(n)
