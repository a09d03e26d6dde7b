"""Pure-Python kernels; same contracts as the compiled module."""

from __future__ import annotations

import numpy as np

_POP8 = np.array([bin(x).count("1") for x in range(256)], dtype=np.uint8)


def backend_name() -> str:
    return "pure"


def leafless_canonical_masks(tbl) -> np.ndarray:
    """Canonical packed masks of connected min-degree-2 graphs, ascending."""
    n, kbits, chunks = tbl.n, tbl.kbits, tbl.chunks
    ms = np.arange(1 << kbits, dtype=np.uint32)
    keep = np.ones(ms.shape, dtype=bool)
    for v in range(n):
        x = ms & tbl.inc_mask[v]
        deg = _POP8[x & 0xFF] + _POP8[(x >> np.uint32(8)) & 0xFF]
        if kbits > 16:
            deg = deg + _POP8[(x >> np.uint32(16)) & 0xFF]
        keep &= deg >= 2
    candidates = ms[keep].tolist()

    nbr = tbl.nbr_tbl_list
    ptbl_rest = tbl.perm_tbl_list[1:]
    full = (1 << n) - 1
    crange = range(chunks)
    out = []
    for m in candidates:
        cv = [(m >> (7 * c)) & 127 for c in crange]
        nbs = []
        for v in range(n):
            acc = 0
            row = nbr[v]
            for c in crange:
                acc |= row[c][cv[c]]
            nbs.append(acc)
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
        smaller = False
        for row in ptbl_rest:
            img = 0
            for c in crange:
                img |= row[c][cv[c]]
            if img < m:
                smaller = True
                break
        if not smaller:
            out.append(m)
    return np.array(out, dtype=np.uint32)


def canonical_mask(tbl, mask: int) -> int:
    """Smallest packed mask over all vertex relabelings."""
    chunks = tbl.chunks
    cv = [(mask >> (7 * c)) & 127 for c in range(chunks)]
    best = mask
    for row in tbl.perm_tbl_list:
        img = 0
        for c in range(chunks):
            img |= row[c][cv[c]]
        if img < best:
            best = img
    return best


def scan_combinations(dist, pool, combo, count, extra):
    """Scan lexicographic combinations for a distinguishing landmark set.

    ``dist`` is the (n, targets) distance table, ``pool`` the candidate
    vertex ids, ``combo`` the starting combination as indices into
    ``pool``, ``count`` how many combinations to examine and ``extra``
    a vertex id that every tested set also contains (or -1).  Returns
    the first subset (sorted vertex ids) whose target signatures are
    pairwise distinct, else None.
    """
    D = dist.tolist()
    pool = [int(x) for x in pool]
    k = len(combo)
    m = len(pool)
    c = list(combo)
    T = len(D[0]) if D else 0
    extra_row = D[extra] if extra >= 0 else None
    for _ in range(count):
        rows = [D[pool[i]] for i in c]
        if extra_row is not None:
            rows.append(extra_row)
        if len(set(zip(*rows))) == T:
            subset = [pool[i] for i in c]
            if extra >= 0:
                subset.append(extra)
            return tuple(sorted(subset))
        i = k - 1
        while i >= 0 and c[i] == m - k + i:
            i -= 1
        if i < 0:
            return None
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1
    return None
