"""Exact metric dimension by exhaustive landmark-set search.

The search enumerates candidate sets in increasing cardinality and
lexicographic order within a cardinality, so reported witnesses are
deterministic: the lexicographically smallest passing set of the
smallest passing size.  With ``threads > 1`` the combination space of
one cardinality is split into contiguous rank ranges evaluated
concurrently; the reduce keeps the first passing range, so results are
identical for any thread count.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from thetadim import _core
from thetadim.errors import BudgetExceededError
from thetadim.graphs import DistanceMatrix, Graph, all_pairs_distances

DEFAULT_BUDGET = 10**9


class GeneratorKind(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class LandmarkSet:
    """A candidate landmark set: sorted vertex ids plus its target kind."""

    vertices: tuple[int, ...]
    kind: GeneratorKind

    def __post_init__(self):
        vs = tuple(sorted(self.vertices))
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate vertices in landmark set {self.vertices}")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GeneratorCheck:
    """Outcome of a generator test; falsy when some target pair collides."""

    ok: bool
    collision: tuple | None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DimensionResult:
    value: int
    witness: LandmarkSet
    kind: GeneratorKind


def _validate_landmarks(g: Graph, s_set: LandmarkSet) -> None:
    if s_set.vertices and not (0 <= s_set.vertices[0] and s_set.vertices[-1] < g.n):
        raise ValueError(f"landmark ids {s_set.vertices} out of range for n={g.n}")


def target_matrix(g: Graph, dm: DistanceMatrix, kind: GeneratorKind) -> np.ndarray:
    """Rows: potential landmarks; columns: targets (vertices or edges)."""
    if kind is GeneratorKind.VERTEX:
        return dm.dist
    us = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=g.m)
    vs = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=g.m)
    out = np.ascontiguousarray(
        np.minimum(dm.dist[:, us], dm.dist[:, vs]), dtype=np.int32
    )
    out.setflags(write=False)
    return out


def distance_signature(dm: DistanceMatrix, s_set: LandmarkSet, target) -> tuple[int, ...]:
    """Distances from each landmark (ascending id order) to the target."""
    _validate_landmarks(dm.graph, s_set)
    if isinstance(target, tuple):
        return tuple(dm.edge(s, target) for s in s_set.vertices)
    return tuple(dm.vertex(s, target) for s in s_set.vertices)


def _lex_first_collision(D: np.ndarray, subset: tuple[int, ...]) -> tuple[int, int] | None:
    """Smallest (i, j) target pair sharing a signature, or None."""
    sigs = list(zip(*(D[s].tolist() for s in subset)))
    first: dict[tuple, int] = {}
    best: tuple[int, int] | None = None
    for t, sig in enumerate(sigs):
        f = first.setdefault(sig, t)
        if f != t:
            cand = (f, t)
            if best is None or cand < best:
                best = cand
    return best


def is_generator(g: Graph, s_set: LandmarkSet, dm: DistanceMatrix | None = None) -> GeneratorCheck:
    """Test whether every pair of targets gets distinct signatures.

    On failure the collision is the lexicographically first
    undistinguished pair: vertex ids for VERTEX kind, sorted edge pairs
    for EDGE kind.
    """
    _validate_landmarks(g, s_set)
    if dm is None:
        dm = all_pairs_distances(g)
    D = target_matrix(g, dm, s_set.kind)
    if not s_set.vertices:
        hit = None if D.shape[1] <= 1 else (0, 1)
    else:
        hit = _lex_first_collision(D, s_set.vertices)
    if hit is None:
        return GeneratorCheck(ok=True, collision=None)
    if s_set.kind is GeneratorKind.EDGE:
        return GeneratorCheck(ok=False, collision=(g.edges[hit[0]], g.edges[hit[1]]))
    return GeneratorCheck(ok=False, collision=hit)


def _combo_from_rank(rank: int, m: int, k: int) -> list[int]:
    out: list[int] = []
    x = 0
    for pos in range(k):
        for v in range(x, m):
            c = comb(m - v - 1, k - pos - 1)
            if rank < c:
                out.append(v)
                x = v + 1
                break
            rank -= c
    return out


def _search_cardinality(
    D: np.ndarray,
    pool: np.ndarray,
    k: int,
    extra: int,
    threads: int,
) -> tuple[int, ...] | None:
    """First subset of size k (indices drawn from pool, plus extra) that
    distinguishes all targets; None when the whole cardinality fails."""
    m = len(pool)
    if k > m:
        return None
    if k == 0:
        return _core.scan_combinations(D, pool, [], 1, extra)
    total = comb(m, k)
    if threads <= 1 or total < 4096:
        return _core.scan_combinations(D, pool, list(range(k)), total, extra)
    nchunks = threads * 8
    bounds = [total * i // nchunks for i in range(nchunks + 1)]
    jobs = []
    for lo, hi in zip(bounds, bounds[1:]):
        if hi > lo:
            jobs.append((_combo_from_rank(lo, m, k), hi - lo))
    with ThreadPoolExecutor(max_workers=threads) as pool_exec:
        futures = [
            pool_exec.submit(_core.scan_combinations, D, pool, combo, cnt, extra)
            for combo, cnt in jobs
        ]
        result = None
        for fut in futures:
            if result is None:
                result = fut.result()
            else:
                fut.cancel()
    return result


def _charge_budget(spent: int, m: int, k: int, n_targets: int, budget: int) -> int:
    cost = comb(m, k) * (n_targets * (n_targets - 1) // 2)
    if spent + cost > budget:
        raise BudgetExceededError(
            f"searching {comb(m, k)} sets of size {k} over {n_targets} targets "
            f"needs up to {spent + cost} signature comparisons (budget {budget})"
        )
    return spent + cost


def metric_dimension(
    g: Graph,
    kind: GeneratorKind = GeneratorKind.VERTEX,
    *,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> DimensionResult:
    """Exact dimension with a deterministic minimum witness.

    Cardinalities are tried in increasing order, so the witness size is
    minimum by construction: no smaller set passed.
    """
    if g.n < 2:
        raise ValueError("metric dimension needs at least two vertices")
    dm = all_pairs_distances(g)  # raises DisconnectedGraphError
    D = target_matrix(g, dm, kind)
    pool = np.arange(g.n, dtype=np.int32)
    spent = 0
    for k in range(1, g.n + 1):
        spent = _charge_budget(spent, g.n, k, D.shape[1], budget)
        hit = _search_cardinality(D, pool, k, -1, threads)
        if hit is not None:
            return DimensionResult(value=k, witness=LandmarkSet(hit, kind), kind=kind)
    raise AssertionError("unreachable: the full vertex set distinguishes everything")


def extend_to_generator(
    g: Graph,
    forced: int,
    size: int,
    kind: GeneratorKind = GeneratorKind.VERTEX,
    *,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> LandmarkSet | None:
    """Lexicographically first size-``size`` generator containing
    ``forced``, or None if that cardinality has none."""
    if not (0 <= forced < g.n):
        raise ValueError(f"forced vertex {forced} out of range")
    if size < 1:
        raise ValueError("generator size must be at least 1")
    if size > g.n:
        return None
    dm = all_pairs_distances(g)
    D = target_matrix(g, dm, kind)
    pool = np.array([v for v in range(g.n) if v != forced], dtype=np.int32)
    _charge_budget(0, len(pool), size - 1, D.shape[1], budget)
    hit = _search_cardinality(D, pool, size - 1, forced, threads)
    if hit is None:
        return None
    return LandmarkSet(hit, kind)
