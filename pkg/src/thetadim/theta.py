"""Theta graphs: labeled construction, dimension predictions and the
closed-form landmark recipes.

A theta graph has two degree-3 vertices u and v joined by three
internally disjoint paths of lengths p <= q <= r.  Vertex numbering is
deterministic: u=0, v=1, then the interiors of the three paths in
order, so u_path[i] is the vertex at distance i from u along the
shortest-role path, and likewise v_path / w_path.

Every constructed landmark set is re-checked against the exhaustive
solver before being returned; a failed self-check raises
ConstructionError instead of returning a wrong set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from thetadim.errors import ConstructionError
from thetadim.graphs import Graph, build_graph, is_connected
from thetadim.solver import GeneratorKind, LandmarkSet, is_generator

DIM2_CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")
EDIM2_CASES = ("i", "ii", "iii", "iv", "v")


@dataclass(frozen=True)
class ThetaParams:
    """Path lengths (p, q, r) with 1 <= p <= q <= r; q >= 2 keeps the
    graph simple (p = q = 1 would need parallel edges)."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if not (1 <= self.p <= self.q <= self.r):
            raise ValueError(f"need 1 <= p <= q <= r, got {self!r}")
        if self.q < 2:
            raise ValueError(f"p = q = 1 would create parallel edges: {self!r}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def __str__(self) -> str:
        return f"theta({self.p},{self.q},{self.r})"

    @property
    def n(self) -> int:
        return self.p + self.q + self.r - 1

    @property
    def m(self) -> int:
        return self.p + self.q + self.r


@dataclass(frozen=True)
class LabeledTheta:
    """A theta graph together with its path labeling."""

    graph: Graph
    params: ThetaParams
    u: int
    v: int
    u_path: tuple[int, ...]
    v_path: tuple[int, ...]
    w_path: tuple[int, ...]

    @property
    def paths(self) -> tuple[tuple[int, ...], ...]:
        return (self.u_path, self.v_path, self.w_path)

    def vertex_name(self, x: int) -> str:
        if x == self.u:
            return "u"
        if x == self.v:
            return "v"
        for label, seq in zip("uvw", self.paths):
            if x in seq:
                return f"{label}_{seq.index(x)}"
        raise ValueError(f"vertex {x} not in theta labeling")


def theta_graph(params: ThetaParams) -> LabeledTheta:
    """Build the canonical labeled theta graph for (p, q, r)."""
    p, q, r = params.as_tuple()
    nxt = 2
    seqs = []
    for length in (p, q, r):
        seq = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        seqs.append(tuple(seq))
    edges = []
    for seq in seqs:
        edges.extend(zip(seq, seq[1:]))
    g = build_graph(params.n, edges)
    return LabeledTheta(
        graph=g,
        params=params,
        u=0,
        v=1,
        u_path=seqs[0],
        v_path=seqs[1],
        w_path=seqs[2],
    )


def is_dim_extremal(params: ThetaParams) -> bool:
    p, q, r = params.as_tuple()
    return p >= 2 and p == q and r in (p, p + 2)


def is_edim_extremal(params: ThetaParams) -> bool:
    p, q, r = params.as_tuple()
    if (p, q, r) == (1, 2, 2):
        return True
    return p == q and 2 <= p <= 3 and p <= r <= p + 2


EDGE_EXTREMAL_PARAMS: tuple[ThetaParams, ...] = tuple(
    ThetaParams(*t)
    for t in [(1, 2, 2)] + [(p, p, p + d) for p in (2, 3) for d in (0, 1, 2)]
)


def predicted_dim(params: ThetaParams) -> int:
    """3 on the two extremal families, else 2."""
    return 3 if is_dim_extremal(params) else 2


def predicted_edim(params: ThetaParams) -> int:
    """3 on the seven edge-extremal graphs, else 2."""
    return 3 if is_edim_extremal(params) else 2


def iter_theta_params(max_sum: int) -> Iterator[ThetaParams]:
    """All valid (p, q, r) with p + q + r <= max_sum, ascending."""
    for s in range(5, max_sum + 1):
        for p in range(1, s // 3 + 1):
            for q in range(max(p, 2), (s - p) // 2 + 1):
                yield ThetaParams(p, q, s - p - q)


def _verified(theta: LabeledTheta, ids, kind: GeneratorKind, what: str) -> LandmarkSet:
    s = LandmarkSet(tuple(sorted(ids)), kind)
    if not is_generator(theta.graph, s):
        raise ConstructionError(
            f"{what} produced a non-distinguishing set {s.vertices} "
            f"on {theta.params}"
        )
    return s


def dim2_case(params: ThetaParams) -> str:
    """Which of the eight vertex-recipe guards applies (by parity)."""
    if predicted_dim(params) != 2:
        raise ValueError(f"{params} has no two-vertex generator")
    p, q, r = params.as_tuple()
    par = {p % 2, q % 2, r % 2}
    if len(par) == 2:
        if p == 1 and q % 2 == 0 and r % 2 == 0:
            return "ii"
        return "i"
    if p % 2 == 0:
        if q not in (p, p + 2):
            return "iii"
        if r >= p + 4:
            return "iv"
        return "v"
    if q not in (p, p + 2):
        return "vi"
    if r >= p + 4:
        return "vii"
    return "viii"


def dim2_generator(params: ThetaParams) -> LandmarkSet:
    """Size-2 vertex landmark set for any non-extremal theta graph.

    For the mixed-parity guard the two landmark roles are filled by an
    explicit path permutation: the path of odd length >= 3 closest to
    the middle role (preference P2, P3, P1) carries the half-way
    landmark, and an even-length path (preference P3, P2, P1) carries
    the midpoint landmark.
    """
    theta = theta_graph(params)
    case = dim2_case(params)
    p, q, r = params.as_tuple()
    paths = theta.paths
    lengths = (p, q, r)

    if case == "i":
        v_roles = [t for t in (1, 2, 0) if lengths[t] % 2 == 1 and lengths[t] >= 3]
        w_roles = [t for t in (2, 1, 0) if lengths[t] % 2 == 0]
        last_error = None
        for tv, tw in itertools.product(v_roles, w_roles):
            lv, lw = lengths[tv], lengths[tw]
            ids = (paths[tv][(lv - 1) // 2], paths[tw][lw // 2])
            try:
                return _verified(theta, ids, GeneratorKind.VERTEX, "mixed-parity recipe")
            except ConstructionError as exc:
                last_error = exc
        raise last_error if last_error else ConstructionError(
            f"no mixed-parity role assignment for {params}"
        )

    u_, vp, wp = theta.u, theta.v_path, theta.w_path
    ids = {
        "ii": (u_, wp[r // 2]),
        "iii": (vp[1], wp[r // 2]),
        "iv": (vp[q // 2], wp[1]),
        "v": (vp[1], wp[1]),
        "vi": (vp[1], wp[(r - 1) // 2]),
        "vii": (vp[(q - 1) // 2], wp[1]),
        "viii": (vp[1], wp[1]),
    }[case]
    return _verified(theta, ids, GeneratorKind.VERTEX, f"vertex recipe {case}")


def edim2_case(params: ThetaParams) -> str:
    """Which of the five edge-recipe guards applies, checked in order."""
    if predicted_edim(params) != 2:
        raise ValueError(f"{params} has no two-vertex edge generator")
    p, q, r = params.as_tuple()
    if p < q:
        if r >= 3 and (p + r) % 2 == 0:
            return "i"
        if r >= p + 3 and (p + r) % 2 == 1:
            return "ii"
        if r == p + 1:
            return "iii"
        raise ConstructionError(f"unreachable edge-recipe guard for {params!r}")
    if p >= 4:
        return "iv"
    if r >= p + 3:
        return "v"
    raise ConstructionError(f"unreachable edge-recipe guard for {params!r}")


def edim2_generator(params: ThetaParams) -> LandmarkSet:
    """Size-2 edge landmark set for any non-edge-extremal theta graph."""
    theta = theta_graph(params)
    case = edim2_case(params)
    p, q, r = params.as_tuple()
    up, vp, wp = theta.paths
    ids = {
        "i": lambda: (wp[(r - p) // 2], wp[(r + p) // 2]),
        "ii": lambda: (wp[(r - p) // 2], wp[(r + p + 1) // 2]),
        "iii": lambda: (vp[1], wp[1]),
        "iv": lambda: (up[2], vp[1]),
        "v": lambda: (vp[1], wp[1]),
    }[case]()
    return _verified(theta, ids, GeneratorKind.EDGE, f"edge recipe {case}")


def theta_automorphisms(theta: LabeledTheta) -> list[dict[int, int]]:
    """All labeling symmetries: permutations of equal-length paths,
    optionally composed with the end swap u <-> v (identity first)."""
    paths = theta.paths
    lengths = [len(s) - 1 for s in paths]
    maps = []
    for perm in itertools.permutations(range(3)):
        if any(lengths[t] != lengths[perm[t]] for t in range(3)):
            continue
        for swap in (False, True):
            vmap: dict[int, int] = {}
            for t in range(3):
                src, dst = paths[t], paths[perm[t]]
                top = len(src) - 1
                for i, x in enumerate(src):
                    vmap[x] = dst[top - i] if swap else dst[i]
            maps.append(vmap)
    return maps


def is_nice_set(theta: LabeledTheta, s_set) -> bool:
    """True iff the set meets every two-path cycle in two vertices that
    are not antipodal on that cycle (even cycles only have antipodes)."""
    ids = set(s_set.vertices if isinstance(s_set, LandmarkSet) else s_set)
    for a, b in itertools.combinations(range(3), 2):
        pa, pb = theta.paths[a], theta.paths[b]
        cyc = list(pa) + [pb[i] for i in range(len(pb) - 2, 0, -1)]
        length = len(cyc)
        pos = sorted(i for i, x in enumerate(cyc) if x in ids)
        good = False
        for x, y in itertools.combinations(pos, 2):
            d = min(y - x, length - (y - x))
            if length % 2 == 1 or d != length // 2:
                good = True
                break
        if not good:
            return False
    return True


def _nice_master_sets(theta: LabeledTheta) -> list[frozenset[int]]:
    p = theta.params.p
    up, vp, wp = theta.paths
    v1, w1 = vp[1], wp[1]
    if theta.params.r == p:  # equal-length family
        if p <= 3:
            return [frozenset({theta.u, v1, w1})]
        return [frozenset({up[i], v1, w1}) for i in range(p // 2 + 1)]
    # r == p + 2 family
    if p == 2:
        return [frozenset({theta.u, v1, w1}), frozenset({theta.u, v1, wp[2]})]
    out = [frozenset({up[i], v1, w1}) for i in range(p // 2 + 1)]
    out += [frozenset({up[1], v1, wp[j]}) for j in range(1, p // 2 + 2)]
    return out


def nice_set_generator(theta: LabeledTheta, forced: int) -> LandmarkSet:
    """Size-3 vertex generator containing ``forced`` on an extremal theta.

    The forced vertex is moved onto one of the known master sets by a
    labeling symmetry; the preimage of that master set is returned after
    passing both the niceness check and the exhaustive generator check.
    """
    if not is_dim_extremal(theta.params):
        raise ValueError(f"{theta.params} is not dimension-extremal")
    if not (0 <= forced < theta.graph.n):
        raise ValueError(f"forced vertex {forced} out of range")
    masters = _nice_master_sets(theta)
    for vmap in theta_automorphisms(theta):
        img = vmap[forced]
        for master in masters:
            if img not in master:
                continue
            inv = {y: x for x, y in vmap.items()}
            cand = tuple(sorted(inv[s] for s in master))
            if is_nice_set(theta, cand):
                return _verified(theta, cand, GeneratorKind.VERTEX, "nice-set recipe")
    raise ConstructionError(
        f"no master set reachable for vertex {forced} on {theta.params}"
    )


def is_theta(g: Graph):
    """Recognize a theta graph; returns its LabeledTheta or None.

    The returned labeling keeps the graph's own vertex ids: u is the
    smaller degree-3 vertex and paths are sorted by (length, sequence).
    """
    if g.n < 4 or not is_connected(g):
        return None
    degs = [g.degree(x) for x in range(g.n)]
    deg3 = [x for x in range(g.n) if degs[x] == 3]
    if len(deg3) != 2 or any(d not in (2, 3) for d in degs):
        return None
    u, v = deg3
    seqs = []
    for start in g.adjacency[u]:
        seq = [u, start]
        prev, cur = u, start
        while cur not in (u, v):
            a, b = g.adjacency[cur]
            nxt = b if a == prev else a
            seq.append(nxt)
            prev, cur = cur, nxt
        if cur == u:
            return None
        seqs.append(seq)
    interior = [x for seq in seqs for x in seq[1:-1]]
    if len(interior) != len(set(interior)) or len(interior) != g.n - 2:
        return None
    seqs.sort(key=lambda s: (len(s), s))
    lengths = [len(s) - 1 for s in seqs]
    params = ThetaParams(*lengths)
    return LabeledTheta(
        graph=g,
        params=params,
        u=u,
        v=v,
        u_path=tuple(seqs[0]),
        v_path=tuple(seqs[1]),
        w_path=tuple(seqs[2]),
    )
