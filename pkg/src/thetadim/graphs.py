"""Immutable simple undirected graphs with distances and block structure.

Vertices are dense integer ids ``0..n-1``.  Graphs and distance matrices
are immutable after construction, so they can be shared freely between
threads; every function in this module is a pure function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from thetadim.errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    GraphInputError,
    NotAnEdgeError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ``n`` vertices and a sorted edge set.

    Invariants (enforced by :func:`build_graph`): no self-loops, no
    parallel edges, ``adjacency`` symmetric with sorted neighbor lists.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        # cached on first use; object.__setattr__ sidesteps frozen=True
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def __repr__(self) -> str:  # keep failure output readable in tests
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Raises :class:`SelfLoopError`, :class:`DuplicateEdgeError` or
    :class:`VertexRangeError` for the corresponding defect.
    """
    if n < 1:
        raise GraphInputError(f"vertex count must be positive, got {n}")
    seen: set[Edge] = set()
    for u, v in edge_list:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return Graph(n=n, edges=edges, adjacency=adjacency)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph (read-only array)."""

    graph: Graph
    dist: np.ndarray  # shape (n, n), int32, writeable=False

    def vertex(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def edge(self, s: int, e: Edge) -> int:
        return vertex_edge_distance(self, s, e)


def _bfs_row(adjacency, n: int, source: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return -1 not in _bfs_row(g.adjacency, g.n, 0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every source; raises on disconnected input."""
    rows = []
    for s in range(g.n):
        row = _bfs_row(g.adjacency, g.n, s)
        if -1 in row:
            raise DisconnectedGraphError("graph is not connected")
        rows.append(row)
    dist = np.array(rows, dtype=np.int32)
    dist.setflags(write=False)
    return DistanceMatrix(graph=g, dist=dist)


def vertex_edge_distance(dm: DistanceMatrix, s: int, e: Edge) -> int:
    """Distance from vertex ``s`` to edge ``e``: the nearer endpoint."""
    u, v = e
    if not dm.graph.has_edge(u, v):
        raise NotAnEdgeError(f"({u},{v}) is not an edge")
    return int(min(dm.dist[s, u], dm.dist[s, v]))


def cyclomatic_number(g: Graph) -> int:
    """Number of independent cycles, ``m - n + 1`` for connected graphs."""
    if not is_connected(g):
        raise DisconnectedGraphError("cyclomatic number needs a connected graph")
    return g.m - g.n + 1


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.

    ``block_edges[i]`` is the sorted edge list of block ``i``; every edge
    of the graph lies in exactly one block.  ``nontrivial[i]`` is true
    when the block has at least three vertices.
    """

    block_edges: tuple[tuple[Edge, ...], ...]
    cut_vertices: tuple[int, ...]
    nontrivial: tuple[bool, ...] = field(default=())

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for be in self.block_edges:
            vs: set[int] = set()
            for u, v in be:
                vs.add(u)
                vs.add(v)
            out.append(tuple(sorted(vs)))
        return tuple(out)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Iterative DFS low-point block/cut-vertex decomposition."""
    if not is_connected(g):
        raise DisconnectedGraphError("block decomposition needs a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut: set[int] = set()
    blocks: list[list[Edge]] = []
    edge_stack: list[Edge] = []
    timer = 0

    if n == 1:
        return BlockDecomposition(block_edges=(), cut_vertices=(), nontrivial=())

    root = 0
    root_children = 0
    # each stack frame: (vertex, index into its adjacency list)
    stack: list[list[int]] = [[root, 0]]
    disc[root] = low[root] = timer
    timer += 1
    while stack:
        frame = stack[-1]
        v, i = frame
        if i < len(g.adjacency[v]):
            frame[1] += 1
            w = g.adjacency[v][i]
            if disc[w] < 0:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((v, w))
                stack.append([w, 0])
                if v == root:
                    root_children += 1
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            p = parent[v]
            if p >= 0:
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    if p != root or root_children > 1:
                        cut.add(p)
                    comp: list[Edge] = []
                    while edge_stack:
                        a, b = edge_stack[-1]
                        if disc[a] < disc[v] and (a, b) != (p, v):
                            break
                        edge_stack.pop()
                        comp.append((a, b) if a < b else (b, a))
                    blocks.append(comp)

    block_edges = tuple(tuple(sorted(set(b))) for b in blocks)
    order = sorted(range(len(block_edges)), key=lambda i: block_edges[i])
    block_edges = tuple(block_edges[i] for i in order)
    nontrivial = tuple(len({x for e in be for x in e}) >= 3 for be in block_edges)
    return BlockDecomposition(
        block_edges=block_edges,
        cut_vertices=tuple(sorted(cut)),
        nontrivial=nontrivial,
    )


def is_two_connected(g: Graph) -> bool:
    """True iff the graph has one block and at least three vertices."""
    return g.n >= 3 and len(block_decomposition(g).block_edges) == 1
