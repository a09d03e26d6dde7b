"""Daisy graphs (cycles sharing one vertex) and vertex gluing."""

from __future__ import annotations

from dataclasses import dataclass

from thetadim.graphs import Graph, block_decomposition, build_graph, is_connected


@dataclass(frozen=True)
class DaisyParams:
    """Petal lengths, each a cycle length >= 3; at least two petals."""

    petal_lengths: tuple[int, ...]

    def __post_init__(self):
        petals = tuple(sorted(self.petal_lengths))
        if len(petals) < 2:
            raise ValueError("a daisy needs at least two petals")
        if any(p < 3 for p in petals):
            raise ValueError(f"petal lengths must be >= 3, got {petals}")
        object.__setattr__(self, "petal_lengths", petals)

    @property
    def k(self) -> int:
        return len(self.petal_lengths)

    @property
    def n(self) -> int:
        return 1 + sum(p - 1 for p in self.petal_lengths)


def daisy_graph(params: DaisyParams) -> tuple[Graph, int]:
    """Build the daisy with center vertex 0; petals laid out consecutively.

    Returns (graph, center id).
    """
    center = 0
    edges = []
    nxt = 1
    for length in params.petal_lengths:
        ring = [center] + list(range(nxt, nxt + length - 1))
        nxt += length - 1
        edges.extend(zip(ring, ring[1:]))
        edges.append((ring[-1], center))
    return build_graph(params.n, edges), center


def is_daisy(g: Graph) -> DaisyParams | None:
    """Recognize a daisy: >= 2 blocks, all cycles, all sharing one vertex."""
    if not is_connected(g):
        return None
    dec = block_decomposition(g)
    blocks = dec.blocks
    if len(blocks) < 2 or len(dec.cut_vertices) != 1:
        return None
    center = dec.cut_vertices[0]
    lengths = []
    for verts, edges in zip(blocks, dec.block_edges):
        # a block is a cycle iff it has as many edges as vertices (>= 3)
        if len(verts) < 3 or len(edges) != len(verts) or center not in verts:
            return None
        lengths.append(len(verts))
    return DaisyParams(tuple(sorted(lengths)))


def glue_at_vertex(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union with v2 identified with v1.

    Vertices of g1 keep their ids; the remaining vertices of g2 get ids
    g1.n, g1.n + 1, ... in ascending original order.
    """
    if not (0 <= v1 < g1.n):
        raise ValueError(f"vertex {v1} out of range for first graph")
    if not (0 <= v2 < g2.n):
        raise ValueError(f"vertex {v2} out of range for second graph")
    if not (is_connected(g1) and is_connected(g2)):
        raise ValueError("gluing requires connected graphs")
    relabel = {}
    nxt = g1.n
    for x in range(g2.n):
        if x == v2:
            relabel[x] = v1
        else:
            relabel[x] = nxt
            nxt += 1
    edges = list(g1.edges)
    edges.extend((relabel[a], relabel[b]) for a, b in g2.edges)
    return build_graph(g1.n + g2.n - 1, edges)
