import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import bfs_distances, complete_graph, cycle_graph, path_graph, random_connected_graph
from thetadim.errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    NotAnEdgeError,
    SelfLoopError,
    VertexRangeError,
)
from thetadim.graphs import (
    all_pairs_distances,
    block_decomposition,
    build_graph,
    cyclomatic_number,
    is_connected,
    is_cycle,
    is_two_connected,
    min_degree,
    vertex_edge_distance,
)
from thetadim.theta import ThetaParams, theta_graph


def test_build_cycle():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g.n == 5 and g.m == 5
    assert g.adjacency[0] == (1, 4)


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError):
        build_graph(2, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdgeError):
        build_graph(2, [(0, 1), (1, 0)])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(3, [(0, 0)])


def test_build_rejects_bad_endpoint():
    with pytest.raises(VertexRangeError):
        build_graph(3, [(0, 3)])
    with pytest.raises(VertexRangeError):
        build_graph(3, [(-1, 2)])


def test_theta_222_counts():
    g = theta_graph(ThetaParams(2, 2, 2)).graph
    assert g.n == 5 and g.m == 6


def test_distances_examples():
    dm = all_pairs_distances(cycle_graph(6))
    assert dm.vertex(0, 3) == 3

    t = theta_graph(ThetaParams(2, 2, 2))
    dm = all_pairs_distances(t.graph)
    assert dm.vertex(t.u_path[1], t.v_path[1]) == 2

    dm = all_pairs_distances(path_graph(4))
    assert dm.vertex(0, 3) == 3


def test_distances_reject_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        all_pairs_distances(g)


def test_vertex_edge_distance_examples():
    dm = all_pairs_distances(cycle_graph(6))
    assert vertex_edge_distance(dm, 3, (3, 4)) == 0
    assert vertex_edge_distance(dm, 0, (3, 4)) == 2

    t = theta_graph(ThetaParams(2, 2, 2))
    dm = all_pairs_distances(t.graph)
    v1 = t.v_path[1]
    assert vertex_edge_distance(dm, t.u, (v1, t.v)) == 1

    with pytest.raises(NotAnEdgeError):
        vertex_edge_distance(dm, 0, (t.u_path[1], t.v_path[1]))


def test_cyclomatic_number():
    assert cyclomatic_number(path_graph(5)) == 0
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    assert cyclomatic_number(star) == 0
    for params in [(2, 2, 2), (2, 3, 4), (1, 2, 2)]:
        assert cyclomatic_number(theta_graph(ThetaParams(*params)).graph) == 2
    with pytest.raises(DisconnectedGraphError):
        cyclomatic_number(build_graph(4, [(0, 1), (2, 3)]))


def test_daisy_cyclomatic_number_counts_petals():
    from thetadim.daisy import DaisyParams, daisy_graph

    for petals in [(3, 3), (4, 5, 6), (3, 3, 3, 3)]:
        g, _ = daisy_graph(DaisyParams(petals))
        assert cyclomatic_number(g) == len(petals)


def test_degree_predicates():
    c7 = cycle_graph(7)
    assert is_cycle(c7) and min_degree(c7) == 2 and is_connected(c7)

    t = theta_graph(ThetaParams(1, 2, 2)).graph
    assert min_degree(t) == 2 and not is_cycle(t)

    k4 = complete_graph(4)
    assert min_degree(k4) == 3 and not is_cycle(k4)

    assert not is_cycle(path_graph(3))


def test_blocks_theta_is_single_block():
    g = theta_graph(ThetaParams(2, 3, 4)).graph
    dec = block_decomposition(g)
    assert len(dec.block_edges) == 1
    assert dec.cut_vertices == ()
    assert is_two_connected(g)


def test_blocks_two_cycles_sharing_vertex():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]
    dec = block_decomposition(build_graph(7, edges))
    assert len(dec.block_edges) == 2
    assert dec.cut_vertices == (0,)
    assert dec.nontrivial == (True, True)


def test_blocks_path():
    dec = block_decomposition(path_graph(3))
    assert len(dec.block_edges) == 2
    assert dec.cut_vertices == (1,)
    assert dec.nontrivial == (False, False)
    assert not is_two_connected(path_graph(3))


def test_random_distance_properties():
    rng = random.Random(1234)
    for _ in range(1000):
        n = rng.randrange(2, 13)
        g = random_connected_graph(rng, n)
        dm = all_pairs_distances(g)
        d = dm.dist
        assert (d == d.T).all()
        assert all(d[v, v] == 0 for v in range(n))
        for u in range(n):
            for v in range(n):
                assert (d[u, v] == 1) == g.has_edge(u, v)
                for w in range(n):
                    assert d[u, w] <= d[u, v] + d[v, w]


def test_random_blocks_partition_edges_and_cyclomatic_sum():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randrange(2, 13)
        g = random_connected_graph(rng, n)
        dec = block_decomposition(g)
        seen = [e for be in dec.block_edges for e in be]
        assert sorted(seen) == list(g.edges)
        assert len(seen) == len(set(seen))
        total = 0
        for be, verts in zip(dec.block_edges, dec.blocks):
            total += len(be) - len(verts) + 1
        assert total == cyclomatic_number(g) >= 0


def test_vertex_edge_distance_matches_endpoint_bfs():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(3, 11)
        g = random_connected_graph(rng, n)
        dm = all_pairs_distances(g)
        for e in g.edges:
            du = bfs_distances(g.edges, n, e[0])
            dv = bfs_distances(g.edges, n, e[1])
            for s in range(n):
                assert vertex_edge_distance(dm, s, e) == min(du[s], dv[s])


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(min_value=2, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in enumerate(parents, start=1)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    for a, b in extra:
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return build_graph(n, sorted(edges))


@settings(max_examples=120, deadline=None)
@given(connected_graphs())
def test_distance_matrix_properties_hypothesis(g):
    dm = all_pairs_distances(g)
    d = dm.dist
    assert (d == d.T).all()
    assert (d.diagonal() == 0).all()
    for u, v in g.edges:
        assert d[u, v] == 1
