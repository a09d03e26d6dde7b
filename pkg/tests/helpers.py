"""Shared test utilities: independent oracles and graph generators."""

from __future__ import annotations

import itertools
import random
from collections import deque

from thetadim.graphs import Graph, build_graph


def bfs_distances(edges, n: int, source: int) -> list[int]:
    """Plain BFS used as an oracle, independent of the library's code."""
    adj = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    dist = [-1] * n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def random_connected_graph(rng: random.Random, n: int, min_deg: int = 0) -> Graph:
    """Rejection-sample a random connected graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        prob = rng.uniform(0.3, 0.75)
        edges = [e for e in pairs if rng.random() < prob]
        g = build_graph(n, edges)
        degs = [g.degree(v) for v in range(n)]
        if min(degs, default=0) < min_deg:
            continue
        if -1 not in bfs_distances(edges, n, 0):
            return g


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(itertools.combinations(range(n), 2)))
