"""Verification sweeps: run family predictions against the exhaustive
solver and report structured pass/fail results."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from thetadim.daisy import DaisyParams, daisy_graph
from thetadim.graphs import (
    Graph,
    all_pairs_distances,
    build_graph,
    is_connected,
    min_degree,
)
from thetadim.solver import (
    GeneratorKind,
    LandmarkSet,
    extend_to_generator,
    is_generator,
    metric_dimension,
)
from thetadim.theta import (
    EDGE_EXTREMAL_PARAMS,
    ThetaParams,
    dim2_case,
    dim2_generator,
    edim2_case,
    edim2_generator,
    is_dim_extremal,
    is_edim_extremal,
    iter_theta_params,
    nice_set_generator,
    theta_graph,
)

DEFAULT_SWEEP_SUM = 18
DEFAULT_SEED = 20240801


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    case_counts: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def bump(self, case: str) -> None:
        self.case_counts[case] = self.case_counts.get(case, 0) + 1


def theorem_sweep(max_sum: int = DEFAULT_SWEEP_SUM, *, threads: int = 1) -> SweepResult:
    """Brute-force both dimensions of every theta with p+q+r <= max_sum
    and compare against the closed-form predictions."""
    from thetadim.theta import predicted_dim, predicted_edim

    res = SweepResult(name="theorems")
    dim3, edim3 = [], []
    for params in iter_theta_params(max_sum):
        theta = theta_graph(params)
        res.checked += 1
        got_dim = metric_dimension(theta.graph, GeneratorKind.VERTEX, threads=threads).value
        got_edim = metric_dimension(theta.graph, GeneratorKind.EDGE, threads=threads).value
        want_dim, want_edim = predicted_dim(params), predicted_edim(params)
        res.bump(f"dim={want_dim}")
        res.bump(f"edim={want_edim}")
        if got_dim != want_dim:
            res.failures.append(
                f"{params}: dim is {got_dim}, predicted {want_dim}"
            )
        if got_edim != want_edim:
            res.failures.append(
                f"{params}: edim is {got_edim}, predicted {want_edim}"
            )
        if got_dim == 3:
            dim3.append(params.as_tuple())
        if got_edim == 3:
            edim3.append(params.as_tuple())
    res.extra["dim3"] = dim3
    res.extra["edim3"] = edim3
    return res


def dim2_sweep(max_sum: int = DEFAULT_SWEEP_SUM) -> SweepResult:
    """Every non-extremal theta gets its two-vertex recipe checked."""
    res = SweepResult(name="lemma-dim2")
    for params in iter_theta_params(max_sum):
        if is_dim_extremal(params):
            continue
        res.checked += 1
        res.bump(dim2_case(params))
        theta = theta_graph(params)
        s = dim2_generator(params)  # self-verifying, raises on failure
        check = is_generator(theta.graph, s)
        if not check:
            res.failures.append(
                f"{params} case {dim2_case(params)}: "
                f"{s.vertices} misses pair {check.collision}"
            )
    return res


def edim2_sweep(max_sum: int = DEFAULT_SWEEP_SUM) -> SweepResult:
    """Every non-edge-extremal theta gets its two-vertex edge recipe checked."""
    res = SweepResult(name="lemma-edim2")
    for params in iter_theta_params(max_sum):
        if is_edim_extremal(params):
            continue
        res.checked += 1
        res.bump(edim2_case(params))
        theta = theta_graph(params)
        s = edim2_generator(params)
        check = is_generator(theta.graph, s)
        if not check:
            res.failures.append(
                f"{params} case {edim2_case(params)}: "
                f"{s.vertices} misses pair {check.collision}"
            )
    return res


def _dim_extremal_params(p_values) -> list[ThetaParams]:
    out = []
    for p in p_values:
        out.append(ThetaParams(p, p, p))
        out.append(ThetaParams(p, p, p + 2))
    return out


def nice_set_sweep(p_values=(2, 3, 4, 5), *, threads: int = 1) -> SweepResult:
    """On both extremal families: every vertex extends to a passing
    three-landmark nice set, and no two-vertex set distinguishes."""
    res = SweepResult(name="lemma7")
    for params in _dim_extremal_params(p_values):
        theta = theta_graph(params)
        g = theta.graph
        label = f"{params}"
        for a in range(g.n):
            res.checked += 1
            s = nice_set_generator(theta, a)
            if a not in s.vertices:
                res.failures.append(f"{label}: nice set {s.vertices} misses vertex {a}")
            if not is_generator(g, s):
                res.failures.append(f"{label}: nice set {s.vertices} fails for vertex {a}")
            ext = extend_to_generator(g, a, 3, GeneratorKind.VERTEX, threads=threads)
            if ext is None:
                res.failures.append(f"{label}: no size-3 generator contains vertex {a}")
        dm = all_pairs_distances(g)
        for pair in itertools.combinations(range(g.n), 2):
            check = is_generator(g, LandmarkSet(pair, GeneratorKind.VERTEX), dm)
            if check:
                res.failures.append(f"{label}: two-vertex set {pair} distinguishes")
        res.bump(f"p={params.p},r={params.r}")
    return res


def edge_extremal_sweep(*, threads: int = 1) -> SweepResult:
    """On the seven edge-extremal graphs: every vertex lies in some
    three-landmark edge generator and no two-vertex edge set works."""
    res = SweepResult(name="lemma9")
    for params in EDGE_EXTREMAL_PARAMS:
        theta = theta_graph(params)
        g = theta.graph
        label = f"{params}"
        for a in range(g.n):
            res.checked += 1
            ext = extend_to_generator(g, a, 3, GeneratorKind.EDGE, threads=threads)
            if ext is None:
                res.failures.append(f"{label}: no size-3 edge generator contains {a}")
        value = metric_dimension(g, GeneratorKind.EDGE, threads=threads).value
        if value != 3:
            res.failures.append(f"{label}: edge dimension is {value}, expected 3")
        res.bump(label)
    return res


def _iter_daisies(petal_values, max_k: int):
    for k in range(2, max_k + 1):
        for lengths in itertools.combinations_with_replacement(petal_values, k):
            yield DaisyParams(lengths)


def daisy_sweep(
    max_petal: int = 7,
    max_k: int = 3,
    even_lengths=(4, 6, 8),
    *,
    threads: int = 1,
) -> SweepResult:
    """Daisy equality pattern: dim reaches 2k-1 exactly on all-even
    daisies, edim reaches it on every daisy."""
    res = SweepResult(name="daisy")
    seen: set[tuple[int, ...]] = set()
    small = list(_iter_daisies(range(3, max_petal + 1), max_k))
    even = list(_iter_daisies(even_lengths, max_k))
    for params in small + even:
        if params.petal_lengths in seen:
            continue
        seen.add(params.petal_lengths)
        g, _center = daisy_graph(params)
        k = params.k
        bound = 2 * k - 1
        label = f"daisy{list(params.petal_lengths)}"
        all_even = all(length % 2 == 0 for length in params.petal_lengths)
        res.checked += 1
        dim = metric_dimension(g, GeneratorKind.VERTEX, threads=threads).value
        if all_even:
            res.bump("even-dim")
            if dim != bound:
                res.failures.append(f"{label}: dim {dim}, expected {bound}")
        else:
            res.bump("odd-dim")
            if dim >= bound:
                res.failures.append(f"{label}: dim {dim} not below {bound}")
        if max(params.petal_lengths) <= max_petal:
            edim = metric_dimension(g, GeneratorKind.EDGE, threads=threads).value
            res.bump("edim")
            if edim != bound:
                res.failures.append(f"{label}: edim {edim}, expected {bound}")
    return res


def random_leafless_graph(rng: random.Random, n: int) -> Graph:
    """Seeded random connected graph with minimum degree >= 2."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        prob = rng.uniform(0.35, 0.7)
        edges = [e for e in pairs if rng.random() < prob]
        g = build_graph(n, edges)
        if min_degree(g) >= 2 and is_connected(g):
            return g


def oracle_selfcheck(
    count: int = 200, seed: int = DEFAULT_SEED, max_n: int = 9, *, threads: int = 1
) -> SweepResult:
    """Solver self-consistency on seeded random graphs: the witness
    passes, stays a generator under any one-vertex extension, and no
    smaller set passes (checked by full enumeration)."""
    res = SweepResult(name="oracle")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(4, max_n + 1)
        g = random_leafless_graph(rng, n)
        dm = all_pairs_distances(g)
        res.checked += 1
        for kind in (GeneratorKind.VERTEX, GeneratorKind.EDGE):
            result = metric_dimension(g, kind, threads=threads)
            witness = result.witness
            label = f"n={g.n} m={g.m} {kind.value}"
            if not is_generator(g, witness, dm):
                res.failures.append(f"{label}: witness {witness.vertices} fails")
            for x in range(g.n):
                if x in witness.vertices:
                    continue
                bigger = LandmarkSet(witness.vertices + (x,), kind)
                if not is_generator(g, bigger, dm):
                    res.failures.append(
                        f"{label}: adding {x} to {witness.vertices} breaks it"
                    )
            for smaller in itertools.combinations(range(g.n), result.value - 1):
                if is_generator(g, LandmarkSet(smaller, kind), dm):
                    res.failures.append(
                        f"{label}: smaller set {smaller} beats witness {witness.vertices}"
                    )
                    break
            res.bump(kind.value)
    return res
