#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Run:  python benchmarks/bench_backends.py [--full]

Workloads:
  enumerate   leafless-graph enumeration (n = 6, plus n = 7 with --full)
  solve       dim and edim of every theta graph with p+q+r <= 15
  extremal    all two-subset refutations on theta(6,6,6)
"""

from __future__ import annotations

import argparse
import time
from math import comb

import numpy as np

from thetadim._core import pure, tables

try:
    from thetadim._core import _speedups as fast
except ImportError:
    fast = None

from thetadim.graphs import all_pairs_distances
from thetadim.solver import GeneratorKind, target_matrix
from thetadim.theta import ThetaParams, iter_theta_params, theta_graph


def time_it(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_enumerate(backend, n):
    tbl = tables.get_tables(n)
    backend.leafless_canonical_masks(tbl)


def bench_solve(backend, max_sum=15):
    for params in iter_theta_params(max_sum):
        theta = theta_graph(params)
        dm = all_pairs_distances(theta.graph)
        for kind in (GeneratorKind.VERTEX, GeneratorKind.EDGE):
            D = target_matrix(theta.graph, dm, kind)
            pool = np.arange(theta.graph.n, dtype=np.int32)
            for k in range(1, theta.graph.n + 1):
                if backend.scan_combinations(D, pool, list(range(k)), comb(len(pool), k), -1):
                    break


def bench_extremal(backend):
    theta = theta_graph(ThetaParams(6, 6, 6))
    dm = all_pairs_distances(theta.graph)
    D = target_matrix(theta.graph, dm, GeneratorKind.VERTEX)
    pool = np.arange(theta.graph.n, dtype=np.int32)
    assert backend.scan_combinations(D, pool, [0, 1], comb(len(pool), 2), -1) is None


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the n=7 enumeration")
    args = parser.parse_args()

    if fast is None:
        print("compiled extension not available; timing the pure backend only")
    backends = [("pure", pure)] + ([("compiled", fast)] if fast else [])

    workloads = [("enumerate n=6", lambda b: bench_enumerate(b, 6))]
    if args.full:
        workloads.append(("enumerate n=7", lambda b: bench_enumerate(b, 7)))
    workloads += [
        ("theta solve <=15", bench_solve),
        ("refute theta(6,6,6)", bench_extremal),
    ]

    print(f"{'workload':<22}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, work in workloads:
        times = []
        for _name, backend in backends:
            repeat = 1 if "n=7" in label else 3
            times.append(time_it(lambda: work(backend), repeat=repeat))
        row = f"{label:<22}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
