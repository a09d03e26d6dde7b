"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with:  pytest tests/test_acceptance.py -v -s
"""

import itertools
import random
import time

from helpers import random_connected_graph
from thetadim import sweeps
from thetadim.daisy import DaisyParams, daisy_graph
from thetadim.formats import from_graph6, read_edge_list, to_graph6, write_edge_list
from thetadim.graphs import all_pairs_distances
from thetadim.harness import enumerate_leafless, scan
from thetadim.solver import GeneratorKind, LandmarkSet, is_generator, metric_dimension
from thetadim.theta import EDGE_EXTREMAL_PARAMS, theta_graph

SWEEP_SUM = 18


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_vertex_theorem_sweep():
    start = time.perf_counter()
    res = sweeps.theorem_sweep(SWEEP_SUM)
    elapsed = time.perf_counter() - start
    ok = res.ok and elapsed < 120
    _report(
        1,
        ok,
        f"dim matches prediction on {res.checked} theta graphs "
        f"(p+q+r <= {SWEEP_SUM}) in {elapsed:.1f}s; failures: {res.failures[:3]}",
    )


def test_criterion_2_edge_theorem_sweep_equality_set():
    res = sweeps.theorem_sweep(SWEEP_SUM)
    expected = {
        (1, 2, 2), (2, 2, 2), (2, 2, 3), (2, 2, 4), (3, 3, 3), (3, 3, 4), (3, 3, 5),
    }
    got = set(res.extra["edim3"])
    ok = res.ok and got == expected
    _report(
        2,
        ok,
        f"edim matches prediction on {res.checked} theta graphs; "
        f"edim=3 exactly on {sorted(got)}",
    )


def test_criterion_3_dim2_recipe_sweep():
    res = sweeps.dim2_sweep(SWEEP_SUM)
    cases = {c: res.case_counts.get(c, 0) for c in
             ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")}
    ok = res.ok and all(v > 0 for v in cases.values())
    _report(
        3,
        ok,
        f"all {res.checked} two-landmark vertex recipes verified; "
        f"case coverage {cases}",
    )


def test_criterion_4_edim2_recipe_sweep():
    res = sweeps.edim2_sweep(SWEEP_SUM)
    cases = {c: res.case_counts.get(c, 0) for c in ("i", "ii", "iii", "iv", "v")}
    ok = res.ok and all(v > 0 for v in cases.values())
    _report(
        4,
        ok,
        f"all {res.checked} two-landmark edge recipes verified; case coverage {cases}",
    )


def test_criterion_5_nice_sets_and_no_two_subsets():
    res = sweeps.nice_set_sweep(p_values=(2, 3, 4, 5))
    ok = res.ok and res.checked == sum(
        (3 * p - 1) + (3 * p + 1) for p in (2, 3, 4, 5)
    )
    _report(
        5,
        ok,
        f"nice sets pass for every vertex of both extremal families, p in 2..5 "
        f"({res.checked} vertices), and every two-subset fails; "
        f"failures: {res.failures[:3]}",
    )


def test_criterion_6_edge_extremal_graphs():
    start = time.perf_counter()
    res = sweeps.edge_extremal_sweep()
    failures = list(res.failures)
    for params in EDGE_EXTREMAL_PARAMS:
        g = theta_graph(params).graph
        dm = all_pairs_distances(g)
        for pair in itertools.combinations(range(g.n), 2):
            if is_generator(g, LandmarkSet(pair, GeneratorKind.EDGE), dm):
                failures.append(f"theta{params.as_tuple()}: edge pair {pair} works")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    _report(
        6,
        ok,
        f"on all 7 edge-extremal graphs every vertex extends to a size-3 edge "
        f"generator and no size-2 edge set works ({elapsed:.1f}s); "
        f"failures: {failures[:3]}",
    )


def test_criterion_7_daisy_suite():
    res = sweeps.daisy_sweep(max_petal=7, max_k=3, even_lengths=(4, 6, 8))
    even_checked = res.case_counts.get("even-dim", 0)
    # multisets of {4,6,8} with k=2,3 plus the all-even ones with petals <= 7
    ok = res.ok and even_checked >= 16
    _report(
        7,
        ok,
        f"daisy dim equals 2k-1 exactly on even-petal daisies "
        f"({even_checked} checked), below it with any odd petal "
        f"({res.case_counts.get('odd-dim', 0)}), and edim always reaches it "
        f"({res.case_counts.get('edim', 0)}); failures: {res.failures[:3]}",
    )


def test_criterion_8_leafless_scan():
    details = []
    ok = True
    for n in (4, 5, 6, 7):
        start = time.perf_counter()
        report = scan(enumerate_leafless(n))
        elapsed = time.perf_counter() - start
        ok = ok and not report.violations and not report.equality_mismatches
        ok = ok and not report.skipped
        if n == 7:
            ok = ok and elapsed < 600
        details.append(f"n={n}: {report.scanned} graphs in {elapsed:.1f}s")
        if report.violations or report.equality_mismatches:
            details.append(
                f"FINDINGS {report.violations + report.equality_mismatches}"
            )
    _report(
        8,
        ok,
        "zero bound violations and equality exactly on classified graphs; "
        + "; ".join(details),
    )


def test_criterion_9_oracle_self_consistency():
    res = sweeps.oracle_selfcheck(count=200, seed=sweeps.DEFAULT_SEED, max_n=9)
    ok = res.ok and res.checked == 200
    _report(
        9,
        ok,
        f"witness minimality and monotonicity hold on {res.checked} seeded "
        f"random leafless graphs (n <= 9); failures: {res.failures[:3]}",
    )


def test_criterion_10_format_round_trips():
    rng = random.Random(424242)
    bad = []
    for i in range(100):
        g = random_connected_graph(rng, rng.randrange(2, 14))
        g6 = to_graph6(g)
        if from_graph6(g6).edges != g.edges or to_graph6(from_graph6(g6)) != g6:
            bad.append(f"graph6 #{i}")
        text = write_edge_list(g)
        back = read_edge_list(text)
        if back.n != g.n or back.edges != g.edges or write_edge_list(back) != text:
            bad.append(f"edgelist #{i}")
    _report(
        10,
        not bad,
        f"100 graphs survive graph6 and edge-list round-trips bit-exactly; "
        f"failures: {bad[:3]}",
    )
