import itertools

import pytest

from helpers import complete_graph, cycle_graph, path_graph
from thetadim.daisy import DaisyParams, daisy_graph, glue_at_vertex
from thetadim.graphs import build_graph, is_connected, min_degree
from thetadim.harness import (
    TAG_CYCLE,
    TAG_DAISY_EVEN,
    TAG_DAISY_ODD,
    TAG_HAS_CUT_VERTEX,
    TAG_OTHER_2CONN,
    TAG_THETA_DIM_EXTREMAL,
    TAG_THETA_EDIM_EXTREMAL,
    canonical_form,
    check_graph,
    classify,
    enumerate_leafless,
    scan,
)
from thetadim.harness import VerificationReport
from thetadim.theta import ThetaParams, is_theta, theta_graph

# counts confirmed by an independent oracle: brute force over all labeled
# graphs, deduplicated with networkx.is_isomorphic (n <= 6) and with a
# vectorized min-over-permutations canonicalization (n = 7)
LEAFLESS_COUNTS = {3: 1, 4: 3, 5: 11, 6: 61, 7: 507}


def test_enumerate_n3_is_just_the_triangle():
    gs = list(enumerate_leafless(3))
    assert len(gs) == 1
    assert gs[0].edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_enumerate_counts_match_oracle(n):
    assert len(list(enumerate_leafless(n))) == LEAFLESS_COUNTS[n]


def test_enumerate_n4_members():
    got = {canonical_form(g) for g in enumerate_leafless(4)}
    want = {
        canonical_form(cycle_graph(4)),
        canonical_form(complete_graph(4)),
        canonical_form(theta_graph(ThetaParams(1, 2, 2)).graph),
    }
    assert got == want


def test_enumerate_iso_dedup_matches_networkx_oracle():
    nx = pytest.importorskip("networkx")
    n = 5
    reps = []
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        g = build_graph(n, edges)
        if min_degree(g) < 2 or not is_connected(g):
            continue
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if not any(nx.is_isomorphic(G, R) for R in reps):
            reps.append(G)
    assert len(reps) == len(list(enumerate_leafless(5)))


def test_enumerate_outputs_are_valid_and_distinct():
    for n in (4, 5, 6):
        forms = []
        for g in enumerate_leafless(n):
            assert g.n == n
            assert min_degree(g) >= 2
            assert is_connected(g)
            forms.append(canonical_form(g))
        assert len(forms) == len(set(forms))
        assert forms == sorted(forms)


def test_enumerate_n5_contains_expected_thetas():
    found = set()
    for g in enumerate_leafless(5):
        t = is_theta(g)
        if t is not None:
            found.add(t.params.as_tuple())
    assert {(2, 2, 2), (1, 2, 3)} <= found


def test_enumerate_rejects_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_leafless(2))
    with pytest.raises(ValueError):
        list(enumerate_leafless(12))


def test_classify_theta_tags():
    # theta(3,3,5) sits in both extremal families: it is the p=3 member
    # of the p,p,p+2 family and one of the seven edge-extremal graphs
    cls = classify(theta_graph(ThetaParams(3, 3, 5)).graph)
    assert "Theta(3,3,5)" in cls.tags
    assert TAG_THETA_EDIM_EXTREMAL in cls.tags
    assert TAG_THETA_DIM_EXTREMAL in cls.tags
    assert cls.edim_equality_predicted and cls.dim_equality_predicted

    cls = classify(theta_graph(ThetaParams(3, 3, 6)).graph)
    assert "Theta(3,3,6)" in cls.tags
    assert TAG_THETA_DIM_EXTREMAL not in cls.tags
    assert TAG_THETA_EDIM_EXTREMAL not in cls.tags

    cls = classify(theta_graph(ThetaParams(2, 2, 3)).graph)
    assert TAG_THETA_EDIM_EXTREMAL in cls.tags
    assert TAG_THETA_DIM_EXTREMAL not in cls.tags
    assert cls.edim_equality_predicted and not cls.dim_equality_predicted

    cls = classify(theta_graph(ThetaParams(3, 3, 3)).graph)
    assert TAG_THETA_DIM_EXTREMAL in cls.tags and TAG_THETA_EDIM_EXTREMAL in cls.tags


def test_classify_daisy_tags():
    g, _ = daisy_graph(DaisyParams((4, 6)))
    cls = classify(g)
    assert TAG_DAISY_EVEN in cls.tags and TAG_HAS_CUT_VERTEX in cls.tags
    assert cls.dim_equality_predicted and cls.edim_equality_predicted

    g, _ = daisy_graph(DaisyParams((3, 4)))
    cls = classify(g)
    assert TAG_DAISY_ODD in cls.tags
    assert not cls.dim_equality_predicted and cls.edim_equality_predicted


def test_classify_cycle_k4_and_cut_vertex():
    assert classify(cycle_graph(5)).tags == (TAG_CYCLE,)
    assert classify(complete_graph(4)).tags == (TAG_OTHER_2CONN,)
    t = theta_graph(ThetaParams(2, 2, 2))
    glued = glue_at_vertex(t.graph, t.u, cycle_graph(4), 0)
    assert classify(glued).tags == (TAG_HAS_CUT_VERTEX,)


def test_classify_rejects_leafy_or_disconnected():
    with pytest.raises(ValueError):
        classify(path_graph(3))
    with pytest.raises(ValueError):
        classify(build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_check_graph_theta222():
    rec = check_graph(theta_graph(ThetaParams(2, 2, 2)).graph)
    assert rec.dim == 3 and rec.dim_slack == 0 and rec.dim_equality_predicted
    assert rec.edim == 3 and rec.edim_slack == 0 and rec.edim_equality_predicted


def test_check_graph_theta234():
    rec = check_graph(theta_graph(ThetaParams(2, 3, 4)).graph)
    assert rec.dim == 2 and rec.dim_slack == 1 and not rec.dim_equality_predicted


def test_check_graph_k4():
    rec = check_graph(complete_graph(4))
    assert rec.c == 3 and rec.dim == 3 and rec.dim_slack == 2
    assert not rec.cycle_exempt


def test_check_graph_cycle_is_exempt():
    rec = check_graph(cycle_graph(6))
    assert rec.cycle_exempt
    assert rec.dim == 2 and rec.c == 1 and rec.dim_slack < 0


def test_scan_empty_source():
    rep = scan([])
    assert rep.scanned == 0 and rep.records == () and rep.findings == 0


def test_scan_n5_is_clean_and_deterministic():
    gs = list(enumerate_leafless(5))
    rep1 = scan(gs)
    rep2 = scan(gs)
    assert rep1.scanned == 11
    assert rep1.violations == () and rep1.equality_mismatches == ()
    assert rep1.to_json() == rep2.to_json()
    assert rep1.to_text() == rep2.to_text()
    # nothing in a leafless corpus is a path, so no dimension drops to 1
    assert all(r.dim >= 2 and r.edim >= 2 for r in rep1.records)


def test_scan_cycles_do_not_trip_bound_findings():
    rep = scan([cycle_graph(n) for n in (3, 4, 5, 6, 7)])
    assert rep.findings == 0
    assert all(r.cycle_exempt for r in rep.records)


def test_scan_skips_on_budget():
    rep = scan(list(enumerate_leafless(4)), budget=10)
    assert rep.scanned == 3
    assert len(rep.skipped) == 3 and not rep.records


def test_report_json_round_trip():
    rep = scan(list(enumerate_leafless(4)))
    again = VerificationReport.from_json(rep.to_json())
    assert again == rep


def test_scan_theta_stream_equality_matches_predictions():
    graphs = [theta_graph(p).graph for p in
              [ThetaParams(2, 2, 2), ThetaParams(2, 2, 3), ThetaParams(2, 3, 4),
               ThetaParams(3, 3, 5), ThetaParams(2, 2, 4)]]
    rep = scan(graphs)
    assert rep.findings == 0
    for rec in rep.records:
        assert (rec.dim_slack == 0) == rec.dim_equality_predicted
        assert (rec.edim_slack == 0) == rec.edim_equality_predicted


def test_canonical_form_is_isomorphism_invariant():
    t = theta_graph(ThetaParams(2, 2, 3)).graph
    perm = [3, 5, 0, 1, 4, 2]
    relabeled = build_graph(6, [(perm[a], perm[b]) for a, b in t.edges])
    assert canonical_form(t) == canonical_form(relabeled)
    assert canonical_form(t) != canonical_form(cycle_graph(6))
