"""Leafless-graph enumeration, classification and bound scanning.

The scan computes both metric dimensions for every input graph, checks
them against the 2c(G)-1 ceiling (cycles are recorded but exempt) and
compares observed equality with the equality predicted from the graph's
classification.  Reports are fully deterministic: records are sorted by
canonical form and contain no timing data, so identical sources give
byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from thetadim import _core
from thetadim.daisy import is_daisy
from thetadim.errors import BudgetExceededError
from thetadim.formats import to_graph6
from thetadim.graphs import (
    Graph,
    build_graph,
    block_decomposition,
    cyclomatic_number,
    is_connected,
    is_cycle,
    min_degree,
)
from thetadim.solver import DEFAULT_BUDGET, GeneratorKind, metric_dimension
from thetadim.theta import is_dim_extremal, is_edim_extremal, is_theta

ENUM_MIN_N = 3
ENUM_MAX_N = _core.MAX_N  # 7: built-in enumeration cap, use graph6 streams beyond

TAG_CYCLE = "Cycle"
TAG_DAISY_EVEN = "DaisyNoOddPetals"
TAG_DAISY_ODD = "DaisyWithOddPetal"
TAG_THETA_DIM_EXTREMAL = "ThetaDimExtremal"
TAG_THETA_EDIM_EXTREMAL = "ThetaEdimExtremal"
TAG_OTHER_2CONN = "Other2Connected"
TAG_HAS_CUT_VERTEX = "HasCutVertex"


@dataclass(frozen=True)
class GraphClassification:
    """Structural tags plus the equality predictions they imply."""

    tags: tuple[str, ...]
    theta_params: tuple[int, int, int] | None = None
    petal_lengths: tuple[int, ...] | None = None

    @property
    def dim_equality_predicted(self) -> bool:
        return TAG_DAISY_EVEN in self.tags or TAG_THETA_DIM_EXTREMAL in self.tags

    @property
    def edim_equality_predicted(self) -> bool:
        return (
            TAG_DAISY_EVEN in self.tags
            or TAG_DAISY_ODD in self.tags
            or TAG_THETA_EDIM_EXTREMAL in self.tags
        )


def classify(g: Graph) -> GraphClassification:
    """Tag a connected min-degree-2 graph for the equality predictions."""
    if not is_connected(g):
        raise ValueError("classification needs a connected graph")
    if min_degree(g) < 2:
        raise ValueError("classification needs minimum degree >= 2")
    tags: list[str] = []
    theta_params = None
    petals = None
    if is_cycle(g):
        tags.append(TAG_CYCLE)
    else:
        theta = is_theta(g)
        if theta is not None:
            p, q, r = theta.params.as_tuple()
            tags.append(f"Theta({p},{q},{r})")
            theta_params = (p, q, r)
            if is_dim_extremal(theta.params):
                tags.append(TAG_THETA_DIM_EXTREMAL)
            if is_edim_extremal(theta.params):
                tags.append(TAG_THETA_EDIM_EXTREMAL)
        else:
            daisy = is_daisy(g)
            if daisy is not None:
                petals = daisy.petal_lengths
                if any(length % 2 for length in petals):
                    tags.append(TAG_DAISY_ODD)
                else:
                    tags.append(TAG_DAISY_EVEN)
    dec = block_decomposition(g)
    if dec.cut_vertices:
        tags.append(TAG_HAS_CUT_VERTEX)
    elif g.n >= 3 and not tags:
        tags.append(TAG_OTHER_2CONN)
    return GraphClassification(
        tags=tuple(tags), theta_params=theta_params, petal_lengths=petals
    )


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string: the relabeling with the smallest
    adjacency bit string.  Exact for n <= 7; larger graphs keep their
    own labeling (enumeration never produces those)."""
    if g.n < 2 or g.n > ENUM_MAX_N:
        return to_graph6(g)
    tbl = _core.get_tables(g.n)
    mask = tbl.mask_from_edges(g.edges)
    best = int(_core.canonical_mask(tbl, mask))
    if best == mask:
        return to_graph6(g)
    return to_graph6(build_graph(g.n, tbl.edges_from_mask(best)))


def enumerate_leafless(n: int) -> Iterator[Graph]:
    """All connected graphs with min degree >= 2 on n <= 7 vertices, one
    per isomorphism class, in ascending canonical order."""
    if not (ENUM_MIN_N <= n <= ENUM_MAX_N):
        raise ValueError(
            f"built-in enumeration supports n = {ENUM_MIN_N}..{ENUM_MAX_N}; "
            "ingest a graph6 stream for larger graphs"
        )
    tbl = _core.get_tables(n)
    for mask in _core.leafless_canonical_masks(tbl).tolist():
        yield build_graph(n, tbl.edges_from_mask(mask))


@dataclass(frozen=True)
class GraphRecord:
    canonical: str
    n: int
    m: int
    c: int
    tags: tuple[str, ...]
    dim: int
    edim: int
    dim_witness: tuple[int, ...]
    edim_witness: tuple[int, ...]
    dim_slack: int
    edim_slack: int
    dim_equality_predicted: bool
    edim_equality_predicted: bool
    cycle_exempt: bool


@dataclass(frozen=True)
class Finding:
    canonical: str
    kind: str  # "vertex" | "edge"
    what: str  # "bound-violation" | "equality-mismatch"
    value: int
    bound: int
    predicted_equality: bool


@dataclass(frozen=True)
class SkippedGraph:
    canonical: str
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    scanned: int
    records: tuple[GraphRecord, ...]
    violations: tuple[Finding, ...]
    equality_mismatches: tuple[Finding, ...]
    skipped: tuple[SkippedGraph, ...]

    @property
    def findings(self) -> int:
        return len(self.violations) + len(self.equality_mismatches)

    def to_json(self) -> str:
        payload = {
            "scanned": self.scanned,
            "records": [asdict(r) for r in self.records],
            "violations": [asdict(f) for f in self.violations],
            "equality_mismatches": [asdict(f) for f in self.equality_mismatches],
            "skipped": [asdict(s) for s in self.skipped],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        def _tup(d, keys):
            return {
                k: tuple(v) if k in keys and v is not None else v
                for k, v in d.items()
            }

        raw = json.loads(text)
        rec_tuples = {"tags", "dim_witness", "edim_witness"}
        return cls(
            scanned=raw["scanned"],
            records=tuple(GraphRecord(**_tup(r, rec_tuples)) for r in raw["records"]),
            violations=tuple(Finding(**f) for f in raw["violations"]),
            equality_mismatches=tuple(
                Finding(**f) for f in raw["equality_mismatches"]
            ),
            skipped=tuple(SkippedGraph(**s) for s in raw["skipped"]),
        )

    def to_text(self) -> str:
        lines = [f"scanned {self.scanned} graphs"]
        for r in self.records:
            lines.append(
                f"  {r.canonical}  n={r.n} m={r.m} c={r.c} "
                f"dim={r.dim} edim={r.edim} "
                f"slack=({r.dim_slack},{r.edim_slack}) "
                f"tags={','.join(r.tags) or '-'}"
            )
        for f in self.violations:
            lines.append(
                f"VIOLATION {f.canonical} {f.kind}: value {f.value} exceeds bound {f.bound}"
            )
        for f in self.equality_mismatches:
            lines.append(
                f"MISMATCH {f.canonical} {f.kind}: value {f.value}, bound {f.bound}, "
                f"classification predicts equality={f.predicted_equality}"
            )
        for s in self.skipped:
            lines.append(f"SKIPPED {s.canonical}: {s.reason}")
        lines.append(
            f"findings: {len(self.violations)} violations, "
            f"{len(self.equality_mismatches)} equality mismatches, "
            f"{len(self.skipped)} skipped"
        )
        return "\n".join(lines) + "\n"


def check_graph(
    g: Graph, *, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> GraphRecord:
    """Compute both dimensions, slacks and predicted equalities for one
    connected min-degree-2 graph."""
    cls = classify(g)
    c = cyclomatic_number(g)
    bound = 2 * c - 1
    dim_res = metric_dimension(g, GeneratorKind.VERTEX, budget=budget, threads=threads)
    edim_res = metric_dimension(g, GeneratorKind.EDGE, budget=budget, threads=threads)
    return GraphRecord(
        canonical=canonical_form(g),
        n=g.n,
        m=g.m,
        c=c,
        tags=cls.tags,
        dim=dim_res.value,
        edim=edim_res.value,
        dim_witness=dim_res.witness.vertices,
        edim_witness=edim_res.witness.vertices,
        dim_slack=bound - dim_res.value,
        edim_slack=bound - edim_res.value,
        dim_equality_predicted=cls.dim_equality_predicted,
        edim_equality_predicted=cls.edim_equality_predicted,
        cycle_exempt=TAG_CYCLE in cls.tags,
    )


def _record_findings(rec: GraphRecord) -> tuple[list[Finding], list[Finding]]:
    violations = []
    mismatches = []
    bound = 2 * rec.c - 1
    for kind, value, slack, predicted in (
        ("vertex", rec.dim, rec.dim_slack, rec.dim_equality_predicted),
        ("edge", rec.edim, rec.edim_slack, rec.edim_equality_predicted),
    ):
        if not rec.cycle_exempt and slack < 0:
            violations.append(
                Finding(rec.canonical, kind, "bound-violation", value, bound, predicted)
            )
        if (slack == 0) != predicted:
            mismatches.append(
                Finding(rec.canonical, kind, "equality-mismatch", value, bound, predicted)
            )
    return violations, mismatches


def scan(
    graphs: Iterable[Graph], *, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> VerificationReport:
    """Aggregate check_graph over a source; budget errors are recorded
    as skipped instead of aborting the sweep."""
    records = []
    skipped = []
    count = 0
    for g in graphs:
        count += 1
        try:
            records.append(check_graph(g, budget=budget, threads=threads))
        except BudgetExceededError as exc:
            skipped.append(SkippedGraph(canonical=canonical_form(g), reason=str(exc)))
    records.sort(key=lambda r: r.canonical)
    skipped.sort(key=lambda s: s.canonical)
    violations: list[Finding] = []
    mismatches: list[Finding] = []
    for rec in records:
        v, m = _record_findings(rec)
        violations.extend(v)
        mismatches.extend(m)
    return VerificationReport(
        scanned=count,
        records=tuple(records),
        violations=tuple(violations),
        equality_mismatches=tuple(mismatches),
        skipped=tuple(skipped),
    )
