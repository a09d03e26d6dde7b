"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 search budget exceeded, 4 scan produced findings.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from thetadim import _core, harness, sweeps
from thetadim.errors import BudgetExceededError, FormatError
from thetadim.formats import read_edge_list, read_graph6_lines
from thetadim.graphs import Graph, cyclomatic_number
from thetadim.solver import DEFAULT_BUDGET, GeneratorKind, extend_to_generator, metric_dimension
from thetadim.theta import (
    ThetaParams,
    dim2_case,
    dim2_generator,
    edim2_case,
    edim2_generator,
    is_theta,
    nice_set_generator,
    predicted_dim,
    predicted_edim,
    theta_graph,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_FINDINGS = 4


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if fmt == "edgelist":
        return read_edge_list(text)
    if fmt == "graph6":
        graphs = read_graph6_lines(text)
        if len(graphs) != 1:
            raise FormatError(f"{path}: expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    try:
        return read_edge_list(text)
    except FormatError:
        pass
    graphs = read_graph6_lines(text)
    if len(graphs) != 1:
        raise FormatError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def _kind(args) -> GeneratorKind:
    return GeneratorKind.VERTEX if args.kind == "vertex" else GeneratorKind.EDGE


def cmd_dim(args) -> int:
    try:
        g = _load_graph(args.input, args.format)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    kind = _kind(args)
    start = time.perf_counter()
    try:
        result = metric_dimension(g, kind, budget=args.budget, threads=args.threads)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    elapsed = time.perf_counter() - start
    name = "dim" if kind is GeneratorKind.VERTEX else "edim"
    if args.json:
        print(
            json.dumps(
                {
                    "kind": kind.value,
                    "value": result.value,
                    "witness": list(result.witness.vertices),
                    "n": g.n,
                    "m": g.m,
                    "elapsed_s": round(elapsed, 6),
                },
                sort_keys=True,
            )
        )
    else:
        print(f"{name} = {result.value}")
        print(f"witness = {{{', '.join(map(str, result.witness.vertices))}}}")
        theta = is_theta(g)
        if theta is not None:
            named = ", ".join(theta.vertex_name(x) for x in result.witness.vertices)
            print(f"witness on {theta.params} = {{{named}}}")
        print(f"elapsed = {elapsed:.3f} s")
    return EXIT_OK


def _named(theta, s) -> str:
    names = ", ".join(theta.vertex_name(x) for x in s.vertices)
    ids = ", ".join(map(str, s.vertices))
    return f"{{{names}}} = ids {{{ids}}}"


def cmd_theta(args) -> int:
    try:
        params = ThetaParams(args.p, args.q, args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    theta = theta_graph(params)
    g = theta.graph
    out = {
        "params": list(params.as_tuple()),
        "n": g.n,
        "m": g.m,
        "c": cyclomatic_number(g),
        "predicted_dim": predicted_dim(params),
        "predicted_edim": predicted_edim(params),
    }
    if not args.json:
        print(f"{params}: n={g.n} m={g.m} c={out['c']}")
        print(f"predicted dim = {out['predicted_dim']}")
    if out["predicted_dim"] == 2:
        s = dim2_generator(params)
        out["dim_generator"] = list(s.vertices)
        out["dim_case"] = dim2_case(params)
        if not args.json:
            print(f"  two-landmark set {_named(theta, s)}  [case {out['dim_case']}]")
    else:
        s = nice_set_generator(theta, theta.u)
        out["dim_generator"] = list(s.vertices)
        if not args.json:
            print(f"  three-landmark nice set {_named(theta, s)}")
    if not args.json:
        print(f"predicted edim = {out['predicted_edim']}")
    if out["predicted_edim"] == 2:
        s = edim2_generator(params)
        out["edim_generator"] = list(s.vertices)
        out["edim_case"] = edim2_case(params)
        if not args.json:
            print(f"  two-landmark set {_named(theta, s)}  [case {out['edim_case']}]")
    else:
        s = extend_to_generator(g, theta.u, 3, GeneratorKind.EDGE, threads=args.threads)
        out["edim_generator"] = list(s.vertices)
        if not args.json:
            print(f"  three-landmark set {_named(theta, s)}")
    status = EXIT_OK
    if args.check:
        got_dim = metric_dimension(g, GeneratorKind.VERTEX, threads=args.threads).value
        got_edim = metric_dimension(g, GeneratorKind.EDGE, threads=args.threads).value
        out["checked_dim"] = got_dim
        out["checked_edim"] = got_edim
        ok = got_dim == out["predicted_dim"] and got_edim == out["predicted_edim"]
        if not args.json:
            print(f"brute force: dim = {got_dim}, edim = {got_edim} "
                  f"({'matches predictions' if ok else 'PREDICTION MISMATCH'})")
        if not ok:
            status = EXIT_VERIFY_FAILED
    if args.json:
        print(json.dumps(out, sort_keys=True))
    return status


def cmd_verify(args) -> int:
    runners = {
        "theorems": lambda: sweeps.theorem_sweep(args.sum, threads=args.threads),
        "lemma-dim2": lambda: sweeps.dim2_sweep(args.sum),
        "lemma-edim2": lambda: sweeps.edim2_sweep(args.sum),
        "lemma7": lambda: sweeps.nice_set_sweep(threads=args.threads),
        "lemma9": lambda: sweeps.edge_extremal_sweep(threads=args.threads),
        "daisy": lambda: sweeps.daisy_sweep(
            args.max_petal, args.max_k, threads=args.threads
        ),
        "oracle": lambda: sweeps.oracle_selfcheck(
            args.count, args.seed, args.max_n, threads=args.threads
        ),
    }
    result = runners[args.target]()
    print(f"{result.name}: checked {result.checked}")
    for case in sorted(result.case_counts):
        print(f"  case {case}: {result.case_counts[case]}")
    if result.ok:
        print("all checks passed")
        return EXIT_OK
    for failure in result.failures:
        print(f"FAIL {failure}")
    print(f"{len(result.failures)} failures")
    return EXIT_VERIFY_FAILED


def cmd_scan(args) -> int:
    if (args.n is None) == (args.input is None):
        print("error: provide exactly one of --n or --input", file=sys.stderr)
        return EXIT_USAGE
    if args.n is not None:
        try:
            source = list(harness.enumerate_leafless(args.n))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        try:
            with open(args.input, "r", encoding="ascii") as fh:
                source = read_graph6_lines(fh.read())
        except (OSError, FormatError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    report = harness.scan(source, budget=args.budget, threads=args.threads)
    text = report.to_json() if args.json else report.to_text()
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text + ("\n" if args.json else ""))
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_FINDINGS if report.findings else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetadim",
        description="Exact vertex and edge metric dimensions, theta and daisy "
        "families, and bound scans.",
        epilog=f"kernel backend: {_core.BACKEND}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="metric dimension of a graph file")
    p_dim.add_argument("input", help="edge-list or graph6 file")
    p_dim.add_argument("--kind", choices=("vertex", "edge"), default="vertex")
    p_dim.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p_dim.add_argument("--json", action="store_true")
    p_dim.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_dim.add_argument("--threads", type=int, default=1)
    p_dim.set_defaults(func=cmd_dim)

    p_theta = sub.add_parser("theta", help="predictions and landmark recipes")
    p_theta.add_argument("p", type=int)
    p_theta.add_argument("q", type=int)
    p_theta.add_argument("r", type=int)
    p_theta.add_argument("--check", action="store_true",
                         help="confirm predictions by brute force")
    p_theta.add_argument("--json", action="store_true")
    p_theta.add_argument("--threads", type=int, default=1)
    p_theta.set_defaults(func=cmd_theta)

    p_verify = sub.add_parser("verify", help="run a named verification sweep")
    p_verify.add_argument(
        "target",
        choices=("theorems", "lemma-dim2", "lemma-edim2", "lemma7", "lemma9",
                 "daisy", "oracle"),
    )
    p_verify.add_argument("--sum", type=int, default=sweeps.DEFAULT_SWEEP_SUM,
                          help="max p+q+r for theta sweeps")
    p_verify.add_argument("--max-petal", type=int, default=7)
    p_verify.add_argument("--max-k", type=int, default=3)
    p_verify.add_argument("--count", type=int, default=200,
                          help="random graphs for the oracle sweep")
    p_verify.add_argument("--seed", type=int, default=sweeps.DEFAULT_SEED)
    p_verify.add_argument("--max-n", type=int, default=9)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="scan graphs against the 2c-1 bound")
    p_scan.add_argument("--n", type=int, help="enumerate all leafless graphs on n vertices")
    p_scan.add_argument("--input", help="graph6 stream, one graph per line")
    p_scan.add_argument("--output", help="write the report to a file")
    p_scan.add_argument("--json", action="store_true")
    p_scan.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_scan.add_argument("--threads", type=int, default=1)
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
