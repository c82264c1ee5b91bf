"""Command-line interface.

Exit codes: 0 result computed, 1 no certificate exists, 2 conjecture
counterexample, 64 unreadable input, 65 disconnected input, 70 compute budget
exhausted.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .classify import wc_condition_holds
from .enumeration import (
    MAX_FPURE_N,
    ClassificationRecord,
    SCHEMA_VERSION,
    classify_graph,
    enumerate_connected,
    report_csv,
    report_jsonl,
    report_markdown,
)
from .errors import BudgetExceeded, InputError, PreconditionViolated
from .graph import Graph, Labeling, is_connected, parse_edge_list, parse_graph6, relabel, to_graph6
from .interchange import adjacentability_certificate, certificate_is_valid, theorem19_certificate

EX_OK, EX_NEGATIVE, EX_COUNTEREXAMPLE = 0, 1, 2
EX_DATAERR, EX_DISCONNECTED, EX_BUDGET = 64, 65, 70

log = logging.getLogger("weakly_closed")


class _InputFailure(Exception):
    pass


def _read_graph(args) -> Graph:
    try:
        if args.edges is not None:
            return parse_edge_list(args.edges, args.n)
        if args.graph is None:
            raise ValueError("give a graph6 string or --edges")
        return parse_graph6(args.graph)
    except (InputError, ValueError) as exc:
        raise _InputFailure(str(exc)) from exc


def _emit(doc: dict) -> None:
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    print(json.dumps(doc, sort_keys=True))


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph6 string")
    p.add_argument("--edges", help="edge list such as 1-2,2-3 (1-based vertices)")
    p.add_argument("--n", type=int, help="vertex count for --edges (default: largest vertex)")


def cmd_check(args) -> int:
    g = _read_graph(args)
    connected = is_connected(g)
    if not connected and not args.allow_disconnected:
        print(f"error: graph {to_graph6(g)} is disconnected", file=sys.stderr)
        return EX_DISCONNECTED
    record = classify_graph(g, args.fpure)
    doc = record.to_json()
    doc["connected"] = connected
    _emit(doc)
    return EX_OK


def _classify_one(item: tuple[str, Optional[int]]) -> dict:
    g6, p = item
    return classify_graph(parse_graph6(g6), p).to_json()


def cmd_classify(args) -> int:
    if args.fpure is not None and args.n > MAX_FPURE_N:
        print(f"error: --fpure sweeps are limited to n <= {MAX_FPURE_N}", file=sys.stderr)
        return EX_BUDGET
    try:
        graphs = enumerate_connected(args.n)
    except InputError as exc:
        raise _InputFailure(str(exc)) from exc
    items = [(to_graph6(g), args.fpure) for g in graphs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            docs = list(pool.map(_classify_one, items))
    else:
        docs = [_classify_one(item) for item in items]
    records = [
        ClassificationRecord(**{k: v for k, v in d.items() if k != "schema_version"}) for d in docs
    ]
    writer = {"csv": report_csv, "md": report_markdown, "jsonl": report_jsonl}[args.format]
    sys.stdout.write(writer(records))
    return EX_OK


def _parse_labeling(text: str, n: int) -> Labeling:
    try:
        perm = tuple(int(x) for x in text.split(","))
        if len(perm) != n:
            raise ValueError(f"labeling has {len(perm)} entries, graph has {n} vertices")
        return Labeling(perm)
    except ValueError as exc:
        raise _InputFailure(str(exc)) from exc


def cmd_witness(args) -> int:
    g = _read_graph(args)
    if args.labeling:
        g = relabel(g, _parse_labeling(args.labeling, g.n))
    try:
        i, j = (int(x) for x in args.edge.split(","))
    except ValueError:
        raise _InputFailure(f"bad --edge {args.edge!r}, expected i,j") from None
    if not g.has_edge(i, j):
        raise _InputFailure(f"{{{i}, {j}}} is not an edge of the (relabelled) graph")
    if args.method == "construct":
        try:
            cert = theorem19_certificate(g, i, j)
        except PreconditionViolated as exc:
            _emit({"graph6": to_graph6(g), "edge": [i, j], "adjacentable": None,
                   "error": str(exc)})
            return EX_NEGATIVE
    else:
        cert = adjacentability_certificate(g, i, j, ordered=args.ordered)
    if cert is None:
        _emit({"graph6": to_graph6(g), "edge": [i, j], "adjacentable": False,
               "message": "not adjacentable"})
        return EX_NEGATIVE
    assert certificate_is_valid(g, cert, i, j, ordered=args.ordered and args.method == "bfs")
    _emit({"graph6": to_graph6(g), "edge": [i, j], "adjacentable": True,
           "method": args.method, "certificate": cert.to_json(),
           "condition_holds": wc_condition_holds(g)})
    return EX_OK


def cmd_fpure(args) -> int:
    from .algebra.fedder import is_fpure_fedder

    g = _read_graph(args)
    result = is_fpure_fedder(g, args.p, enforce_limits=not args.slow)
    _emit(result.to_json(g))
    return EX_OK


def _fedder_and_wc(item: tuple[str, int, bool]) -> tuple[str, bool, bool]:
    from .algebra.fedder import is_fpure_fedder
    from .classify import is_weakly_closed

    g6, p, slow = item
    g = parse_graph6(g6)
    return g6, is_fpure_fedder(g, p, enforce_limits=not slow).fpure, is_weakly_closed(g).value


def cmd_conjecture(args) -> int:
    if args.n > MAX_FPURE_N and not args.slow:
        print(f"error: n > {MAX_FPURE_N} needs --slow", file=sys.stderr)
        return EX_BUDGET
    graphs = enumerate_connected(args.n)
    items = [(to_graph6(g), args.p, args.slow) for g in graphs]
    done = 0
    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_fedder_and_wc, items))
        else:
            results = []
            for item in items:
                results.append(_fedder_and_wc(item))
                done += 1
    except BudgetExceeded as exc:
        print(f"budget exhausted after {done} of {len(items)} graphs: {exc}", file=sys.stderr)
        return EX_BUDGET
    for g6, fpure, wc in results:
        if fpure != wc:
            print(f"COUNTEREXAMPLE at n={args.n}, p={args.p}: {g6} fpure={fpure} weakly_closed={wc}")
            return EX_COUNTEREXAMPLE
    print(f"HOLDS at n={args.n}, p={args.p} ({len(results)} connected graphs)")
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wclosed", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify one graph")
    _add_graph_args(p)
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--fpure", type=int, metavar="P", help="also run Fedder's criterion at prime P")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="classify every connected graph on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("csv", "md", "jsonl"), default="csv")
    p.add_argument("--fpure", type=int, metavar="P")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="interchange certificate for one edge")
    _add_graph_args(p)
    p.add_argument("--edge", required=True, help="i,j")
    p.add_argument("--labeling", help="comma-separated labels for vertices 1..n")
    p.add_argument("--method", choices=("bfs", "construct"), default="bfs")
    p.add_argument("--ordered", action="store_true", help="require i immediately before j")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("fpure", help="Fedder's criterion for S/J_G")
    _add_graph_args(p)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--slow", action="store_true", help="lift the desk-scale size limits")
    p.set_defaults(func=cmd_fpure)

    p = sub.add_parser("conjecture", help="F-pure at p iff weakly closed, over all connected graphs")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int, nargs="?", default=2)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except _InputFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EX_BUDGET


if __name__ == "__main__":
    sys.exit(main())
