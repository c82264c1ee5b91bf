"""Connected graphs up to isomorphism, and batch classification.

Generation walks every edge subset of K_n. The first member of each orbit met
in that walk expands the whole orbit (all n! relabelings) into a ``seen``
table, so each isomorphism class costs one vectorised orbit computation and
every other subset is a single table lookup.
"""
from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np

from .classify import (
    is_caterpillar,
    is_chordal,
    is_closed,
    is_complete_multipartite,
    is_perfect,
    is_tree,
    is_weakly_closed,
)
from .errors import BudgetExceeded, NTooLarge
from .graph import (
    Graph,
    graph_from_edges,
    graph_from_mask,
    is_connected,
    orbit_masks,
    pair_index,
    to_graph6,
)

log = logging.getLogger(__name__)

MAX_ENUM_N = 7
MAX_FPURE_N = 5
FPURE_PRIMES = (2, 3, 5, 7)
SCHEMA_VERSION = 1

FLAGS = ("weakly_closed", "closed", "complete_multipartite", "chordal", "perfect", "tree", "caterpillar")


@dataclass(frozen=True)
class GraphClass:
    graph: Graph
    code: bytes
    orbit_size: int

    @property
    def automorphisms(self) -> int:
        from math import factorial

        return factorial(self.graph.n) // self.orbit_size


def _mask_edges(n: int, mask: int) -> list[tuple[int, int]]:
    npairs = n * (n - 1) // 2
    idx = pair_index(n)
    pairs = {int(idx[i, j]): (i, j) for j in range(1, n) for i in range(j)}
    return [pairs[p] for p in range(npairs) if mask >> (npairs - 1 - p) & 1]


def connected_classes(n: int) -> list[GraphClass]:
    """One record per isomorphism class of connected graphs on ``n`` vertices,
    with its canonical code and orbit size, sorted by (edge count, code)."""
    if not 1 <= n <= MAX_ENUM_N:
        raise NTooLarge(f"enumeration limited to 1 <= n <= {MAX_ENUM_N}")
    if n == 1:
        g = Graph(1, (0,))
        return [GraphClass(g, to_graph6(g).encode("ascii"), 1)]
    npairs = n * (n - 1) // 2
    total = 1 << npairs
    seen = np.zeros(total, dtype=bool)
    classes = []
    cursor = 0
    while cursor < total:
        unseen = np.flatnonzero(~seen[cursor:cursor + 4096])
        if not len(unseen):
            cursor += 4096
            continue
        mask = cursor + int(unseen[0])
        orbit = np.unique(orbit_masks(n, _mask_edges(n, mask)))
        seen[orbit] = True
        g = graph_from_mask(n, mask)
        if is_connected(g):
            best = int(orbit[0])
            canon = graph_from_mask(n, best)
            classes.append(GraphClass(canon, to_graph6(canon).encode("ascii"), len(orbit)))
        cursor = mask + 1
    classes.sort(key=lambda c: (c.graph.edge_count, c.code))
    log.debug("n=%d: %d connected classes", n, len(classes))
    return classes


def enumerate_connected(n: int) -> list[Graph]:
    return [c.graph for c in connected_classes(n)]


def count_labeled_connected(n: int) -> int:
    """Connected graphs on the labelled vertex set 1..n, by direct enumeration."""
    if not 1 <= n <= MAX_ENUM_N:
        raise NTooLarge(f"enumeration limited to 1 <= n <= {MAX_ENUM_N}")
    npairs = n * (n - 1) // 2
    return sum(is_connected(graph_from_mask(n, m)) for m in range(1 << npairs))


# trees, by leaf attachment with a rooted-tree canonical string


def _rooted_code(adj: list[list[int]], v: int, parent: int) -> str:
    return "(" + "".join(sorted(_rooted_code(adj, u, v) for u in adj[v] if u != parent)) + ")"


def _centres(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def tree_code(g: Graph) -> str:
    """Canonical string of a tree: the smaller rooted code over its centres."""
    adj = [[u - 1 for u in g.neighbors(v)] for v in range(1, g.n + 1)]
    return min(_rooted_code(adj, c, -1) for c in _centres(adj))


def enumerate_trees(n: int) -> list[Graph]:
    """Trees on ``n`` vertices up to isomorphism, sorted by tree code."""
    if not 1 <= n <= 16:
        raise NTooLarge("tree enumeration limited to n <= 16")
    level = {"()": Graph(1, (0,))}
    for k in range(2, n + 1):
        nxt = {}
        for t in level.values():
            for v in range(1, k):
                g = graph_from_edges(k, t.edges() + [(v, k)])
                nxt.setdefault(tree_code(g), g)
        level = nxt
    return [level[c] for c in sorted(level)]


# classification records


@dataclass
class ClassificationRecord:
    graph6: str
    n: int
    edge_count: int
    flags: dict[str, bool]
    certificates: dict[str, object] = field(default_factory=dict)
    fpure_p2: Optional[bool] = None
    fpure: Optional[dict] = None

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["schema_version"] = SCHEMA_VERSION
        return doc


def classify_graph(g: Graph, fpure_p: Optional[int] = None) -> ClassificationRecord:
    wc = is_weakly_closed(g)
    cl = is_closed(g)
    cm = is_complete_multipartite(g)
    ch = is_chordal(g)
    flags = {
        "weakly_closed": wc.value,
        "closed": cl.value,
        "complete_multipartite": cm.value,
        "chordal": ch.value,
        "perfect": is_perfect(g),
        "tree": is_tree(g),
        "caterpillar": is_caterpillar(g),
    }
    certificates: dict[str, object] = {}
    for verdict in (wc, cl, cm, ch):
        if verdict.value and verdict.certificate is not None:
            certificates[verdict.name] = verdict.to_json()["certificate"]
    record = ClassificationRecord(to_graph6(g), g.n, g.edge_count, flags, certificates)
    if fpure_p is not None:
        from .algebra.fedder import is_fpure_fedder

        result = is_fpure_fedder(g, fpure_p)
        record.fpure = result.to_json(g)
        if fpure_p == 2:
            record.fpure_p2 = result.fpure
    return record


def classify_all(n: int, with_fpure: bool = False, p: int = 2) -> list[ClassificationRecord]:
    if not 1 <= n <= MAX_ENUM_N:
        raise NTooLarge(f"classification limited to 1 <= n <= {MAX_ENUM_N}")
    if with_fpure:
        if n > MAX_FPURE_N:
            raise BudgetExceeded(f"F-purity sweep limited to n <= {MAX_FPURE_N}")
        if p not in FPURE_PRIMES:
            raise ValueError(f"p must be one of {FPURE_PRIMES}")
    return [classify_graph(g, p if with_fpure else None) for g in enumerate_connected(n)]


def summarize(records: Iterable[ClassificationRecord]) -> dict[str, int]:
    records = list(records)
    summary = {"total": len(records)}
    for flag in FLAGS:
        summary[flag] = sum(r.flags[flag] for r in records)
    summary["chordal_not_weakly_closed"] = sum(
        r.flags["chordal"] and not r.flags["weakly_closed"] for r in records
    )
    summary["not_weakly_closed"] = sum(not r.flags["weakly_closed"] for r in records)
    if any(r.fpure is not None for r in records):
        summary["fpure"] = sum(bool(r.fpure and r.fpure["fpure"]) for r in records)
    return summary


def lattice_violations(records: Iterable[ClassificationRecord]) -> list[tuple[str, str]]:
    """(graph6, rule) for every record breaking a containment of the graph map."""
    rules = [
        ("closed => weakly_closed", lambda f: not f["closed"] or f["weakly_closed"]),
        ("complete_multipartite => weakly_closed",
         lambda f: not f["complete_multipartite"] or f["weakly_closed"]),
        ("closed => chordal", lambda f: not f["closed"] or f["chordal"]),
        ("weakly_closed => perfect", lambda f: not f["weakly_closed"] or f["perfect"]),
        ("caterpillar => tree", lambda f: not f["caterpillar"] or f["tree"]),
    ]
    return [(r.graph6, name) for r in records for name, ok in rules if not ok(r.flags)]


# report writers


def report_csv(records: list[ClassificationRecord]) -> str:
    cols = ["graph6", "n", "edge_count", *FLAGS, "fpure"]
    lines = [",".join(cols)]
    for r in records:
        fp = "" if r.fpure is None else str(r.fpure["fpure"]).lower()
        row = [r.graph6, str(r.n), str(r.edge_count), *(str(r.flags[f]).lower() for f in FLAGS), fp]
        lines.append(",".join(row))
    for key, value in summarize(records).items():
        lines.append(f"# {key}={value}")
    return "\n".join(lines) + "\n"


def report_jsonl(records: list[ClassificationRecord]) -> str:
    """One record per line, then a final ``{"summary": ...}`` line."""
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in records]
    lines.append(json.dumps({"schema_version": SCHEMA_VERSION, "summary": summarize(records)},
                            sort_keys=True))
    return "\n".join(lines) + "\n"


def _group(r: ClassificationRecord) -> str:
    f = r.flags
    if not f["weakly_closed"]:
        return "Chordal, not weakly closed" if f["chordal"] else "Not weakly closed"
    inner = []
    if f["complete_multipartite"]:
        inner.append("complete r-partite")
    if f["closed"]:
        inner.append("closed")
    elif f["chordal"]:
        inner.append("chordal")
    return "Weakly closed" + (" / " + ", ".join(inner) if inner else "")


def report_markdown(records: list[ClassificationRecord]) -> str:
    n = records[0].n if records else 0
    out = [f"# Classification - n = {n} ({len(records)} items)", ""]
    groups: dict[str, list[ClassificationRecord]] = {}
    for r in records:
        groups.setdefault(_group(r), []).append(r)
    for name in sorted(groups):
        out += [f"## {name} ({len(groups[name])})", "", "| graph6 | edges | perfect | tree | fpure |",
                "|---|---|---|---|---|"]
        for r in groups[name]:
            fp = "" if r.fpure is None else str(r.fpure["fpure"]).lower()
            out.append(f"| `{r.graph6}` | {r.edge_count} | {str(r.flags['perfect']).lower()} "
                       f"| {str(r.flags['tree']).lower()} | {fp} |")
        out.append("")
    out.append("## Summary")
    out.append("")
    for key, value in summarize(records).items():
        out.append(f"- {key}: {value}")
    return "\n".join(out) + "\n"
