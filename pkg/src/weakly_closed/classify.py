"""Labeling characterizations and structural predicates.

The two labeling searches (weak closedness and closedness) place vertices at
positions 1, 2, ... in turn. Whether a vertex may go next depends only on the
set already placed, so dead sets are memoized and the search is ``O(2^n n)``
in the worst case while still returning the lexicographically first labeling.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .errors import NTooLarge
from .graph import (
    Graph,
    Labeling,
    _bits,
    complement,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    path_graph,
)

MAX_SEARCH_N = 10


@dataclass(frozen=True)
class Verdict:
    """Predicate outcome in the uniform ``{name, value, certificate}`` shape."""

    name: str
    value: bool
    certificate: Any = None

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict:
        cert = self.certificate
        if isinstance(cert, Labeling):
            cert = list(cert.perm)
        elif isinstance(cert, (tuple, list)):
            cert = [sorted(c) if isinstance(c, (set, frozenset)) else c for c in cert]
        return {"name": self.name, "value": self.value, "certificate": cert}


def claw() -> Graph:
    return graph_from_edges(4, [(1, 2), (1, 3), (1, 4)])


def bigclaw() -> Graph:
    """Claw with each edge subdivided once: centre 1, arms 1-2-5, 1-3-6, 1-4-7."""
    return graph_from_edges(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])


# labeling conditions


def _between_violations(g: Graph, both: bool):
    for i, j in g.edges():
        for k in range(i + 1, j):
            ik, kj = g.has_edge(i, k), g.has_edge(k, j)
            if (both and not (ik and kj)) or (not both and not (ik or kj)):
                yield i, k, j


def wc_condition_holds(g: Graph) -> bool:
    """Each vertex strictly between the ends of an edge sees at least one end."""
    return next(_between_violations(g, both=False), None) is None


def closed_condition_holds(g: Graph) -> bool:
    """Each vertex strictly between the ends of an edge sees both ends."""
    return next(_between_violations(g, both=True), None) is None


def _may_place_weak(adj, placed: int, rest: int, v: int) -> bool:
    # any placed u not adjacent to v must have all its unplaced neighbours adjacent to v
    av = adj[v]
    for u in _bits(placed & ~av):
        if adj[u] & rest & ~av:
            return False
    return True


def _may_place_closed(adj, placed: int, rest: int, v: int) -> bool:
    av = adj[v]
    for u in _bits(placed):
        later = adj[u] & rest
        if later and (not av >> u & 1 or later & ~av):
            return False
    return True


def _labeling_search(g: Graph, may_place: Callable) -> Optional[Labeling]:
    if g.n > MAX_SEARCH_N:
        raise NTooLarge(f"labeling search limited to n <= {MAX_SEARCH_N}")
    full = (1 << g.n) - 1
    dead: set[int] = set()
    order: list[int] = []

    def extend(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for v in range(g.n):
            if placed >> v & 1:
                continue
            rest = full & ~placed & ~(1 << v)
            if may_place(g.adj, placed, rest, v):
                order.append(v + 1)
                if extend(placed | 1 << v):
                    return True
                order.pop()
        dead.add(placed)
        return False

    if extend(0):
        return Labeling.from_order(order)
    return None


def is_weakly_closed(g: Graph) -> Verdict:
    labeling = _labeling_search(g, _may_place_weak)
    return Verdict("weakly_closed", labeling is not None, labeling)


def is_closed(g: Graph) -> Verdict:
    labeling = _labeling_search(g, _may_place_closed)
    return Verdict("closed", labeling is not None, labeling)


# structural predicates


def is_complete_multipartite(g: Graph) -> Verdict:
    """Non-adjacency must be an equivalence relation; its classes are the parts."""
    co = complement(g)
    parts: list[tuple[int, ...]] = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        block = co.adj[v] | 1 << v
        for u in _bits(block):
            if co.adj[u] | 1 << u != block:
                return Verdict("complete_multipartite", False)
        seen |= block
        parts.append(tuple(u + 1 for u in _bits(block)))
    return Verdict("complete_multipartite", True, parts)


def is_chordal(g: Graph) -> Verdict:
    """Repeatedly strip a simplicial vertex; succeed when nothing is left."""
    alive = (1 << g.n) - 1
    order = []
    while alive:
        for v in _bits(alive):
            nbrs = g.adj[v] & alive
            if all(nbrs & ~g.adj[u] & ~(1 << u) == 0 for u in _bits(nbrs)):
                order.append(v + 1)
                alive &= ~(1 << v)
                break
        else:
            return Verdict("chordal", False)
    return Verdict("chordal", True, order)


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    if sorted(order) != list(range(1, g.n + 1)):
        return False
    for k, v in enumerate(order):
        later = [u for u in order[k + 1:] if g.has_edge(u, v)]
        if any(not g.has_edge(a, b) for a, b in itertools.combinations(later, 2)):
            return False
    return True


def induced_cycle_lengths(g: Graph):
    """Yield the length of every chordless cycle (each cycle may repeat).

    Cycles are grown as induced paths from their smallest vertex.
    """
    adj = g.adj
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        stack = [(u, 1 << s | 1 << u, 2) for u in _bits(adj[s] & higher)]
        # each entry: path end, path vertex set, path length in vertices
        while stack:
            end, path, length = stack.pop()
            interior = path & ~(1 << s) & ~(1 << end)
            for w in _bits(adj[end] & higher & ~path):
                if adj[w] & interior:
                    continue
                if adj[w] >> s & 1:
                    yield length + 1
                else:
                    stack.append((w, path | 1 << w, length + 1))


def has_chordless_cycle_at_least(g: Graph, k: int) -> bool:
    if k < 4:
        raise ValueError("minimum cycle length must be at least 4")
    return any(length >= k for length in induced_cycle_lengths(g))


def has_induced_odd_hole(g: Graph) -> bool:
    return any(length >= 5 and length % 2 for length in induced_cycle_lengths(g))


def is_perfect(g: Graph) -> bool:
    return not has_induced_odd_hole(g) and not has_induced_odd_hole(complement(g))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def _is_path_or_empty(adj: tuple[int, ...], vertices: int) -> bool:
    k = vertices.bit_count()
    if k <= 1:
        return True
    degs = [(adj[v] & vertices).bit_count() for v in _bits(vertices)]
    if max(degs) > 2 or sum(degs) != 2 * (k - 1):
        return False
    sub = induced_subgraph(Graph(len(adj), adj), [v + 1 for v in _bits(vertices)])
    return is_connected(sub)


def is_caterpillar(g: Graph) -> bool:
    if not is_tree(g):
        return False
    spine = 0
    for v in range(g.n):
        if g.adj[v].bit_count() > 1:
            spine |= 1 << v
    return _is_path_or_empty(g.adj, spine)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(row.bit_count() <= 2 for row in g.adj)


def contains_induced(g: Graph, pattern: Graph) -> bool:
    if pattern.n > g.n:
        return False
    for subset in itertools.combinations(range(1, g.n + 1), pattern.n):
        if is_isomorphic(induced_subgraph(g, subset), pattern):
            return True
    return False


__all__ = [
    "Verdict",
    "bigclaw",
    "claw",
    "closed_condition_holds",
    "contains_induced",
    "has_chordless_cycle_at_least",
    "has_induced_odd_hole",
    "induced_cycle_lengths",
    "is_caterpillar",
    "is_chordal",
    "is_closed",
    "is_complete_multipartite",
    "is_path",
    "is_perfect",
    "is_perfect_elimination_order",
    "is_tree",
    "is_weakly_closed",
    "path_graph",
    "wc_condition_holds",
]
