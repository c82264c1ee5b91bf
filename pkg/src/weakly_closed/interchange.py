"""Interchange dynamics on vertex sequences and adjacentability certificates.

A vertex sequence is a tuple holding each label 1..n once. An interchange at
position ``k`` (1-based) swaps entries ``k`` and ``k + 1``, and is legal only
when the two values are adjacent in the graph.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from math import factorial
from typing import Optional

from .errors import (
    IllegalInterchange,
    NotAnEdge,
    NTooLarge,
    PositionOutOfRange,
    PreconditionViolated,
)
from .graph import Graph, Labeling, relabel

MAX_DEFINITION_N = 8

VertexSequence = tuple[int, ...]


@dataclass(frozen=True)
class Swap:
    position: int
    values: tuple[int, int]


@dataclass(frozen=True)
class InterchangeSequence:
    start: VertexSequence
    swaps: tuple[Swap, ...] = field(default_factory=tuple)

    def replay(self, g: Graph) -> VertexSequence:
        """Replay every swap, checking legality and the recorded values."""
        seq = self.start
        for swap in self.swaps:
            k = swap.position
            if not 1 <= k < len(seq):
                raise PositionOutOfRange(f"swap position {k}")
            if {seq[k - 1], seq[k]} != set(swap.values):
                raise IllegalInterchange(
                    f"swap at {k} records {swap.values}, sequence holds {seq[k - 1:k + 1]}"
                )
            seq = apply_interchange(seq, g, k)
        return seq

    @property
    def final(self) -> VertexSequence:
        seq = list(self.start)
        for swap in self.swaps:
            k = swap.position
            seq[k - 1], seq[k] = seq[k], seq[k - 1]
        return tuple(seq)

    def to_json(self) -> dict:
        return {
            "start": list(self.start),
            "swaps": [{"position": s.position, "values": list(s.values)} for s in self.swaps],
            "final": list(self.final),
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> "InterchangeSequence":
        if isinstance(doc, str):
            doc = json.loads(doc)
        swaps = tuple(Swap(s["position"], tuple(s["values"])) for s in doc["swaps"])
        return cls(tuple(doc["start"]), swaps)


def consecutive(seq: VertexSequence, i: int, j: int, ordered: bool = False) -> bool:
    for a, b in zip(seq, seq[1:]):
        if (a, b) == (i, j) or (not ordered and (a, b) == (j, i)):
            return True
    return False


def certificate_is_valid(g: Graph, cert: InterchangeSequence, i: int, j: int,
                         ordered: bool = False) -> bool:
    if cert.start != tuple(range(1, g.n + 1)):
        return False
    try:
        final = cert.replay(g)
    except (IllegalInterchange, PositionOutOfRange):
        return False
    return consecutive(final, i, j, ordered)


def apply_interchange(seq: VertexSequence, g: Graph, pos: int) -> VertexSequence:
    if not 1 <= pos < len(seq):
        raise PositionOutOfRange(f"position {pos} not in 1..{len(seq) - 1}")
    a, b = seq[pos - 1], seq[pos]
    if not g.has_edge(a, b):
        raise IllegalInterchange(f"{a} and {b} are not adjacent")
    out = list(seq)
    out[pos - 1], out[pos] = b, a
    return tuple(out)


def _moves(seq: VertexSequence, adj: tuple[int, ...]):
    for k in range(len(seq) - 1):
        a, b = seq[k], seq[k + 1]
        if adj[a - 1] >> (b - 1) & 1:
            nxt = list(seq)
            nxt[k], nxt[k + 1] = b, a
            yield k + 1, (a, b), tuple(nxt)


def reachable_sequences(g: Graph) -> set[VertexSequence]:
    """Every sequence reachable from (1, ..., n) by legal interchanges."""
    start = tuple(range(1, g.n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        seq = queue.popleft()
        for _, _, nxt in _moves(seq, g.adj):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    assert len(seen) <= factorial(g.n)
    return seen


def _require_edge(g: Graph, i: int, j: int) -> None:
    if not g.has_edge(i, j):
        raise NotAnEdge(f"{{{i}, {j}}} is not an edge")


def adjacentability_certificate(g: Graph, i: int, j: int,
                                ordered: bool = False) -> Optional[InterchangeSequence]:
    """Shortest interchange sequence bringing ``i`` next to ``j``, or None.

    With ``ordered`` the target is ``i`` immediately followed by ``j``.
    """
    _require_edge(g, i, j)
    start = tuple(range(1, g.n + 1))
    parent: dict[VertexSequence, tuple[VertexSequence, Swap] | None] = {start: None}
    queue = deque([start])
    while queue:
        seq = queue.popleft()
        if consecutive(seq, i, j, ordered):
            swaps = []
            while parent[seq] is not None:
                seq, swap = parent[seq]
                swaps.append(swap)
            return InterchangeSequence(start, tuple(reversed(swaps)))
        for pos, values, nxt in _moves(seq, g.adj):
            if nxt not in parent:
                parent[nxt] = (seq, Swap(pos, values))
                queue.append(nxt)
    return None


def is_adjacentable(g: Graph, i: int, j: int, ordered: bool = False) -> bool:
    return adjacentability_certificate(g, i, j, ordered) is not None


def all_edges_adjacentable(g: Graph, ordered: bool = False) -> bool:
    """Every edge adjacentable under the current labeling.

    One exploration of the reachable set serves all edges at once. With
    ``ordered`` both orientations (i before j, and j before i) are required,
    since the defining condition quantifies over all ``i, j`` with
    ``{i, j}`` an edge.
    """
    pending = set(g.edges())
    pending |= {(v, u) for u, v in pending}
    start = tuple(range(1, g.n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        seq = queue.popleft()
        for pair in zip(seq, seq[1:]):
            pending.discard(pair)
            if not ordered:
                pending.discard(pair[::-1])
        if not pending:
            return True
        for _, _, nxt in _moves(seq, g.adj):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return not pending


def is_weakly_closed_by_definition(g: Graph, ordered: bool = False) -> tuple[bool, Optional[Labeling]]:
    """Search labelings lexicographically for one making every edge adjacentable."""
    if g.n > MAX_DEFINITION_N:
        raise NTooLarge(f"definitional search limited to n <= {MAX_DEFINITION_N}")
    for perm in itertools.permutations(range(1, g.n + 1)):
        labeling = Labeling(perm)
        if all_edges_adjacentable(relabel(g, labeling), ordered):
            return True, labeling
    return False, None


def theorem19_certificate(g: Graph, i: int, j: int, literal: bool = False) -> InterchangeSequence:
    """Constructive adjacentability certificate for an edge whose in-between
    vertices each see ``i`` or ``j``.

    Two phases, both on the current labeling with ``i < j``:
    first every ``s`` in ``i < s < j`` adjacent to ``j`` is walked rightwards
    past its larger neighbours up to ``j`` (largest ``s`` first); then every
    ``u`` adjacent to ``i`` but not ``j`` is walked leftwards past its smaller
    neighbours starting at ``i`` (smallest ``u`` first).

    The second phase skips vertices already moved beyond ``j`` in the first
    phase. ``literal=True`` drops that exclusion, and then the walk can ask
    for a swap of two non-consecutive entries (``AssertionError``), e.g. on
    the 4-cycle 1-3-2-4-1 for the edge {1, 4}.
    """
    _require_edge(g, i, j)
    i, j = min(i, j), max(i, j)
    for k in range(i + 1, j):
        if not (g.has_edge(i, k) or g.has_edge(k, j)):
            raise PreconditionViolated(f"vertex {k} sees neither {i} nor {j}")

    seq = list(range(1, g.n + 1))
    swaps: list[Swap] = []

    def interchange(a: int, b: int) -> None:
        pa, pb = seq.index(a), seq.index(b)
        if abs(pa - pb) != 1:
            raise AssertionError(f"{a} and {b} not consecutive in {tuple(seq)}")
        k = min(pa, pb)
        swaps.append(Swap(k + 1, (seq[k], seq[k + 1])))
        seq[k], seq[k + 1] = seq[k + 1], seq[k]

    pending = {k for k in range(i + 1, j) if g.has_edge(k, j)}
    done: set[int] = set()
    while pending:
        s = max(pending)
        for t in sorted(t for t in range(s + 1, j + 1) if g.has_edge(s, t) and t not in done):
            interchange(s, t)
        pending.discard(s)
        done.add(s)

    moved_right = done if not literal else set()
    pending = {u for u in range(i + 1, j) if g.has_edge(i, u) and not g.has_edge(u, j)}
    done = set()
    while pending:
        u = min(pending)
        skip = done | moved_right
        for v in sorted(v for v in range(i, u) if g.has_edge(v, u) and v not in skip):
            interchange(v, u)
        pending.discard(u)
        done.add(u)

    cert = InterchangeSequence(tuple(range(1, g.n + 1)), tuple(swaps))
    if not consecutive(cert.replay(g), i, j):
        raise AssertionError(f"construction left {i}, {j} apart in {cert.final}")
    return cert
