"""Small simple graphs stored as adjacency bitrows.

Vertices are named 1..n everywhere in the public API and in messages;
bit ``v - 1`` of ``adj[u - 1]`` records the edge {u, v}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EmptySet,
    LoopEdge,
    MalformedGraph6,
    NTooLarge,
    SizeMismatch,
    VertexOutOfRange,
)

MAX_N = 16
MAX_CANON_N = 9


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise NTooLarge(f"n={self.n} outside 1..{MAX_N}")
        if len(self.adj) != self.n:
            raise SizeMismatch("adjacency rows do not match n")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise VertexOutOfRange(f"row {v + 1} names a vertex > {self.n}")
            if row >> v & 1:
                raise LoopEdge(f"loop at vertex {v + 1}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v + 1} and {u + 1}")

    def has_edge(self, u: int, v: int) -> bool:
        """1-based edge test; out-of-range names simply report False."""
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as 1-based pairs (u, v), u < v, in lexicographic order."""
        return [
            (u + 1, v + 1)
            for u in range(self.n)
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return [u + 1 for u in _bits(self.adj[v - 1])]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={format_edges(self)})"


@dataclass(frozen=True)
class Labeling:
    """``perm[v - 1]`` is the label given to vertex ``v``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Labeling":
        """Labeling that gives label ``k`` to ``order[k - 1]``."""
        perm = [0] * len(order)
        for label, v in enumerate(order, start=1):
            perm[v - 1] = label
        return cls(tuple(perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    def inverse(self) -> "Labeling":
        return Labeling.from_order(self.perm)

    def __call__(self, v: int) -> int:
        return self.perm[v - 1]


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise NTooLarge(f"n={n} outside 1..{MAX_N}")


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    _check_n(n)
    adj = [0] * n
    for u, v in edges:
        for w in (u, v):
            if not 1 <= w <= n:
                raise VertexOutOfRange(f"vertex {w} not in 1..{n}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``"1-2,2-3"``; ``n`` defaults to the largest vertex named."""
    edges = []
    text = text.strip()
    if text:
        for chunk in text.split(","):
            try:
                a, b = chunk.strip().split("-")
                edges.append((int(a), int(b)))
            except ValueError:
                raise ValueError(f"bad edge {chunk!r}, expected u-v") from None
    if n is None:
        if not edges:
            raise ValueError("empty edge list needs an explicit vertex count")
        n = max(max(e) for e in edges)
    return graph_from_edges(n, edges)


def format_edges(g: Graph) -> str:
    return ",".join(f"{u}-{v}" for u, v in g.edges())


def empty_graph(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    _check_n(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(v, v + 1) for v in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(v, v % n + 1) for v in range(1, n + 1)])


# graph6


def to_graph6(g: Graph) -> str:
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6(f"character outside graph6 range in {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise MalformedGraph6("multi-byte vertex counts are not supported")
    if n == 0:
        raise MalformedGraph6("graph6 with zero vertices")
    if n > MAX_N:
        raise NTooLarge(f"n={n} outside 1..{MAX_N}")
    npairs = n * (n - 1) // 2
    body = s[1:]
    if len(body) != -(-npairs // 6):
        raise MalformedGraph6(f"expected {-(-npairs // 6)} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        value = ord(c) - 63
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[npairs:]):
        raise MalformedGraph6("nonzero padding bits")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


# elementary operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, renamed 1..k in increasing order."""
    vs = sorted(set(vertices))
    if not vs:
        raise EmptySet("induced subgraph of an empty vertex set")
    for v in vs:
        if not 1 <= v <= g.n:
            raise VertexOutOfRange(f"vertex {v} not in 1..{g.n}")
    adj = []
    for v in vs:
        row = 0
        for k, u in enumerate(vs):
            if g.adj[v - 1] >> (u - 1) & 1:
                row |= 1 << k
        adj.append(row)
    return Graph(len(vs), tuple(adj))


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def clique_number(g: Graph) -> int:
    best = 0

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return
        while candidates:
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            grow(size + 1, candidates & g.adj[v])
            if size + candidates.bit_count() <= best:
                return

    grow(0, (1 << g.n) - 1)
    return best


def relabel(g: Graph, labeling: Labeling) -> Graph:
    """Rename vertex ``v`` to ``labeling(v)``."""
    if labeling.n != g.n:
        raise SizeMismatch(f"labeling over {labeling.n} vertices, graph has {g.n}")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << (labeling.perm[u] - 1)
        adj[labeling.perm[v] - 1] = row
    return Graph(g.n, tuple(adj))


# canonical form
#
# An edge set is encoded as an integer whose bits follow graph6 order
# (0,1), (0,2), (1,2), (0,3), ... with the first pair most significant, so
# the integer minimum over relabelings is the lexicographically least
# upper-triangle bitstring. The code itself is that minimal graph6 text.


def pair_index(n: int) -> np.ndarray:
    """``idx[a, b]`` = graph6 position of the pair {a, b} (0-based vertices)."""
    idx = np.full((n, n), -1, dtype=np.int64)
    pos = 0
    for j in range(1, n):
        for i in range(j):
            idx[i, j] = idx[j, i] = pos
            pos += 1
    return idx


@lru_cache(maxsize=None)
def permutation_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)


@lru_cache(maxsize=None)
def _pair_weights(n: int) -> np.ndarray:
    npairs = n * (n - 1) // 2
    idx = pair_index(n)
    weights = np.zeros((n, n), dtype=np.int64)
    mask = idx >= 0
    weights[mask] = np.left_shift(np.int64(1), (npairs - 1 - idx[mask]))
    return weights


def edge_mask(g: Graph) -> int:
    """Integer edge code of ``g`` in its current labeling."""
    npairs = g.n * (g.n - 1) // 2
    code = 0
    pos = 0
    for j in range(1, g.n):
        for i in range(j):
            if g.adj[j] >> i & 1:
                code |= 1 << (npairs - 1 - pos)
            pos += 1
    return code


def graph_from_mask(n: int, mask: int) -> Graph:
    npairs = n * (n - 1) // 2
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> (npairs - 1 - pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def orbit_masks(n: int, edges: Sequence[tuple[int, int]], chunk: int = 1 << 16) -> np.ndarray:
    """Edge codes of ``edges`` (0-based pairs) under every relabeling, with repeats."""
    perms = permutation_table(n)
    weights = _pair_weights(n)
    if not edges:
        return np.zeros(len(perms), dtype=np.int64)
    us = np.array([e[0] for e in edges])
    vs = np.array([e[1] for e in edges])
    out = np.empty(len(perms), dtype=np.int64)
    for start in range(0, len(perms), chunk):
        block = perms[start:start + chunk]
        out[start:start + chunk] = weights[block[:, us], block[:, vs]].sum(axis=1)
    return out


def canonical_code(g: Graph) -> bytes:
    """Minimal graph6 text over all n! relabelings; equal iff isomorphic."""
    if g.n > MAX_CANON_N:
        raise NTooLarge(f"brute-force canonical form limited to n <= {MAX_CANON_N}")
    if g.n == 1:
        return to_graph6(g).encode("ascii")
    zero_based = [(u - 1, v - 1) for u, v in g.edges()]
    best = int(orbit_masks(g.n, zero_based).min())
    return to_graph6(graph_from_mask(g.n, best)).encode("ascii")


def canonical_form(g: Graph) -> Graph:
    return parse_graph6(canonical_code(g).decode("ascii"))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree pruning; no size cap."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    gdeg = [row.bit_count() for row in g.adj]
    hdeg = [row.bit_count() for row in h.adj]
    if sorted(gdeg) != sorted(hdeg):
        return False
    order = sorted(range(g.n), key=lambda v: -gdeg[v])
    image = [-1] * g.n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == g.n:
            return True
        v = order[k]
        for w in range(h.n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            if all(
                (g.adj[v] >> order[m] & 1) == (h.adj[w] >> image[order[m]] & 1)
                for m in range(k)
            ):
                image[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
        return False

    return extend(0)
