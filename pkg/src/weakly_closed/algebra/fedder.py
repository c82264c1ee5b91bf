"""Binomial edge ideals and F-purity through Fedder's criterion.

``S/J`` is F-pure exactly when ``(J^[p] : J)`` has an element outside
``m^[p]``, with ``m`` the ideal of all variables. ``J_G`` is homogeneous, so
the test is run in the polynomial ring itself at ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from ..errors import BudgetExceeded, NotAnEdge, NTooLarge
from ..graph import Graph, to_graph6
from .groebner import Budget, normal_form
from .ideal import Ideal, bracket_power, colon_ideal, frobenius_maximal, in_monomial_ideal
from .ring import Polynomial, Ring

MAX_IDEAL_N = 6
# desk-scale limits for the full colon computation, by characteristic
FEDDER_LIMITS = {2: 5, 3: 4, 5: 3, 7: 3}


@lru_cache(maxsize=None)
def edge_ring(n: int, p: int) -> Ring:
    """``GF(p)[X1..Xn, Y1..Yn, T]``; ``T`` only ever appears during elimination."""
    names = [f"X{i}" for i in range(1, n + 1)] + [f"Y{i}" for i in range(1, n + 1)]
    return Ring(names, p, tag=True)


def minor(ring: Ring, i: int, j: int) -> Polynomial:
    """``[i, j] = X_i*Y_j - X_j*Y_i``."""
    v = ring.gens
    return v[f"X{i}"] * v[f"Y{j}"] - v[f"X{j}"] * v[f"Y{i}"]


def binomial_edge_ideal(g: Graph, p: int = 2) -> Ideal:
    if g.n > MAX_IDEAL_N:
        raise NTooLarge(f"binomial edge ideals limited to n <= {MAX_IDEAL_N}")
    ring = edge_ring(g.n, p)
    return Ideal(ring, [minor(ring, i, j) for i, j in g.edges()])


def witness_product(ring: Ring, seq: Sequence[int], p: int) -> Polynomial:
    """``(Y_{v1} [v1,v2] [v2,v3] ... [v_{s-1},v_s] X_{vs})^(p-1)`` for ``seq = v``."""
    if p < 2:
        raise ValueError("characteristic must be at least 2")
    f = ring.gens[f"Y{seq[0]}"]
    for a, b in zip(seq, seq[1:]):
        f = f * minor(ring, a, b)
    f = f * ring.gens[f"X{seq[-1]}"]
    return f ** (p - 1)


def fedder_witness_product(g: Graph, p: int) -> Polynomial:
    """Witness for the labeling ``g`` carries: the product along 1, 2, ..., n."""
    ring = edge_ring(g.n, p)
    return witness_product(ring, list(range(1, g.n + 1)), p)


def maximal_bracket(ring: Ring, p: int) -> list[int]:
    return frobenius_maximal(ring, p)


@lru_cache(maxsize=None)
def _bracket_basis(g: Graph, p: int) -> tuple[Polynomial, ...]:
    return tuple(bracket_power(binomial_edge_ideal(g, p)).groebner())


def bracket_basis(g: Graph, p: int) -> list[Polynomial]:
    """Reduced degrevlex Groebner basis of ``J_G^[p]``."""
    return list(_bracket_basis(g, p))


def check_witness_fast_path(g: Graph, p: int) -> bool:
    """Whether the product along the current labeling lies in ``(J^[p] : J)``
    and outside ``m^[p]``; sufficient for F-purity."""
    ring = edge_ring(g.n, p)
    w = fedder_witness_product(g, p)
    if in_monomial_ideal(w, maximal_bracket(ring, p)):
        return False
    gb = bracket_basis(g, p)
    return all(normal_form(w * e, gb).is_zero() for e in binomial_edge_ideal(g, p).generators)


def lemma25_shape(position: int, n: int) -> str:
    if position == 1:
        return "leading"
    if position == n - 1:
        return "trailing"
    return "interior"


def check_lemma25_congruence(g: Graph, p: int, arrangement: Sequence[int], position: int,
                             shape: Optional[str] = None) -> bool:
    """Witness products before and after swapping entries ``position`` and
    ``position + 1`` of ``arrangement`` agree modulo ``J_G^[p]``.

    The shape (leading swap moves the ``Y`` endpoint, trailing moves the ``X``
    endpoint) follows from the position; a given ``shape`` must agree with it.
    """
    seq = list(arrangement)
    n = len(seq)
    if sorted(seq) != list(range(1, g.n + 1)):
        raise ValueError("arrangement must list every vertex once")
    if not 1 <= position < n:
        raise ValueError(f"position {position} not in 1..{n - 1}")
    if shape is not None and shape != lemma25_shape(position, n) and not (
        n == 2 and shape in ("leading", "trailing")
    ):
        raise ValueError(f"position {position} is a {lemma25_shape(position, n)} swap, not {shape}")
    a, b = seq[position - 1], seq[position]
    if not g.has_edge(a, b):
        raise NotAnEdge(f"{{{a}, {b}}} is not an edge")
    swapped = list(seq)
    swapped[position - 1], swapped[position] = b, a
    ring = edge_ring(g.n, p)
    diff = witness_product(ring, seq, p) - witness_product(ring, swapped, p)
    return normal_form(diff, bracket_basis(g, p)).is_zero()


@dataclass
class FedderResult:
    fpure: bool
    p: int
    witness: Optional[Polynomial] = None
    colon_generators: list[Polynomial] = field(default_factory=list)
    complete: bool = True  # False when the fold stopped at a partial intersection

    def to_json(self, g: Optional[Graph] = None) -> dict:
        doc = {"p": self.p, "fpure": self.fpure,
               "witness": self.witness.format() if self.witness is not None else None}
        if g is not None:
            doc["graph6"] = to_graph6(g)
        return doc


def is_fpure_fedder(g: Graph, p: int = 2, budget: Optional[Budget] = None,
                    enforce_limits: bool = True) -> FedderResult:
    """Decide F-purity of ``S/J_G`` by computing ``(J_G^[p] : J_G)``.

    The fold over edges stops as soon as a partial intersection sits inside
    ``m^[p]``: every later intersection is smaller, so the answer is already no.
    """
    limit = FEDDER_LIMITS.get(p)
    if limit is None:
        raise ValueError(f"p must be one of {sorted(FEDDER_LIMITS)}")
    if enforce_limits and g.n > limit:
        raise BudgetExceeded(f"Fedder computation at p={p} limited to n <= {limit}")
    J = binomial_edge_ideal(g, p)
    ring = J.ring
    if J.is_zero():
        # S/(0) is regular
        return FedderResult(True, p, ring.one(), [ring.one()])
    mp = maximal_bracket(ring, p)

    folds = 0

    def inside(ideal: Ideal) -> bool:
        nonlocal folds
        folds += 1
        return all(in_monomial_ideal(h, mp) for h in ideal.generators)

    colon = colon_ideal(bracket_power(J), J, budget, stop=inside)
    gens = colon.generators
    for h in gens:
        if not in_monomial_ideal(h, mp):
            return FedderResult(True, p, h, gens)
    return FedderResult(False, p, None, gens, complete=folds == len(J.generators))
