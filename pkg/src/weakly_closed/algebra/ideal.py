"""Ideals, intersections and colon ideals via a tag variable."""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from ..errors import DivisionNotExact
from .groebner import Budget, buchberger, divide, normal_form
from .ring import Polynomial, Ring


@dataclass
class Ideal:
    ring: Ring
    generators: list[Polynomial]
    _bases: dict[str, list[Polynomial]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.generators = [g for g in self.generators if g]

    def groebner(self, order: str = "degrevlex", budget: Optional[Budget] = None) -> list[Polynomial]:
        if order not in self._bases:
            self._bases[order] = buchberger(self.generators, order, budget)
        return self._bases[order]

    def contains(self, f: Polynomial, order: str = "degrevlex") -> bool:
        return normal_form(f, self.groebner(order), order).is_zero()

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self, order: str = "degrevlex") -> bool:
        return self.contains(self.ring.one(), order)

    def format(self) -> list[str]:
        return [g.format() for g in self.generators]


_colon_recorders: list[list] = []


@contextmanager
def collect_colons() -> Iterator[list[tuple["Ideal", Polynomial, "Ideal"]]]:
    """Record every ``(I, f, (I : f))`` computed by :func:`colon_by_element`."""
    found: list[tuple[Ideal, Polynomial, Ideal]] = []
    _colon_recorders.append(found)
    try:
        yield found
    finally:
        _colon_recorders.remove(found)


def bracket_power(ideal: Ideal, p: Optional[int] = None) -> Ideal:
    """Ideal generated by the p-th powers of the generators (Frobenius is a ring map)."""
    p = p or ideal.ring.p
    if p != ideal.ring.p:
        raise ValueError("bracket power must use the field characteristic")
    return Ideal(ideal.ring, [g.frobenius() for g in ideal.generators])


def intersect(a: Ideal, b: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """``a ∩ b`` = elimination of T from ``T*a + (1 - T)*b`` under the block order."""
    ring = a.ring
    if not ring.has_tag:
        raise ValueError("intersection needs a ring with a tag variable")
    if a.is_zero() or b.is_zero():
        return Ideal(ring, [])
    t = ring.gens["T"]
    gens = [t * f for f in a.generators] + [(1 - t) * g for g in b.generators]
    basis = buchberger(gens, "block", budget)
    kept = [g for g in basis if not g.uses_variable("T")]
    return Ideal(ring, kept)


def exact_quotient(h: Polynomial, f: Polynomial, order: str = "degrevlex") -> Polynomial:
    (q,), r = divide(h, [f], order)
    if r:
        raise DivisionNotExact(f"{h} is not a multiple of {f}")
    return q


def colon_by_element(ideal: Ideal, f: Polynomial, budget: Optional[Budget] = None) -> Ideal:
    """``(I : f)``, from ``I ∩ (f)`` with every generator divided by ``f``."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    ring = ideal.ring
    if ideal.is_zero():
        return Ideal(ring, [])
    inter = intersect(ideal, Ideal(ring, [f]), budget)
    quotients = [exact_quotient(h, f) for h in inter.generators]
    result = Ideal(ring, reduced_generators(quotients, budget))
    for rec in _colon_recorders:
        rec.append((ideal, f, result))
    return result


def reduced_generators(gens: Sequence[Polynomial], budget: Optional[Budget] = None) -> list[Polynomial]:
    return buchberger(list(gens), "degrevlex", budget)


def colon_ideal(ideal: Ideal, other: Ideal, budget: Optional[Budget] = None,
                stop=None) -> Ideal:
    """``(I : J)`` as the left-to-right intersection of ``(I : f)`` over J's generators.

    ``stop``, if given, is called on each partial intersection; a true result
    ends the fold early and that partial ideal (which contains the full
    colon) is returned.
    """
    gens = [g for g in other.generators if g]
    if not gens:
        raise ValueError("colon by an ideal with no nonzero generator")
    acc: Optional[Ideal] = None
    for f in gens:
        part = colon_by_element(ideal, f, budget)
        acc = part if acc is None else intersect(acc, part, budget)
        if acc.generators:
            acc = Ideal(ideal.ring, reduced_generators(acc.generators, budget))
        if stop is not None and stop(acc):
            break
    return acc


def in_monomial_ideal(f: Polynomial, monomials: Sequence[int]) -> bool:
    """Every term of ``f`` divisible by one of the monomial generators."""
    ring = f.ring
    return all(any(ring.divides(g, m) for g in monomials) for m in f.terms)


def frobenius_maximal(ring: Ring, p: int, names: Optional[Sequence[str]] = None) -> list[int]:
    """Monomial generators ``v^p`` of the bracket power of the irrelevant ideal."""
    names = names or [v for v in ring.names if v != "T"]
    out = []
    for name in names:
        exps = [0] * ring.nvars
        exps[ring.var_index(name)] = p
        out.append(ring.monomial(exps))
    return out
