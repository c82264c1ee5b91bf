"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Critical pairs are processed lowest lcm degree first (ties by the term order).
Reduction keeps a heap of pending monomials so the leading term is always
available in O(log t).
"""
from __future__ import annotations

import heapq
import itertools
import os
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from ..errors import BudgetExceeded
from .ring import Polynomial, Ring

DEFAULT_MAX_BASIS = 20000
DEFAULT_MAX_PAIRS = 2_000_000


@dataclass(frozen=True)
class Budget:
    max_basis: int = DEFAULT_MAX_BASIS
    max_pairs: int = DEFAULT_MAX_PAIRS

    @classmethod
    def from_env(cls) -> "Budget":
        """``WC_BUDGET`` is ``"<max_basis>"`` or ``"<max_basis>,<max_pairs>"``."""
        raw = os.environ.get("WC_BUDGET", "").strip()
        if not raw:
            return cls()
        parts = [int(x) for x in raw.split(",")]
        if len(parts) == 1:
            return cls(parts[0])
        return cls(parts[0], parts[1])


_recorders: list[list] = []


@contextmanager
def collect_bases() -> Iterator[list[tuple[list[Polynomial], str]]]:
    """Record every (basis, order) returned by :func:`buchberger` inside the block."""
    found: list[tuple[list[Polynomial], str]] = []
    _recorders.append(found)
    try:
        yield found
    finally:
        _recorders.remove(found)


class _Reducer:
    """Basis elements as (leading monomial, monic tail terms) for fast reduction."""

    def __init__(self, ring: Ring, order: str):
        self.ring = ring
        self.key = ring.order_key(order)
        self.leads: list[int] = []
        self.tails: list[list[tuple[int, int]]] = []
        self.active: list[bool] = []

    def add(self, poly: dict[int, int]) -> int:
        lead = max(poly, key=self.key)
        self.leads.append(lead)
        self.tails.append([(m, c) for m, c in poly.items() if m != lead])
        self.active.append(True)
        return len(self.leads) - 1

    def divisor(self, m: int) -> int:
        g = self.ring.guard
        mg = m | g
        for idx, lead in enumerate(self.leads):
            if self.active[idx] and (mg - lead) & g == g:
                return idx
        return -1

    def reduce(self, f: dict[int, int], full: bool = True) -> dict[int, int]:
        """Remainder of ``f``; with ``full=False`` stop at the first irreducible term."""
        p = self.ring.p
        key = self.key
        f = dict(f)
        heap = [(-key(m), m) for m in f]
        heapq.heapify(heap)
        out: dict[int, int] = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            idx = self.divisor(m)
            if idx < 0:
                out[m] = c
                if not full:
                    out.update(f)
                    return out
                continue
            q = m - self.leads[idx]
            for tm, tc in self.tails[idx]:
                nm = tm + q
                old = f.get(nm)
                v = ((old or 0) - c * tc) % p
                if v:
                    f[nm] = v
                    if old is None:
                        heapq.heappush(heap, (-key(nm), nm))
                elif old is not None:
                    del f[nm]
        return out


def _monic(ring: Ring, f: dict[int, int], key) -> dict[int, int]:
    lead = max(f, key=key)
    inv = ring.field.inv[f[lead]]
    if inv == 1:
        return f
    p = ring.p
    return {m: c * inv % p for m, c in f.items()}


def spoly(f: Polynomial, g: Polynomial, order: str = "degrevlex") -> Polynomial:
    ring = f.ring
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = ring.lcm(lf, lg)
    cf, cg = f.terms[lf], g.terms[lg]
    inv = ring.field.inv
    return f.mul_term(lcm - lf, inv[cf]) - g.mul_term(lcm - lg, inv[cg])


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: str = "degrevlex") -> Polynomial:
    """Full remainder of ``f`` on division by ``basis`` (zero iff ``f`` is in the
    ideal when ``basis`` is a Groebner basis for ``order``)."""
    ring = f.ring
    red = _Reducer(ring, order)
    key = red.key
    for g in basis:
        if g:
            red.add(_monic(ring, dict(g.terms), key))
    return Polynomial(ring, red.reduce(f.terms))


def divide(f: Polynomial, basis: Sequence[Polynomial], order: str = "degrevlex"
           ) -> tuple[list[Polynomial], Polynomial]:
    """Division with recorded quotients: ``f == sum(q_i * g_i) + r``."""
    ring = f.ring
    key = ring.order_key(order)
    p = ring.p
    inv = ring.field.inv
    leads = [g.leading_monomial(order) if g else None for g in basis]
    quotients: list[dict[int, int]] = [{} for _ in basis]
    rem: dict[int, int] = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for idx, lead in enumerate(leads):
            if lead is not None and ring.divides(lead, m):
                q = m - lead
                factor = c * inv[basis[idx].terms[lead]] % p
                quotients[idx][q] = (quotients[idx].get(q, 0) + factor) % p
                for gm, gc in basis[idx].terms.items():
                    nm = gm + q
                    v = (work.get(nm, 0) - factor * gc) % p
                    if v:
                        work[nm] = v
                    else:
                        work.pop(nm, None)
                break
        else:
            rem[m] = c
            del work[m]
    return [Polynomial(ring, {m: c for m, c in q.items() if c}) for q in quotients], Polynomial(ring, rem)


def buchberger(gens: Sequence[Polynomial], order: str = "degrevlex",
               budget: Optional[Budget] = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``, sorted by
    leading monomial (largest first)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    budget = budget or Budget.from_env()
    key = ring.order_key(order)
    red = _Reducer(ring, order)
    polys: list[dict[int, int]] = []
    degree = ring.degree

    pairs: list[tuple[int, int, int, int, int]] = []  # (deg lcm, -key lcm, tiebreak, i, j)
    tiebreak = itertools.count()
    basis_idx: list[int] = []
    processed = 0

    def update(h: int) -> None:
        nonlocal pairs
        lh = red.leads[h]
        # pairs (h, g) surviving the chain criterion among themselves
        cand = [(g, ring.lcm(lh, red.leads[g])) for g in basis_idx]
        keep = []
        for pos, (g, lcm_hg) in enumerate(cand):
            coprime = lcm_hg == lh + red.leads[g]
            if coprime:
                keep.append((g, lcm_hg, True))
                continue
            dominated = any(
                other_lcm != lcm_hg and ring.divides(other_lcm, lcm_hg)
                for _, other_lcm in cand[pos + 1:]
            ) or any(ring.divides(other_lcm, lcm_hg) for _, other_lcm, _ in keep)
            if not dominated:
                keep.append((g, lcm_hg, False))
        # drop equal-lcm duplicates
        fresh = []
        seen_lcm: set[int] = set()
        for g, lcm_hg, coprime in keep:
            if lcm_hg in seen_lcm:
                continue
            seen_lcm.add(lcm_hg)
            if not coprime:
                fresh.append((g, lcm_hg))
        # old pairs made redundant by h
        survivors = []
        for entry in pairs:
            _, _, _, a, b = entry
            lab = ring.lcm(red.leads[a], red.leads[b])
            if (ring.divides(lh, lab) and ring.lcm(red.leads[a], lh) != lab
                    and ring.lcm(red.leads[b], lh) != lab):
                continue
            survivors.append(entry)
        for g, lcm_hg in fresh:
            survivors.append((degree(lcm_hg), -key(lcm_hg), next(tiebreak), g, h))
        heapq.heapify(survivors)
        pairs = survivors
        for g in list(basis_idx):
            if ring.divides(lh, red.leads[g]):
                basis_idx.remove(g)
                red.active[g] = False
        basis_idx.append(h)

    for g in gens:
        r = red.reduce(g.terms)
        if r:
            r = _monic(ring, r, key)
            polys.append(r)
            h = red.add(r)
            update(h)

    while pairs:
        _, _, _, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > budget.max_pairs:
            raise BudgetExceeded(f"more than {budget.max_pairs} critical pairs")
        fi, fj = polys[i], polys[j]
        li, lj = red.leads[i], red.leads[j]
        lcm = ring.lcm(li, lj)
        s: dict[int, int] = {}
        p = ring.p
        for f, lead in ((fi, li), (fj, lj)):
            sign = 1 if f is fi else -1
            q = lcm - lead
            for m, c in f.items():
                if m == lead:
                    continue
                nm = m + q
                v = (s.get(nm, 0) + sign * c) % p
                if v:
                    s[nm] = v
                else:
                    s.pop(nm, None)
        r = red.reduce(s)
        if not r:
            continue
        r = _monic(ring, r, key)
        polys.append(r)
        if len(polys) > budget.max_basis:
            raise BudgetExceeded(f"basis grew past {budget.max_basis} polynomials")
        h = red.add(r)
        update(h)

    result = _interreduce(ring, [polys[i] for i in basis_idx], order)
    for rec in _recorders:
        rec.append((result, order))
    return result


def _interreduce(ring: Ring, polys: list[dict[int, int]], order: str) -> list[Polynomial]:
    key = ring.order_key(order)
    leads = [max(f, key=key) for f in polys]
    minimal = [
        f for f, lf in zip(polys, leads)
        if not any(lg != lf and ring.divides(lg, lf) for lg in leads)
    ]
    # equal leading monomials cannot survive the update step, but keep the guard
    uniq: dict[int, dict[int, int]] = {}
    for f in minimal:
        uniq.setdefault(max(f, key=key), f)
    minimal = list(uniq.values())
    out = []
    for idx, f in enumerate(minimal):
        red = _Reducer(ring, order)
        for jdx, g in enumerate(minimal):
            if jdx != idx:
                red.add(g)
        lead = max(f, key=key)
        tail = {m: c for m, c in f.items() if m != lead}
        reduced = red.reduce(tail)
        reduced[lead] = f[lead]
        out.append(Polynomial(ring, _monic(ring, reduced, key)))
    out.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return out


def is_groebner_basis(basis: Sequence[Polynomial], order: str = "degrevlex") -> bool:
    """Buchberger's criterion checked on every pair, with no pair skipped."""
    basis = [g for g in basis if g]
    if not basis:
        return True
    ring = basis[0].ring
    red = _Reducer(ring, order)
    for g in basis:
        red.add(_monic(ring, dict(g.terms), red.key))
    for a, b in itertools.combinations(range(len(basis)), 2):
        s = spoly(basis[a], basis[b], order)
        if s and red.reduce(s.terms, full=False):
            return False
    return True


def is_reduced(basis: Sequence[Polynomial], order: str = "degrevlex") -> bool:
    for idx, g in enumerate(basis):
        if g.leading_coefficient(order) != 1:
            return False
        others = [h.leading_monomial(order) for k, h in enumerate(basis) if k != idx]
        if any(g.ring.divides(lead, m) for lead in others for m in g.terms):
            return False
    return True
