"""Sparse polynomials over a prime field.

A monomial is a single Python int: variable ``i`` owns the byte at bit offset
``8 * i`` and the total degree sits in the byte above the last variable. Each
byte stays below 128, so the top bit of every byte works as a guard for the
subtraction-based divisibility test, and multiplying monomials is integer
addition.

Term orders are plain key functions on these ints; a polynomial stores its
terms in a dict and is sorted only when asked for its leading term or text.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

MAX_EXPONENT = 127
ORDERS = ("degrevlex", "lex", "block")


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]

    def __repr__(self):
        return f"GF({self.p})"


class Ring:
    """Polynomial ring over GF(p) on named variables.

    With ``tag=True`` a final variable ``T`` is appended for elimination;
    the block order ranks by its exponent first.
    """

    def __init__(self, names: Sequence[str], p: int, tag: bool = False):
        names = list(names)
        if tag:
            names.append("T")
        self.names = tuple(names)
        self.nvars = len(names)
        self.field = PrimeField(p)
        self.p = p
        self.has_tag = tag
        self.deg_shift = 8 * self.nvars
        self.guard = int("80" * (self.nvars + 1), 16)
        self._orders: dict[str, Callable[[int], int]] = {}

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.names, self.p) == (other.names, other.p)

    def __hash__(self):
        return hash((self.names, self.p))

    def __repr__(self):
        return f"Ring(GF({self.p}), {', '.join(self.names)})"

    # monomials

    def monomial(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has the wrong length")
        m = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
            m |= e << (8 * i)
        deg = sum(exps)
        if deg > MAX_EXPONENT:
            raise OverflowError(f"degree {deg} out of range")
        return m | deg << self.deg_shift

    def exponents(self, m: int) -> tuple[int, ...]:
        return tuple(m >> (8 * i) & 0xFF for i in range(self.nvars))

    def degree(self, m: int) -> int:
        return m >> self.deg_shift

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        m = 0
        deg = 0
        for i in range(self.nvars):
            e = max(a >> (8 * i) & 0xFF, b >> (8 * i) & 0xFF)
            m |= e << (8 * i)
            deg += e
        assert deg <= MAX_EXPONENT, "monomial degree overflow"
        return m | deg << self.deg_shift

    def coprime(self, a: int, b: int) -> bool:
        return self.lcm(a, b) == a + b

    def var_index(self, name: str) -> int:
        return self.names.index(name)

    # term orders

    def order_key(self, kind: str = "degrevlex") -> Callable[[int], int]:
        """Integer sort key realising the named order (larger key = larger monomial).

        Variables rank in declaration order: the first name is largest.
        """
        if kind in self._orders:
            return self._orders[kind]
        shift = self.deg_shift
        if kind == "degrevlex":
            # degree first, then the smaller exponent in the last differing variable wins
            def key(m: int, _s=shift) -> int:
                return ((m >> _s) << (_s + 1)) - m
        elif kind == "lex":
            n = self.nvars

            def key(m: int, _n=n) -> int:
                k = 0
                for i in range(_n):
                    k = k << 8 | (m >> (8 * i) & 0xFF)
                return k
        elif kind == "block":
            if not self.has_tag:
                raise ValueError("block order needs a ring built with tag=True")
            tshift = 8 * (self.nvars - 1)

            def key(m: int, _s=shift, _t=tshift) -> int:
                t = m >> _t & 0xFF
                rest = m - (t << _t) - (t << _s)
                return (t << (_s + 8)) + ((rest >> _s) << (_s + 1)) - rest
        else:
            raise ValueError(f"unknown order {kind!r}; expected one of {ORDERS}")
        self._orders[kind] = key
        return key

    # construction helpers

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {self.monomial([0] * self.nvars): c} if c else {})

    def var(self, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.var_index(name)] = power
        return Polynomial(self, {self.monomial(exps): 1})

    @cached_property
    def gens(self) -> dict[str, "Polynomial"]:
        return {name: self.var(name) for name in self.names}

    def from_terms(self, terms: Iterable[tuple[int, Mapping[str, int]]]) -> "Polynomial":
        out: dict[int, int] = {}
        for c, powers in terms:
            exps = [0] * self.nvars
            for name, e in powers.items():
                exps[self.var_index(name)] += e
            m = self.monomial(exps)
            out[m] = (out.get(m, 0) + c) % self.p
        return Polynomial(self, {m: c for m, c in out.items() if c})

    def parse(self, text: str) -> "Polynomial":
        """Parse the canonical text form, e.g. ``"X1^2*Y2^2 + 2*X2 - 1"``."""
        text = text.replace(" ", "").replace("-", "+-")
        terms = []
        for chunk in filter(None, text.split("+")):
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            coeff = 1
            powers: dict[str, int] = {}
            for factor in chunk.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, e = factor.partition("^")
                powers[name] = powers.get(name, 0) + (int(e) if e else 1)
            terms.append((sign * coeff, powers))
        return self.from_terms(terms)


@dataclass(frozen=True, eq=False)
class Polynomial:
    ring: Ring
    terms: Mapping[int, int]

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return isinstance(other, Polynomial) and self.ring == other.ring and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {m: v * c % self.ring.p for m, v in self.terms.items()})
        other = self._coerce(other)
        p = self.ring.p
        out: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = (out.get(m, 0) + c1 * c2) % p
        for m in [m for m, c in out.items() if not c]:
            del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono: int, coeff: int = 1) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, {m + mono: c * coeff % p for m, c in self.terms.items()})

    def sorted_terms(self, order: str = "degrevlex") -> list[tuple[int, int]]:
        key = self.ring.order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: str = "degrevlex") -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order_key(order))

    def leading_coefficient(self, order: str = "degrevlex") -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: str = "degrevlex") -> "Polynomial":
        if not self.terms:
            return self
        return self * self.ring.field.inv[self.leading_coefficient(order)]

    def total_degree(self) -> int:
        return max((self.ring.degree(m) for m in self.terms), default=-1)

    def uses_variable(self, name: str) -> bool:
        i = self.ring.var_index(name)
        return any(m >> (8 * i) & 0xFF for m in self.terms)

    def frobenius(self) -> "Polynomial":
        """p-th power computed termwise (valid in characteristic p)."""
        p = self.ring.p
        out: dict[int, int] = {}
        for m, c in self.terms.items():
            exps = self.ring.exponents(m)
            out[self.ring.monomial([e * p for e in exps])] = pow(c, p, p)
        return Polynomial(self.ring, out)

    def format(self, order: str = "degrevlex") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            exps = self.ring.exponents(m)
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, exps) if e
            ]
            neg = c > self.ring.p // 2 and self.ring.p > 2
            mag = self.ring.p - c if neg else c
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            pieces.append(("- " if neg else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"
