import random

import pytest

from weakly_closed.algebra.fedder import binomial_edge_ideal, edge_ring, minor
from weakly_closed.algebra.groebner import normal_form
from weakly_closed.algebra.ideal import (
    Ideal,
    bracket_power,
    colon_by_element,
    colon_ideal,
    collect_colons,
    exact_quotient,
    frobenius_maximal,
    in_monomial_ideal,
    intersect,
)
from weakly_closed.algebra.ring import Ring
from weakly_closed.errors import DivisionNotExact
from weakly_closed.graph import cycle_graph, path_graph


@pytest.fixture
def xy():
    return Ring(["x", "y", "z"], 3, tag=True)


def _same(a: Ideal, b: Ideal) -> bool:
    return all(a.contains(g) for g in b.generators) and all(b.contains(g) for g in a.generators)


def test_colon_examples(xy):
    x, y = xy.gens["x"], xy.gens["y"]
    assert _same(colon_by_element(Ideal(xy, [x ** 2]), x), Ideal(xy, [x]))
    assert _same(colon_by_element(Ideal(xy, [x * y]), x), Ideal(xy, [y]))
    assert _same(colon_ideal(Ideal(xy, [x ** 2 * y ** 2]), Ideal(xy, [x * y])), Ideal(xy, [x * y]))
    I = Ideal(xy, [x ** 2 + y, x * y])
    assert _same(colon_by_element(I, xy.one()), I)
    assert colon_ideal(I, I).is_unit()


def test_colon_by_zero_rejected(xy):
    with pytest.raises(ValueError):
        colon_by_element(Ideal(xy, [xy.gens["x"]]), xy.zero())
    with pytest.raises(ValueError):
        colon_ideal(Ideal(xy, [xy.gens["x"]]), Ideal(xy, []))


def test_intersection(xy):
    x, y = xy.gens["x"], xy.gens["y"]
    meet = intersect(Ideal(xy, [x]), Ideal(xy, [y]))
    assert _same(meet, Ideal(xy, [x * y]))
    assert not any(g.uses_variable("T") for g in meet.generators)
    assert intersect(Ideal(xy, []), Ideal(xy, [x])).is_zero()


def test_exact_quotient(xy):
    x, y = xy.gens["x"], xy.gens["y"]
    assert exact_quotient(x * y + x ** 2, x) == x + y
    with pytest.raises(DivisionNotExact):
        exact_quotient(x * y + 1, x)


def test_bracket_power_examples():
    ring = edge_ring(2, 2)
    J = binomial_edge_ideal(path_graph(2), 2)
    (g,) = bracket_power(J).generators
    assert g == ring.parse("X1^2*Y2^2 + X2^2*Y1^2")
    ring3 = edge_ring(2, 3)
    (g3,) = bracket_power(binomial_edge_ideal(path_graph(2), 3)).generators
    assert g3 == ring3.parse("X1^3*Y2^3 - X2^3*Y1^3")
    assert bracket_power(Ideal(ring, [])).is_zero()
    with pytest.raises(ValueError):
        bracket_power(J, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_bracket_power_is_generator_power(p):
    J = binomial_edge_ideal(cycle_graph(4), p)
    for g, h in zip(J.generators, bracket_power(J).generators):
        prod = J.ring.one()
        for _ in range(p):
            prod = prod * g
        assert prod == h


def test_binomial_edge_ideal_generators():
    ring = edge_ring(3, 2)
    assert binomial_edge_ideal(path_graph(3)).generators == [minor(ring, 1, 2), minor(ring, 2, 3)]
    assert minor(ring, 1, 2) == ring.parse("X1*Y2 - X2*Y1")


def test_single_edge_colon_contains_minor():
    J = binomial_edge_ideal(path_graph(2), 2)
    colon = colon_ideal(bracket_power(J), J)
    assert colon.contains(J.generators[0])


def test_monomial_membership():
    ring = edge_ring(2, 2)
    mp = frobenius_maximal(ring, 2)
    assert len(mp) == 4
    assert in_monomial_ideal(ring.parse("X1^2*Y2^2"), mp)
    assert not in_monomial_ideal(ring.parse("X1*Y2 + X2*Y1"), mp)
    assert in_monomial_ideal(ring.zero(), mp)


def _random_poly(ring, rnd, names, degree):
    f = ring.zero()
    for _ in range(rnd.randint(1, 4)):
        powers = {}
        for _ in range(rnd.randint(0, degree)):
            v = rnd.choice(names)
            powers[v] = powers.get(v, 0) + 1
        f = f + ring.from_terms([(rnd.randint(1, ring.p - 1), powers)])
    return f


def test_colon_soundness_and_completeness():
    g = cycle_graph(4)
    J = binomial_edge_ideal(g, 2)
    I = bracket_power(J)
    ring = J.ring
    names = [v for v in ring.names if v != "T"]
    rnd = random.Random(11)
    f = J.generators[0]
    with collect_colons() as seen:
        colon = colon_by_element(I, f)
    assert len(seen) == 1
    gb_i = I.groebner()
    for h in colon.generators:
        assert normal_form(h * f, gb_i).is_zero()
    # membership in the colon must agree with the defining condition h*f in I,
    # both for random low-degree h and for multiples of f (f*f = f^2 lies in I)
    hits = misses = 0
    for k in range(300):
        h = _random_poly(ring, rnd, names, 2)
        if k % 2:
            h = h * f
        inside = normal_form(h * f, gb_i).is_zero()
        assert colon.contains(h) == inside
        hits += inside
        misses += not inside
    assert hits and misses
