import pytest

from weakly_closed.algebra.fedder import (
    FEDDER_LIMITS,
    binomial_edge_ideal,
    check_lemma25_congruence,
    check_witness_fast_path,
    edge_ring,
    fedder_witness_product,
    is_fpure_fedder,
    lemma25_shape,
    maximal_bracket,
    witness_product,
)
from weakly_closed.algebra.ideal import in_monomial_ideal
from weakly_closed.classify import is_weakly_closed
from weakly_closed.enumeration import enumerate_connected
from weakly_closed.errors import BudgetExceeded, NotAnEdge, NTooLarge
from weakly_closed.graph import complete_graph, cycle_graph, empty_graph, path_graph, relabel


def test_edge_ideal_limits():
    assert binomial_edge_ideal(empty_graph(3)).is_zero()
    with pytest.raises(NTooLarge):
        binomial_edge_ideal(path_graph(7))


def test_witness_small_cases():
    ring = edge_ring(2, 2)
    assert fedder_witness_product(path_graph(2), 2) == ring.parse("Y1*X1*Y2*X2 + Y1^2*X2^2")
    with pytest.raises(ValueError):
        witness_product(ring, [1, 2], 1)
    w3 = fedder_witness_product(path_graph(3), 2)
    r3 = edge_ring(3, 2)
    # under lex the lead is the product of the minors' leads X_i*Y_j, i.e. X1X2X3Y1Y2Y3
    assert r3.exponents(w3.leading_monomial("lex")) == (1, 1, 1, 1, 1, 1, 0)
    # degrevlex picks X_j*Y_i from each minor, so its lead is not squarefree,
    # but the squarefree term survives with coefficient 1
    assert max(r3.exponents(w3.leading_monomial())) == 2
    assert w3.terms[r3.monomial([1, 1, 1, 1, 1, 1, 0])] == 1
    assert not in_monomial_ideal(w3, maximal_bracket(edge_ring(3, 2), 2))


def test_fast_path_examples(six_vertex_example):
    assert check_witness_fast_path(path_graph(2), 2)
    assert check_witness_fast_path(six_vertex_example, 2)
    assert not check_witness_fast_path(cycle_graph(5), 2)


def test_single_edge_fpure():
    r = is_fpure_fedder(path_graph(2), 2)
    assert r.fpure and r.witness == edge_ring(2, 2).parse("X1*Y2 + X2*Y1")
    doc = r.to_json(path_graph(2))
    assert doc["fpure"] is True and doc["graph6"] == "A_"


def test_edgeless_is_fpure():
    assert is_fpure_fedder(empty_graph(2), 2).fpure


def test_c5_not_fpure_in_char_two():
    r = is_fpure_fedder(cycle_graph(5), 2)
    assert not r.fpure and r.witness is None


def test_limits_enforced():
    with pytest.raises(BudgetExceeded):
        is_fpure_fedder(path_graph(6), 2)
    with pytest.raises(BudgetExceeded):
        is_fpure_fedder(path_graph(5), 3)
    with pytest.raises(ValueError):
        is_fpure_fedder(path_graph(3), 11)
    assert FEDDER_LIMITS[2] == 5


@pytest.mark.parametrize("p", [2, 3])
def test_fast_path_implies_fedder(p):
    for n in range(2, 5):
        for g in enumerate_connected(n):
            v = is_weakly_closed(g)
            h = relabel(g, v.certificate)
            if check_witness_fast_path(h, p):
                assert is_fpure_fedder(h, p).fpure


def test_fedder_small_graphs_char_three():
    for n in range(2, 5):
        for g in enumerate_connected(n):
            assert is_fpure_fedder(g, 3).fpure


def test_lemma25_shapes(c4_example):
    assert [lemma25_shape(k, 4) for k in (1, 2, 3)] == ["leading", "interior", "trailing"]
    assert check_lemma25_congruence(c4_example, 2, (1, 2, 3, 4), 1, "leading")
    assert check_lemma25_congruence(c4_example, 2, (1, 2, 3, 4), 2, "interior")
    assert check_lemma25_congruence(c4_example, 2, (1, 2, 3, 4), 3, "trailing")
    with pytest.raises(NotAnEdge):
        check_lemma25_congruence(c4_example, 2, (1, 3, 2, 4), 1)
    with pytest.raises(ValueError):
        check_lemma25_congruence(c4_example, 2, (1, 2, 3, 4), 2, "leading")


def test_lemma25_in_char_three(c4_example):
    for pos in (1, 2, 3):
        assert check_lemma25_congruence(c4_example, 3, (1, 2, 3, 4), pos)


def test_non_edge_swap_generally_fails():
    # without the edge the two products need not agree
    g = path_graph(3)
    ring = edge_ring(3, 2)
    from weakly_closed.algebra.groebner import normal_form
    from weakly_closed.algebra.fedder import bracket_basis

    diff = witness_product(ring, [1, 3, 2], 2) - witness_product(ring, [3, 1, 2], 2)
    assert not normal_form(diff, bracket_basis(g, 2)).is_zero()


@pytest.mark.slow
def test_c5_fpure_in_char_three():
    assert is_fpure_fedder(cycle_graph(5), 3, enforce_limits=False).fpure


@pytest.mark.slow
def test_complete_graph_fpure_char_two():
    assert is_fpure_fedder(complete_graph(5), 2).fpure
