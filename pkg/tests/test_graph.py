import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakly_closed.errors import (
    EmptySet,
    LoopEdge,
    MalformedGraph6,
    NTooLarge,
    SizeMismatch,
    VertexOutOfRange,
)
from weakly_closed.graph import (
    Graph,
    Labeling,
    canonical_code,
    clique_number,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    format_edges,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    parse_edge_list,
    parse_graph6,
    path_graph,
    relabel,
    to_graph6,
)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


@st.composite
def graph_and_labeling(draw, max_n=7):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(range(1, g.n + 1)))
    return g, Labeling(tuple(perm))


def test_path_from_edges():
    g = graph_from_edges(3, [(1, 2), (2, 3)])
    assert g.edges() == [(1, 2), (2, 3)]
    assert g == path_graph(3)


def test_five_cycle_from_edges():
    g = graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert g.edge_count == 5
    assert all(g.degree(v) == 2 for v in range(1, 6))


def test_duplicate_edges_collapse():
    g = graph_from_edges(2, [(1, 2), (2, 1)])
    assert g.edge_count == 1


@pytest.mark.parametrize(
    "n, edges, exc",
    [(3, [(1, 4)], VertexOutOfRange), (3, [(0, 1)], VertexOutOfRange),
     (3, [(2, 2)], LoopEdge), (17, [], NTooLarge), (0, [], NTooLarge)],
)
def test_graph_from_edges_errors(n, edges, exc):
    with pytest.raises(exc):
        graph_from_edges(n, edges)


def test_edge_list_text():
    g = parse_edge_list("1-2, 2-3,3-1")
    assert g.n == 3 and g.edge_count == 3
    assert parse_edge_list("1-2", n=4).n == 4
    assert format_edges(g) == "1-2,1-3,2-3"
    with pytest.raises(ValueError):
        parse_edge_list("1-2-3")


# graph6


def test_graph6_empty_five():
    assert parse_graph6("D??") == empty_graph(5)
    assert to_graph6(empty_graph(5)) == "D??"


def test_graph6_round_trip_c5():
    c5 = cycle_graph(5)
    assert parse_graph6(to_graph6(c5)) == c5


def test_graph6_against_networkx():
    ours = parse_graph6("DQc")
    ref = nx.from_graph6_bytes(b"DQc")
    assert sorted(ours.edges()) == sorted((u + 1, v + 1) for u, v in ref.edges())


@given(graphs(max_n=16))
@settings(max_examples=150)
def test_graph6_matches_networkx_encoder(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from((u - 1, v - 1) for u, v in g.edges())
    expected = nx.to_graph6_bytes(ref, header=False).decode().strip()
    assert to_graph6(g) == expected
    assert parse_graph6(expected) == g


@pytest.mark.parametrize("text", ["", "D?", "D???", "D?~", " ", "D?\x7f"])
def test_graph6_malformed(text):
    with pytest.raises(MalformedGraph6):
        parse_graph6(text)


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<D??") == empty_graph(5)


# elementary operations


def test_complement_basics():
    assert complement(complete_graph(4)) == empty_graph(4)
    c5 = cycle_graph(5)
    assert complement(complement(c5)) == c5
    assert canonical_code(complement(c5)) == canonical_code(c5)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_induced_subgraph():
    c5 = cycle_graph(5)
    assert induced_subgraph(c5, {1, 2, 3}) == path_graph(3)
    assert induced_subgraph(c5, range(1, 6)) == c5
    assert induced_subgraph(complete_graph(5), {1, 3, 5}) == complete_graph(3)
    with pytest.raises(EmptySet):
        induced_subgraph(c5, [])
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(c5, [6])


def test_connectivity():
    assert is_connected(cycle_graph(5))
    assert not is_connected(empty_graph(2))
    assert is_connected(Graph(1, (0,)))


def test_clique_number():
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(complete_graph(4)) == 4
    assert clique_number(empty_graph(3)) == 1


def _brute_clique(g):
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(1, g.n + 1), k):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                return k
    return 0


@given(graph_and_labeling())
def test_clique_number_invariant_and_correct(gl):
    g, lab = gl
    assert clique_number(g) == clique_number(relabel(g, lab)) == _brute_clique(g)


def test_relabel():
    p3 = path_graph(3)
    assert relabel(p3, Labeling.identity(3)) == p3
    assert relabel(p3, Labeling((3, 2, 1))).edges() == p3.edges()
    with pytest.raises(SizeMismatch):
        relabel(p3, Labeling.identity(4))


@given(graph_and_labeling())
def test_relabel_inverse(gl):
    g, lab = gl
    assert relabel(relabel(g, lab), lab.inverse()) == g


def test_labeling_validation():
    with pytest.raises(ValueError):
        Labeling((1, 1, 2))
    lab = Labeling.from_order([3, 1, 2])
    assert lab.perm == (2, 3, 1)
    assert lab(3) == 1


# canonical form


def test_canonical_code_c4_relabelings():
    a = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    b = graph_from_edges(4, [(1, 3), (3, 2), (2, 4), (4, 1)])
    assert canonical_code(a) == canonical_code(b)
    assert canonical_code(cycle_graph(5)) != canonical_code(path_graph(5))


def test_canonical_code_all_relabelings_of_six_vertex_example(six_vertex_example):
    codes = {
        canonical_code(relabel(six_vertex_example, Labeling(p)))
        for p in itertools.permutations(range(1, 7))
    }
    assert len(codes) == 1


def test_canonical_code_size_cap():
    with pytest.raises(NTooLarge):
        canonical_code(path_graph(10))


@given(graph_and_labeling())
def test_canonical_code_invariant(gl):
    g, lab = gl
    assert canonical_code(g) == canonical_code(relabel(g, lab))


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=200)
def test_canonical_code_decides_isomorphism(g, h):
    same = g.n == h.n and nx.is_isomorphic(_nx(g), _nx(h))
    assert (canonical_code(g) == canonical_code(h)) == same
    assert is_isomorphic(g, h) == same


def _nx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(1, g.n + 1))
    ref.add_edges_from(g.edges())
    return ref


def test_graph_is_immutable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4
