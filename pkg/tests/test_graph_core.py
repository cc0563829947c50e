import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clspaces.graph_core import (
    GraphError,
    SizeLimitError,
    bitset,
    chromatic_number,
    clique_number,
    complement,
    complete_graph,
    cycle_graph,
    graph_from_json,
    induced_subgraph,
    is_perfect,
    make_graph,
    maximal_cliques,
    maximal_stable_sets,
    members,
    path_graph,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return make_graph(n, chosen)


def naive_maximal_cliques(g):
    cliques = [s for s in range(1, 1 << g.n) if g.is_clique(s)]
    return sorted(c for c in cliques if not any(d != c and d & c == c for d in cliques))


def test_bitset_roundtrip():
    assert members(bitset([4, 0, 2])) == [0, 2, 4]
    assert bitset([]) == 0


def test_json_roundtrip_and_canonical_edges():
    g = graph_from_json({"n": 3, "edges": [[2, 1], [0, 1]]})
    assert g.to_json() == {"n": 3, "edges": [[0, 1], [1, 2]]}
    assert graph_from_json(g.to_json()) == g


@pytest.mark.parametrize("doc", [
    {"n": 0, "edges": []},
    {"n": 25, "edges": []},
    {"n": 2, "edges": [[0, 0]]},
    {"n": 2, "edges": [[0, 2]]},
    {"n": 2},
])
def test_bad_graph_documents(doc):
    with pytest.raises(GraphError):
        graph_from_json(doc)


def test_known_cliques():
    assert maximal_cliques(complete_graph(4)) == [0b1111]
    assert maximal_cliques(make_graph(3, [])) == [1, 2, 4]
    assert [members(c) for c in maximal_cliques(path_graph(3))] == [[0, 1], [1, 2]]
    assert [members(s) for s in maximal_stable_sets(path_graph(3))] == [[1], [0, 2]]


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_cliques_match_naive_scan(g):
    assert maximal_cliques(g) == naive_maximal_cliques(g)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_complement_is_involution_and_swaps_roles(g):
    assert complement(complement(g)) == g
    assert maximal_stable_sets(g) == maximal_cliques(complement(g))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_chromatic_number_matches_networkx_bounds(g):
    chi = chromatic_number(g)
    assert clique_number(g) <= chi
    nxg = nx.Graph(g.edges())
    nxg.add_nodes_from(range(g.n))
    greedy = max(nx.greedy_color(nxg).values(), default=-1) + 1
    assert chi <= max(greedy, 1)


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[i] != colors[j] for i, j in g.edges()):
                return k


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_chromatic_number_exact(g):
    assert chromatic_number(g) == brute_chromatic(g)


def test_odd_holes_are_imperfect():
    ok, wit = is_perfect(cycle_graph(5))
    assert not ok and members(wit) == [0, 1, 2, 3, 4]
    assert not is_perfect(cycle_graph(7))[0]
    assert not is_perfect(complement(cycle_graph(7)))[0]
    assert is_perfect(cycle_graph(6)) == (True, None)


def test_imperfect_witness_is_minimal():
    g = make_graph(6, list(cycle_graph(5).edges()) + [(4, 5)])
    ok, wit = is_perfect(g)
    assert not ok and members(wit) == [0, 1, 2, 3, 4]


def test_perfectness_size_cap():
    with pytest.raises(SizeLimitError):
        is_perfect(make_graph(13, []))


def test_induced_subgraph_relabels():
    sub, old = induced_subgraph(cycle_graph(5), bitset([0, 2, 3]))
    assert old == [0, 2, 3]
    assert sub.edges() == [(1, 2)]
