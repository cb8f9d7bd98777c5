import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle, from_nx, to_nx
from egk.graph import (Bipartition, Graph, Graph6Error, GraphError, OddCycle, block_cut_tree,
                       bridges, connected_components, degree_profile, disjoint_union,
                       induced_subgraph, is_two_connected, parse_edge_list, parse_graph6,
                       read_graph6_lines, serialize_edge_list, serialize_graph6, two_coloring)


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


# decoded independently with networkx; these are frozen
@pytest.mark.parametrize("text, n, edges", [
    ("D?{", 5, [(0, 4), (1, 4), (2, 4), (3, 4)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("@", 1, []),
    ("?", 0, []),
])
def test_graph6_known_strings(text, n, edges):
    g = parse_graph6(text)
    assert (g.n, g.edges()) == (n, edges)
    assert serialize_graph6(g) == text
    assert sorted(nx.from_graph6_bytes(text.encode()).edges()) == edges


def test_graph6_petersen(petersen):
    assert serialize_graph6(petersen) == "IheA@GUAo"


def test_graph6_header_and_newline():
    assert parse_graph6(">>graph6<<Bw\n") == parse_graph6("Bw")


@pytest.mark.parametrize("text, offset", [
    ("D?x", 2),        # padding bits set
    ("Bw!", 2),        # byte below the printable range
    ("Bwx", 2),        # trailing garbage
    ("D?", 2),         # truncated
    ("", 0),
])
def test_graph6_strict_errors(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_graph6_corpus_reports_line():
    with pytest.raises(Graph6Error, match="line 2"):
        read_graph6_lines("Bw\nD?x\n")


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=70))
def test_graph6_round_trip(g):
    text = serialize_graph6(g)
    assert parse_graph6(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_large_n_encoding():
    g = Graph(300, [(0, 299)])
    assert parse_graph6(serialize_graph6(g)) == g


def test_edge_list_round_trip_and_errors():
    g = cycle(5)
    assert parse_edge_list(serialize_edge_list(g)) == g
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 1\n0 3\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n1 0\n")


def test_degree_profile():
    assert degree_profile(from_nx(nx.star_graph(3)))[:2] == (1, 3)
    with pytest.raises(GraphError):
        degree_profile(Graph(0))


def test_two_coloring_odd_cycle_certificate():
    res = two_coloring(cycle(7))
    assert isinstance(res, OddCycle)
    assert len(res.vertices) % 2 == 1 and res.check(cycle(7))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_two_coloring_matches_networkx(g):
    res = two_coloring(g)
    assert isinstance(res, Bipartition) == nx.is_bipartite(to_nx(g))
    if isinstance(res, Bipartition):
        assert res.contains(g)
    else:
        assert res.check(g)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_block_cut_tree_matches_networkx(g):
    h = to_nx(g)
    t = block_cut_tree(g)
    mine = sorted(tuple(b.vertices) for b in t.blocks)
    theirs = sorted(tuple(sorted(c)) for c in nx.biconnected_components(h))
    assert mine == theirs
    assert set(t.cut_vertices) == set(nx.articulation_points(h))
    assert sorted(bridges(g)) == sorted(tuple(sorted(e)) for e in nx.bridges(h))
    assert connected_components(g) == sorted(sorted(c) for c in nx.connected_components(h))


def test_two_connected():
    assert is_two_connected(cycle(4))
    assert not is_two_connected(from_nx(nx.path_graph(3)))
    assert not is_two_connected(disjoint_union(cycle(3), cycle(3)))


def test_induced_subgraph_maps():
    g = cycle(6)
    sub, old_to_new, new_to_old = induced_subgraph(g, [1, 2, 3])
    assert sub.edges() == [(0, 1), (1, 2)]
    assert new_to_old == [1, 2, 3] and old_to_new[3] == 2
