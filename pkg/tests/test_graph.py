import pytest
from hypothesis import given, strategies as st

import cfcgraph as cfc
from cfcgraph.errors import (
    EdgeListParseError,
    EmptyGraphError,
    InvalidVertexError,
    SelfLoopError,
)


def test_build_triangle():
    g = cfc.build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.edge_count == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_build_trivial_graph():
    g = cfc.build_graph(1, [])
    assert g.vertex_count == 1
    assert g.edge_count == 0


def test_build_collapses_duplicates():
    g = cfc.build_graph(4, [(0, 1), (1, 0), (1, 2)])
    assert g.edge_count == 2


def test_build_rejects_out_of_range():
    with pytest.raises(InvalidVertexError):
        cfc.build_graph(3, [(0, 3)])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        cfc.build_graph(3, [(1, 1)])


def test_is_connected():
    path = cfc.build_graph(5, [(i, i + 1) for i in range(4)])
    assert cfc.is_connected(path)
    two_triangles = cfc.build_graph(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert not cfc.is_connected(two_triangles)
    assert cfc.is_connected(cfc.build_graph(1, []))
    with pytest.raises(EmptyGraphError):
        cfc.is_connected(cfc.build_graph(0, []))


def test_is_complete():
    k4 = cfc.build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert cfc.is_complete(k4)
    c4 = cfc.build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not cfc.is_complete(c4)
    assert cfc.is_complete(cfc.build_graph(1, []))


def test_degree_view():
    tri = cfc.build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert cfc.degree_view(tri).degrees == (2, 2, 2)
    assert cfc.degree_view(tri).min_degree == 2
    star = cfc.build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert cfc.degree_view(star).degrees == (3, 1, 1, 1)
    assert cfc.degree_view(star).min_degree == 1


def test_degree_view_h_family():
    from cfcgraph.families import gen_H

    # delta = (n - k) / k = (9 - 3) / 3 for k = 3, t = 3
    assert cfc.degree_view(gen_H(3, 3)).min_degree == 2


def test_min_nonadjacent_degree_sum():
    k4 = cfc.build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert cfc.min_nonadjacent_degree_sum(k4) is None
    p3 = cfc.build_graph(3, [(0, 1), (1, 2)])
    assert cfc.min_nonadjacent_degree_sum(p3) == 2


def test_min_nonadjacent_degree_sum_d_family():
    from cfcgraph.families import gen_D

    assert cfc.min_nonadjacent_degree_sum(gen_D(5)) >= 10


@st.composite
def edge_lists(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=20)) if pairs else []
    return n, edges


@given(edge_lists())
def test_degree_sum_is_twice_edge_count(ne):
    n, edges = ne
    g = cfc.build_graph(n, edges)
    assert sum(cfc.degree_view(g).degrees) == 2 * g.edge_count


@given(edge_lists(), st.randoms())
def test_build_graph_order_independent(ne, rnd):
    n, edges = ne
    shuffled = list(edges) + edges[:2]
    rnd.shuffle(shuffled)
    assert cfc.build_graph(n, edges) == cfc.build_graph(n, shuffled)


@given(edge_lists())
def test_complete_iff_no_nonadjacent_pair(ne):
    n, edges = ne
    g = cfc.build_graph(n, edges)
    assert cfc.is_complete(g) == (cfc.min_nonadjacent_degree_sum(g) is None)


def test_edge_list_round_trip():
    g = cfc.build_graph(4, [(0, 1), (1, 2), (2, 3)])
    text = cfc.format_edge_list(g, comments=["a comment"])
    assert cfc.parse_edge_list(text) == g


def test_parse_reports_line_numbers():
    with pytest.raises(EdgeListParseError) as exc:
        cfc.parse_edge_list("3 1\n0 x\n")
    assert exc.value.line_number == 2
    with pytest.raises(EdgeListParseError):
        cfc.parse_edge_list("# only a comment\n")


def test_parse_checks_edge_count():
    with pytest.raises(EdgeListParseError):
        cfc.parse_edge_list("3 2\n0 1\n")
