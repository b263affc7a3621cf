import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

import cfcgraph as cfc
from cfcgraph.errors import NotConnectedError, TrivialGraphError
from cfcgraph.families import gen_H, gen_R, gen_S, gen_random_connected

from conftest import bridge_oracle


def triangle():
    return cfc.build_graph(3, [(0, 1), (1, 2), (0, 2)])


def test_find_cut_edges_examples():
    assert cfc.find_cut_edges(triangle()) == frozenset()
    p4 = cfc.build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert cfc.find_cut_edges(p4) == frozenset({(0, 1), (1, 2), (2, 3)})
    # the two path edges of the k=3, t=3 clique chain
    assert cfc.find_cut_edges(gen_H(3, 3)) == frozenset({(0, 1), (1, 2)})


def test_find_cut_edges_requires_connected():
    g = cfc.build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(NotConnectedError):
        cfc.find_cut_edges(g)


def test_count_cut_edges():
    k5 = cfc.build_graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert cfc.count_cut_edges(k5) == 0
    from cfcgraph.families import gen_D

    assert cfc.count_cut_edges(gen_D(5)) == 4
    assert cfc.count_cut_edges(gen_R(3)) == 2


def test_block_decomposition_triangle():
    d = cfc.block_decomposition(triangle())
    assert len(d.blocks) == 1
    assert d.cut_vertices == frozenset()
    assert d.cut_edges == frozenset()


def test_block_decomposition_two_triangles_sharing_a_vertex():
    g = cfc.build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    d = cfc.block_decomposition(g)
    assert len(d.blocks) == 2
    assert d.cut_vertices == frozenset({2})


def test_block_decomposition_r3_witness():
    # C4 - bridge - middle vertex - bridge - K3: two nontrivial blocks,
    # two trivial ones, cut vertices at 3, 4, 5.
    d = cfc.block_decomposition(gen_R(3))
    assert sum(1 for b in d.blocks if not b.is_trivial) == 2
    assert sum(1 for b in d.blocks if b.is_trivial) == 2
    assert d.cut_vertices == frozenset({3, 4, 5})
    assert d.cut_edges == frozenset({(3, 4), (4, 5)})


def test_block_decomposition_rejects_trivial_graph():
    with pytest.raises(TrivialGraphError):
        cfc.block_decomposition(cfc.build_graph(1, []))


def test_cut_edge_profile_examples():
    c4 = cfc.build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    profile = cfc.cut_edge_profile(c4)
    assert profile.component_count == 0
    assert profile.is_linear_forest
    assert profile.max_component_edges == 0

    s = cfc.cut_edge_profile(gen_S(3))
    assert s.component_orders == (3, 3)
    assert [c.path_sequence for c in s.components] == [(0, 1, 2), (3, 4, 5)]

    star = cfc.build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not cfc.cut_edge_profile(star).is_linear_forest


def test_select_block_matching_single_block():
    c5 = cfc.build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    matching = cfc.select_block_matching(cfc.block_decomposition(c5))
    assert len(matching.chosen_edges) == 1
    assert matching.chosen_edges[0] in c5.edge_set


def _assert_matching(edges):
    used = set()
    for u, v in edges:
        assert u not in used and v not in used
        used.update((u, v))


@pytest.mark.parametrize("g,expected", [(gen_H(3, 3), 3), (gen_R(4), 4)])
def test_select_block_matching_families(g, expected):
    d = cfc.block_decomposition(g)
    matching = cfc.select_block_matching(d)
    assert len(matching.chosen_edges) == expected
    _assert_matching(matching.chosen_edges)
    nontrivial = [b for b in d.blocks if not b.is_trivial]
    for e in matching.chosen_edges:
        assert any(e in b.edges for b in nontrivial)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=60, deadline=None)
def test_bridges_match_remove_and_test_oracle(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(2, 8)
    g = gen_random_connected(n, rng.uniform(0.3, 0.9), seed=seed)
    assert cfc.find_cut_edges(g) == bridge_oracle(g)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=60, deadline=None)
def test_blocks_and_cut_vertices_match_networkx(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(3, 9)
    g = gen_random_connected(n, rng.uniform(0.3, 0.9), seed=seed)
    d = cfc.block_decomposition(g)
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.vertex_count))
    expected_blocks = {
        frozenset(cfc.canonical_edge(a, b) for a, b in c)
        for c in nx.biconnected_component_edges(h)
    }
    assert {frozenset(b.edges) for b in d.blocks} == expected_blocks
    assert d.cut_vertices == frozenset(nx.articulation_points(h))


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=60, deadline=None)
def test_decomposition_invariants(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(2, 9)
    g = gen_random_connected(n, rng.uniform(0.25, 0.9), seed=seed)
    d = cfc.block_decomposition(g)
    # every edge in exactly one block
    seen = [e for b in d.blocks for e in b.edges]
    assert sorted(seen) == list(g.edges)
    assert len(seen) == len(set(seen))
    # trivial blocks are exactly the cut edges
    assert sum(1 for b in d.blocks if b.is_trivial) == len(d.cut_edges)
    assert d.cut_edges == cfc.find_cut_edges(g)
    # matching property of the selection
    _assert_matching(cfc.select_block_matching(d).chosen_edges)
    # linear forest iff max degree <= 2 within the bridge subgraph
    profile = cfc.cut_edge_profile(g)
    degree_in_c = {}
    for u, v in profile.cut_edges:
        degree_in_c[u] = degree_in_c.get(u, 0) + 1
        degree_in_c[v] = degree_in_c.get(v, 0) + 1
    assert profile.is_linear_forest == all(x <= 2 for x in degree_in_c.values())
    assert list(profile.component_orders) == sorted(profile.component_orders)
