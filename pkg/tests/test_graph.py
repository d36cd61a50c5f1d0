import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rbkernel.graph import (
    BLUE,
    RED,
    ColorError,
    Instance,
    RBGraph,
    SameVertexError,
    UnknownVertexError,
    sanitize,
)

from helpers import oracle_pair_private, oracle_private


def star(n_reds=3):
    g = RBGraph.from_parts([1], range(2, 2 + n_reds))
    for r in range(2, 2 + n_reds):
        g.add_edge(1, r)
    return g


@st.composite
def small_graphs(draw):
    nb = draw(st.integers(0, 4))
    nr = draw(st.integers(0, 4))
    g = RBGraph.from_parts(range(1, nb + 1), range(nb + 1, nb + nr + 1))
    for b in range(1, nb + 1):
        for r in range(nb + 1, nb + nr + 1):
            if draw(st.booleans()):
                g.add_edge(b, r)
    return g


class TestNeighborhood:
    def test_single_edge(self):
        g = RBGraph.from_parts([1], [2], [(1, 2)])
        assert g.neighborhood(1) == {2}
        assert g.neighborhood(2) == {1}

    def test_isolated(self):
        g = RBGraph.from_parts([1], [])
        assert g.neighborhood(1) == set()

    def test_star(self):
        g = star()
        assert g.neighborhood(1) == {2, 3, 4}

    def test_unknown_vertex(self):
        g = star()
        with pytest.raises(UnknownVertexError):
            g.neighborhood(99)

    def test_returns_fresh_set(self):
        g = star()
        g.neighborhood(1).clear()
        assert g.neighborhood(1) == {2, 3, 4}

    @given(small_graphs())
    @settings(max_examples=60)
    def test_symmetry(self, g):
        for u in g.vertices():
            for v in g.neighborhood(u):
                assert u in g.neighborhood(v)


class TestPairNeighborhood:
    def test_union(self):
        g = RBGraph.from_parts([1, 2], [3, 4, 5], [(1, 3), (1, 4), (2, 4), (2, 5)])
        assert g.pair_neighborhood(1, 2) == {3, 4, 5}

    def test_empty_side(self):
        g = RBGraph.from_parts([1, 2], [3], [(2, 3)])
        assert g.pair_neighborhood(1, 2) == {3}

    def test_idempotent_union(self):
        g = RBGraph.from_parts([1, 2], [3], [(1, 3), (2, 3)])
        assert g.pair_neighborhood(1, 2) == {3}

    def test_same_vertex_rejected(self):
        g = star()
        with pytest.raises(SameVertexError):
            g.pair_neighborhood(1, 1)

    def test_red_rejected(self):
        g = star()
        with pytest.raises(ColorError):
            g.pair_neighborhood(1, 2)


class TestPrivateNeighborhood:
    def test_lone_component(self):
        g = RBGraph.from_parts([1], [2], [(1, 2)])
        assert g.private_neighborhood(1) == {2}

    def test_outside_reach_empties_it(self):
        # b-r, b'-r, b'-r': r's second dominator reaches r' outside N(b).
        g = RBGraph.from_parts([1, 2], [3, 4], [(1, 3), (2, 3), (2, 4)])
        assert oracle_private(g, 1) == set()
        assert g.private_neighborhood(1) == set()

    def test_isolated_blue(self):
        g = RBGraph.from_parts([1], [2])
        assert g.private_neighborhood(1) == set()

    def test_red_rejected(self):
        g = star()
        with pytest.raises(ColorError):
            g.private_neighborhood(2)


class TestPairPrivateNeighborhood:
    def test_shared_degree_two_red(self):
        g = RBGraph.from_parts([1, 2], [3], [(1, 3), (2, 3)])
        assert g.pair_private_neighborhood(1, 2) == {3}

    def test_third_blue_with_outside_neighbor(self):
        # v-r1, w-r2, both reds also held by b3 which reaches an outside red.
        g = RBGraph.from_parts(
            [1, 2, 3], [4, 5, 6],
            [(1, 4), (2, 5), (3, 4), (3, 5), (3, 6)])
        assert oracle_pair_private(g, 1, 2) == set()
        assert g.pair_private_neighborhood(1, 2) == set()

    def test_no_reds(self):
        g = RBGraph.from_parts([1, 2], [])
        assert g.pair_private_neighborhood(1, 2) == set()

    @given(small_graphs())
    @settings(max_examples=60)
    def test_matches_definitional_oracle(self, g):
        for v, w in itertools.combinations(sorted(g.blue), 2):
            assert g.pair_private_neighborhood(v, w) == oracle_pair_private(g, v, w)
            assert g.pair_private_neighborhood(v, w) == g.pair_private_neighborhood(w, v)

    @given(small_graphs())
    @settings(max_examples=60)
    def test_contained_in_pair_neighborhood(self, g):
        for v, w in itertools.combinations(sorted(g.blue), 2):
            assert g.pair_private_neighborhood(v, w) <= g.pair_neighborhood(v, w)

    def test_single_private_union_is_monotone_small(self, classes6):
        # P(v) | P(w) <= P(v, w) on every sanitized class with <= 6 vertices.
        for g in classes6:
            for v, w in itertools.combinations(sorted(g.blue), 2):
                assert g.private_neighborhood(v) | g.private_neighborhood(w) \
                    <= g.pair_private_neighborhood(v, w)


class TestSanitize:
    def test_same_color_edge_removed(self):
        g = RBGraph.from_parts([1, 2], [3], [(1, 3), (2, 3)])
        g.adj[1].add(2)
        g.adj[2].add(1)
        rep = sanitize(g)
        assert rep.removed_edges == [(1, 2)]
        assert 2 not in g.adj[1]
        assert not rep.infeasible

    def test_red_with_only_red_neighbors_is_infeasible(self):
        g = RBGraph.from_parts([], [1, 2])
        g.adj[1].add(2)
        g.adj[2].add(1)
        rep = sanitize(g)
        assert rep.infeasible
        assert rep.infeasible_reds == [1, 2]

    def test_clean_graph_unchanged(self):
        g = star()
        before = g.copy()
        rep = sanitize(g)
        assert not rep.changed and not rep.infeasible
        assert g == before

    def test_isolated_blue_removed(self):
        g = RBGraph.from_parts([1, 2], [3], [(2, 3)])
        rep = sanitize(g)
        assert rep.removed_blues == [1]
        assert not g.has_vertex(1)

    @given(small_graphs())
    @settings(max_examples=60)
    def test_idempotent(self, g):
        sanitize(g)
        snapshot = g.copy()
        rep = sanitize(g)
        assert not rep.changed
        assert g == snapshot


class TestMutation:
    def test_remove_last_vertex(self):
        g = RBGraph.from_parts([1], [])
        g.remove_vertex(1)
        assert g.n_vertices == 0

    def test_add_red_vertex_contract(self):
        g = RBGraph.from_parts([1, 2], [])
        new = g.add_red_vertex({1, 2})
        assert g.neighborhood(new) == {1, 2}
        assert new in g.red

    def test_add_red_vertex_rejects_red_neighbor(self):
        g = RBGraph.from_parts([1], [2], [(1, 2)])
        with pytest.raises(ColorError):
            g.add_red_vertex({2})

    def test_remove_leaves_isolated_red(self):
        g = RBGraph.from_parts([1], [2], [(1, 2)])
        g.remove_vertex(1)
        assert g.red == {2}
        assert g.neighborhood(2) == set()

    def test_ids_never_reused(self):
        g = RBGraph.from_parts([1, 2], [3])
        g.remove_vertex(3)
        new = g.add_red_vertex({1})
        assert new == 4
        another = g.add_red_vertex({2})
        assert another == 5

    def test_no_self_loops(self):
        g = star()
        with pytest.raises(SameVertexError):
            g.add_edge(1, 1)

    def test_remove_unknown(self):
        g = star()
        with pytest.raises(UnknownVertexError):
            g.remove_vertex(42)


class TestValueSemantics:
    def test_copy_is_deep(self):
        g = star()
        h = g.copy()
        h.remove_vertex(2)
        assert g.neighborhood(1) == {2, 3, 4}
        assert g != h

    def test_instance_equality(self):
        a = Instance(star(), 2)
        b = Instance(star(), 2)
        assert a == b
        assert a != Instance(star(), 1)

    def test_counts(self):
        g = star()
        assert g.n_vertices == 4
        assert g.n_edges == 3
        assert g.edges() == [(1, 2), (1, 3), (1, 4)]
