from __future__ import annotations

import pytest
from hypothesis import given

from twindom.generators import complete, cycle, enumerate_small_graphs, fixture, path, star
from twindom.graphs import (
    Graph,
    GraphParseError,
    basic_stats,
    closed_neighborhood,
    closed_neighborhood_of_set,
    open_neighborhood,
    parse_graph,
    serialize_graph,
)

from conftest import small_graphs


class TestNeighborhoods:
    def test_fig1_open_neighborhood_of_v5(self):
        g = fixture("fig1")
        assert open_neighborhood(g, 4) == {0, 1, 3, 6}  # v5 -> {v1,v2,v4,v7}

    def test_k2(self):
        g = complete(2)
        assert open_neighborhood(g, 0) == {1}

    def test_c6(self):
        assert open_neighborhood(cycle(6), 0) == {1, 5}

    def test_fig1_closed_neighborhood_of_v1(self):
        g = fixture("fig1")
        assert closed_neighborhood(g, 0) == {0, 1, 2, 3, 4, 5}

    def test_isolated_closed(self):
        assert closed_neighborhood(Graph(3), 1) == {1}

    def test_k4_closed(self):
        assert closed_neighborhood(complete(4), 2) == {0, 1, 2, 3}

    def test_set_neighborhood_antipodal_pair_covers_c6(self):
        assert closed_neighborhood_of_set(cycle(6), {0, 3}) == set(range(6))

    def test_set_neighborhood_empty(self):
        assert closed_neighborhood_of_set(cycle(6), set()) == set()

    def test_set_neighborhood_fig1_v1_misses_far_pair(self):
        g = fixture("fig1")
        assert closed_neighborhood_of_set(g, {0}) == {0, 1, 2, 3, 4, 5}

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            open_neighborhood(cycle(3), 3)
        with pytest.raises(ValueError):
            closed_neighborhood(cycle(3), -1)

    @given(small_graphs())
    def test_closed_is_open_plus_self(self, g):
        for v in range(g.n):
            assert closed_neighborhood(g, v) == open_neighborhood(g, v) | {v}
            assert len(closed_neighborhood(g, v)) == g.degree(v) + 1

    @given(small_graphs())
    def test_set_neighborhood_monotone(self, g):
        full = set(range(g.n))
        sub = {v for v in full if v % 2 == 0}
        assert closed_neighborhood_of_set(g, sub) <= closed_neighborhood_of_set(g, full)


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 0)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_duplicate_edges_collapse(self):
        g = Graph(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_symmetry_everywhere(self):
        for g in (fixture("fig1"), fixture("g2"), star(3), Graph(4, [(2, 0), (3, 1)])):
            for u in range(g.n):
                for v in range(g.n):
                    assert g.has_edge(u, v) == g.has_edge(v, u)
                assert not g.has_edge(u, u)

    def test_equality_ignores_labels(self):
        a = Graph(2, [(0, 1)], labels=("x", "y"))
        b = Graph(2, [(0, 1)])
        assert a == b

    def test_edges_sorted(self):
        g = Graph(4, [(3, 2), (1, 0), (0, 2)])
        assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]


class TestGraph6:
    def test_k2_is_known_encoding(self):
        # hand-computed: n=2 -> 'A'; single upper-triangle bit padded -> '_'
        assert serialize_graph(complete(2), "graph6") == b"A_"
        assert parse_graph(b"A_", "graph6") == complete(2)

    def test_single_vertex(self):
        data = serialize_graph(Graph(1), "graph6")
        assert parse_graph(data, "graph6") == Graph(1)

    def test_round_trip_all_small(self):
        for n in range(1, 6):
            for g in enumerate_small_graphs(n):
                assert parse_graph(serialize_graph(g, "graph6"), "graph6") == g

    def test_round_trip_fixtures(self):
        for name in ("fig1", "h1", "h2", "g1", "g2", "c6", "p12", "star5", "k7"):
            g = fixture(name)
            assert parse_graph(serialize_graph(g, "graph6"), "graph6") == g

    def test_header_prefix_accepted(self):
        assert parse_graph(b">>graph6<<A_", "graph6") == complete(2)

    def test_large_order_header(self):
        g = Graph(70, [(0, 69)])
        assert parse_graph(serialize_graph(g, "graph6"), "graph6") == g

    def test_malformed_body_length(self):
        with pytest.raises(GraphParseError):
            parse_graph(b"E", "graph6")  # order 6 but no body

    def test_invalid_byte(self):
        with pytest.raises(GraphParseError):
            parse_graph(b"A\x07", "graph6")

    @given(small_graphs(max_n=12))
    def test_round_trip_property(self, g):
        assert parse_graph(serialize_graph(g, "graph6"), "graph6") == g


class TestEdgelist:
    def test_simple_path(self):
        assert parse_graph(b"0 1\n1 2", "edgelist") == path(3)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphParseError):
            parse_graph(b"0 0", "edgelist")

    def test_header_fixes_order(self):
        g = parse_graph(b"n 4\n0 1", "edgelist")
        assert g.n == 4
        assert g.edge_count == 1

    def test_id_beyond_header_rejected(self):
        with pytest.raises(GraphParseError) as err:
            parse_graph(b"n 2\n0 5", "edgelist")
        assert "line 2" in str(err.value)

    def test_labels_first_appearance_order(self):
        g = parse_graph(b"v1 v2\nv2 v3", "edgelist")
        assert g.n == 3
        assert g.labels == ("v1", "v2", "v3")
        assert g == path(3)

    def test_duplicates_collapse(self):
        g = parse_graph(b"0 1\n1 0", "edgelist")
        assert g.edge_count == 1

    def test_round_trip(self):
        for name in ("fig1", "g1", "g2"):
            g = fixture(name)
            assert parse_graph(serialize_graph(g, "edgelist"), "edgelist") == g

    @given(small_graphs(max_n=12))
    def test_round_trip_property(self, g):
        assert parse_graph(serialize_graph(g, "edgelist"), "edgelist") == g


class TestBasicStats:
    @pytest.mark.parametrize(
        "g,expect",
        [
            (cycle(6), (2, 2, 6, 1, 0)),
            (Graph(4, [(0, 1), (2, 3)]), (1, 1, 2, 2, 0)),
            (Graph(3), (0, 0, 0, 3, 3)),
        ],
    )
    def test_examples(self, g, expect):
        assert tuple(basic_stats(g)) == expect

    def test_fig1(self):
        assert tuple(basic_stats(fixture("fig1"))) == (2, 5, 15, 1, 0)
