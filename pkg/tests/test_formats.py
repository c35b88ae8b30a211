import random

import networkx as nx
import pytest

from degspread import (Graph, Graph6Error, format_edge_list, graph6_decode,
                       graph6_encode, parse_edge_list, to_dot)
from oracles import random_graph


def nx_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


class TestGraph6:
    def test_known_strings(self):
        assert graph6_encode(Graph.complete(2)) == "A_"
        assert graph6_encode(Graph.complete(3)) == "Bw"
        assert graph6_encode(Graph.empty(1)) == "@"
        assert graph6_encode(Graph.empty(5)) == "D??"

    def test_decode_known(self):
        assert graph6_decode("Bw") == Graph.complete(3)
        assert graph6_decode("A_") == Graph.complete(2)

    def test_round_trip_random(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(1, 50)
            g = random_graph(rng, n, rng.random())
            assert graph6_decode(graph6_encode(g)) == g

    def test_matches_networkx(self):
        rng = random.Random(5)
        for _ in range(150):
            n = rng.randint(1, 80)
            g = random_graph(rng, n, rng.random())
            assert graph6_encode(g) == nx_graph6(g)

    def test_long_size_prefix(self):
        g = Graph.empty(63)
        s = graph6_encode(g)
        assert s.startswith("~")
        assert graph6_decode(s) == g
        assert s == nx_graph6(g)

    def test_rejects_truncated(self):
        with pytest.raises(Graph6Error):
            graph6_decode("D?")

    def test_rejects_trailing_garbage(self):
        with pytest.raises(Graph6Error):
            graph6_decode("Bw?")

    def test_rejects_bad_characters(self):
        with pytest.raises(Graph6Error):
            graph6_decode("B\x20")

    def test_rejects_nonzero_padding(self):
        # K2 payload uses 1 of 6 bits; force a padding bit on
        bad = "A" + chr(63 + 0b110000)
        with pytest.raises(Graph6Error):
            graph6_decode(bad)

    def test_rejects_empty(self):
        with pytest.raises(Graph6Error):
            graph6_decode("")


class TestEdgeList:
    def test_round_trip(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        text = format_edge_list(g)
        assert text == "0 1\n2 3"
        assert parse_edge_list(text) == g

    def test_isolated_vertices_need_n(self):
        g = Graph.from_edges(5, [(0, 1)])
        assert parse_edge_list(format_edge_list(g), n=5) == g

    def test_comments_and_blanks(self):
        assert parse_edge_list("# header\n\n0 1\n") == Graph.from_edges(2, [(0, 1)])

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            parse_edge_list("0 1 2")
        with pytest.raises(ValueError):
            parse_edge_list("")


class TestDot:
    def test_edges_and_isolated(self):
        g = Graph.from_edges(3, [(0, 1)])
        dot = to_dot(g)
        assert dot.startswith("graph G {")
        assert "0 -- 1;" in dot
        assert "  2;" in dot
        assert dot.endswith("}")
