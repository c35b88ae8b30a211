import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degspread import (ClosePair, DegreeSequence, Graph, SpreadParams,
                       close_pairs, comb2, construct_extremal,
                       degree_sequence_of, f0, find_close_clique, h_k_graph,
                       h_k_sequence)
from oracles import brute_close_pairs, brute_h, uniform_random_graph


def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@st.composite
def graphs(draw, max_n=16):
    n = draw(st.integers(1, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    rows = [0] * n
    slot = 0
    for u in range(n):
        for v in range(u + 1, n):
            if bits >> slot & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            slot += 1
    return Graph(n, rows)


class TestGraph:
    def test_rejects_loops(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(2, [0b01, 0b10])

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, [0b10, 0b00])

    def test_rejects_out_of_range_bits(self):
        with pytest.raises(ValueError):
            Graph(2, [0b100, 0])

    def test_rejects_empty_and_oversized(self):
        with pytest.raises(ValueError):
            Graph(0, [])
        with pytest.raises(ValueError):
            Graph.empty(513)
        assert Graph.empty(512).n == 512

    def test_cap_override(self):
        g = Graph(600, [0] * 600, max_vertices=1024)
        assert g.n == 600

    def test_basic_accessors(self):
        g = path3()
        assert g.degrees() == (1, 2, 1)
        assert g.num_edges() == 2
        assert g.has_edge(0, 1) and not g.has_edge(0, 2)
        assert sorted(g.edges()) == [(0, 1), (1, 2)]
        assert list(g.neighbors(1)) == [0, 2]

    def test_relabel(self):
        g = path3().relabel([2, 0, 1])
        assert sorted(g.edges()) == [(0, 1), (0, 2)]

    def test_immutable(self):
        g = path3()
        with pytest.raises(AttributeError):
            g.n = 5


class TestDegreeSequence:
    def test_canonical_ordering(self):
        assert DegreeSequence([1, 2, 1]).degs == (2, 1, 1)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            DegreeSequence([3, 0, 0])
        with pytest.raises(ValueError):
            DegreeSequence([-1, 0])
        with pytest.raises(ValueError):
            DegreeSequence([])

    def test_value_semantics(self):
        assert DegreeSequence([2, 1, 1]) == DegreeSequence([1, 1, 2])
        assert len({DegreeSequence([2, 1, 1]), DegreeSequence([1, 2, 1])}) == 1


class TestSpreadParams:
    def test_examples(self):
        p = SpreadParams.from_nk(12, 3)
        assert (p.i, p.t) == (3, 3)
        p = SpreadParams.from_nk(5, 2)
        assert (p.i, p.t) == (2, 1)

    def test_rejects_bad_threshold(self):
        with pytest.raises(ValueError):
            SpreadParams.from_nk(5, 5)
        with pytest.raises(ValueError):
            SpreadParams.from_nk(5, 0)

    @given(st.integers(2, 400), st.data())
    def test_split_identity(self, n, data):
        k = data.draw(st.integers(1, n - 1))
        p = SpreadParams.from_nk(n, k)
        assert p.n == p.k * p.i + p.t
        assert 1 <= p.t <= p.k
        assert p.i >= 1


class TestHkGraph:
    def test_empty_graph_all_pairs_close(self):
        assert h_k_graph(Graph.empty(4), 2) == 6

    def test_complete_graph_all_equal(self):
        assert h_k_graph(Graph.complete(5), 1) == 10

    def test_extremal_5_2(self):
        g = construct_extremal(5, 2)
        assert h_k_graph(g, 2) == 4 == f0(5, 2)

    def test_rejects_bad_threshold(self):
        with pytest.raises(ValueError):
            h_k_graph(Graph.empty(3), 0)


class TestHkSequence:
    def test_all_zero(self):
        assert h_k_sequence([0, 0, 0, 0], 2) == 6

    def test_extremal_multiset(self):
        assert h_k_sequence([4, 4, 2, 2, 2], 2) == 4

    def test_single_equal_pair(self):
        assert h_k_sequence([3, 2, 2, 1, 0], 1) == 1

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError, match="nonincreasing"):
            h_k_sequence([1, 2], 1)

    def test_accepts_degree_sequence_type(self):
        assert h_k_sequence(DegreeSequence([2, 2, 2]), 1) == 3


class TestClosePairs:
    def test_path(self):
        got = close_pairs(path3(), 1)
        assert got == [ClosePair(0, 2, 0)]

    def test_empty_graph(self):
        assert len(close_pairs(Graph.empty(3), 1)) == 3

    def test_k4_minus_edge(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert len(close_pairs(g, 2)) == 6

    def test_sorted_lexicographically(self):
        g = Graph.empty(5)
        got = close_pairs(g, 3)
        assert [(p.u, p.v) for p in got] == sorted((p.u, p.v) for p in got)

    @given(graphs(max_n=12), st.integers(1, 12))
    def test_matches_brute_force(self, g, k):
        assert [(p.u, p.v, p.gap) for p in close_pairs(g, k)] == brute_close_pairs(g, k)


class TestFindCloseClique:
    def test_complete_graph(self):
        got = find_close_clique(Graph.complete(5), 2)
        assert len(got) == 3

    def test_two_layer_construction(self):
        g = construct_extremal(7, 3)
        got = find_close_clique(g, 3)
        assert len(got) == 4
        assert all(g.degree(v) == 3 for v in got)

    def test_star(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        got = find_close_clique(g, 2)
        assert len(got) == 3
        assert all(g.degree(v) == 1 for v in got)

    def test_rejects_small_graphs(self):
        with pytest.raises(ValueError):
            find_close_clique(Graph.empty(3), 3)

    @settings(max_examples=300)
    @given(graphs(max_n=16), st.data())
    def test_property_window_exists(self, g, data):
        if g.n < 2:
            return
        k = data.draw(st.integers(1, g.n - 1))
        got = find_close_clique(g, k)
        assert len(got) == k + 1 == len(set(got))
        degs = [g.degree(v) for v in got]
        assert max(degs) - min(degs) < k


class TestInvariants:
    @settings(max_examples=400)
    @given(graphs(max_n=16), st.integers(1, 16))
    def test_graph_equals_sequence_route(self, g, k):
        assert h_k_graph(g, k) == h_k_sequence(degree_sequence_of(g), k) == brute_h(g.degrees(), k)

    @given(graphs(max_n=12), st.data())
    def test_monotone_in_k(self, g, data):
        k1 = data.draw(st.integers(1, 12))
        k2 = data.draw(st.integers(k1, 13))
        assert h_k_graph(g, k1) <= h_k_graph(g, k2)

    @given(graphs(max_n=12))
    def test_k_of_n_counts_every_pair(self, g):
        assert h_k_graph(g, g.n) == comb2(g.n)

    @given(graphs(max_n=10), st.integers(1, 10), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, g, k, pyrng):
        perm = list(range(g.n))
        pyrng.shuffle(perm)
        assert h_k_graph(g.relabel(perm), k) == h_k_graph(g, k)

    def test_bulk_random_agreement(self):
        rng = random.Random(20240811)
        for _ in range(10_000):
            n = rng.randint(1, 64)
            g = uniform_random_graph(rng, n)
            k = rng.randint(1, max(1, n - 1)) if n > 1 else 1
            assert h_k_graph(g, k) == h_k_sequence(degree_sequence_of(g), k)


class TestDegreeSequenceOf:
    def test_triangle(self):
        assert degree_sequence_of(Graph.complete(3)).degs == (2, 2, 2)

    def test_path(self):
        assert degree_sequence_of(path3()).degs == (2, 1, 1)

    def test_extremal_5_2(self):
        assert degree_sequence_of(construct_extremal(5, 2)).degs == (4, 4, 2, 2, 2)
