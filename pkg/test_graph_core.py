"""Tests for graph types, named families, embedding search and text formats."""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from conftest import small_graphs
from graphs import (
    Embedding,
    EmbeddingMode,
    Graph,
    WeightedGraph,
    all_graphs,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    find_embedding,
    gen_named,
    induced_subgraph,
    is_isomorphic,
    iter_embeddings,
    line_graph,
    parse_graph,
    parse_weights,
    path,
    random_graph,
    serialize_graph,
    spider,
    tripod_forest,
    x_graph,
)
from utils.errors import GraphFormatError, PreconditionError


class TestGraph:
    def test_edges_are_normalized(self):
        g = Graph.from_edges(3, [(2, 0), (1, 2)])
        assert g.sorted_edges() == [(0, 2), (1, 2)]
        assert g.has_edge(0, 2) and g.has_edge(2, 0)

    def test_self_loop_rejected(self):
        with pytest.raises(PreconditionError):
            Graph.from_edges(2, [(1, 1)])

    def test_name_does_not_affect_equality(self):
        assert Graph.from_edges(2, [(0, 1)], "a") == Graph.from_edges(2, [(0, 1)], "b")

    def test_negative_weight_rejected(self):
        with pytest.raises(PreconditionError):
            WeightedGraph.of(path(2), [1, -1])


class TestFamilies:
    def test_spider_111_is_claw(self):
        g = gen_named("spider", [1, 1, 1])
        assert (g.n, g.m) == (4, 3)
        assert is_isomorphic(g, complete_bipartite(1, 3)) is not None

    def test_h0_is_k14(self):
        assert is_isomorphic(gen_named("Hk", [0]), complete_bipartite(1, 4)) is not None

    def test_xp_shape(self):
        g = gen_named("Xp", [3])
        assert g.n == 7
        apex = 6
        assert g.degree(apex) == 2
        a, b = sorted(g.adj[apex])
        assert not g.has_edge(a, b)

    def test_tripod_forest_order(self):
        assert tripod_forest(2).n == 14

    def test_unknown_family(self):
        with pytest.raises(PreconditionError):
            gen_named("nope", [])

    def test_wrong_arity(self):
        with pytest.raises(PreconditionError):
            gen_named("K", [1, 2])

    def test_atlas_counts(self):
        counts = {}
        for g in all_graphs(6):
            counts[g.n] = counts.get(g.n, 0) + 1
        assert counts == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}

    def test_random_graph_is_seeded(self):
        g1 = random_graph(8, 0.5, np.random.default_rng(3))
        g2 = random_graph(8, 0.5, np.random.default_rng(3))
        assert g1 == g2


class TestOperations:
    def test_line_graph_of_path(self):
        assert is_isomorphic(line_graph(path(4)), path(3)) is not None

    def test_line_graph_of_claw(self):
        assert is_isomorphic(line_graph(complete_bipartite(1, 3)), complete(3)) is not None

    def test_disjoint_union(self):
        g = disjoint_union([path(1), path(3)])
        assert (g.n, g.m) == (4, 2)
        assert disjoint_union([]).n == 0

    def test_induced_subgraph(self):
        assert is_isomorphic(induced_subgraph(cycle(4), [0, 1, 2]), path(3)) is not None
        assert induced_subgraph(cycle(5), range(5)) == cycle(5)
        k33 = complete_bipartite(3, 3)
        assert is_isomorphic(induced_subgraph(k33, [0, 1, 3, 4]), cycle(4)) is not None


class TestIsomorphism:
    def test_relabeled_cycle(self):
        g = cycle(5)
        h = g.relabel([2, 4, 1, 0, 3])
        phi = is_isomorphic(g, h)
        assert phi is not None
        assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)

    def test_k33_not_c6(self):
        assert is_isomorphic(complete_bipartite(3, 3), cycle(6)) is None

    @given(small_graphs(max_n=7), st.randoms(use_true_random=False))
    @hyp_settings(deadline=None, max_examples=60)
    def test_permutation_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert is_isomorphic(g, g.relabel(perm)) is not None


class TestEmbeddings:
    def test_claw_into_k4(self):
        claw = complete_bipartite(1, 3)
        assert find_embedding(claw, complete(4), EmbeddingMode.SUBGRAPH) is not None
        assert find_embedding(claw, complete(4), EmbeddingMode.INDUCED) is None

    def test_claw_induced_in_x5(self):
        e = find_embedding(spider(1, 1, 1), x_graph(5), EmbeddingMode.INDUCED)
        assert e is not None
        assert e.check(spider(1, 1, 1), x_graph(5))

    def test_induced_at_is_between_modes(self):
        pattern, host = path(3), complete(3)
        assert find_embedding(pattern, host, EmbeddingMode.INDUCED) is None
        # the only pattern non-edge is (0,2), which avoids vertex 1
        assert find_embedding(pattern, host, EmbeddingMode.INDUCED_AT, at=[1]) is not None
        assert find_embedding(pattern, host, EmbeddingMode.INDUCED_AT, at=[0]) is None

    def test_check_reports_nonedge(self):
        e = Embedding((0, 1, 2), EmbeddingMode.INDUCED)
        result = e.check(path(3), complete(3))
        assert not result
        assert "non-edge" in result.diagnostic

    @given(small_graphs(max_n=4), small_graphs(max_n=6))
    @hyp_settings(deadline=None, max_examples=60)
    def test_every_enumerated_embedding_checks(self, pattern, host):
        for emb in iter_embeddings(pattern, host, EmbeddingMode.INDUCED):
            assert Embedding(emb.mapping, EmbeddingMode.INDUCED).check(pattern, host)


class TestFormats:
    def test_parse_edge_list(self):
        g = parse_graph("4 2\n0 1\n2 3\n")
        assert g == Graph.from_edges(4, [(0, 1), (2, 3)])

    @pytest.mark.parametrize("text", [
        "3 1\n0 0\n",
        "3 2\n0 1\n",
        "2 1\n0 5\n",
        "3 2\n0 1\n1 0\n",
        "x y\n",
        "",
    ])
    def test_malformed_edge_lists(self, text):
        with pytest.raises(GraphFormatError):
            parse_graph(text)

    def test_graph6_round_trip(self):
        g = cycle(5)
        text = serialize_graph(g, "graph6")
        assert parse_graph(text) == g

    def test_weights(self):
        assert [str(w) for w in parse_weights("3\n1/2\n0.25\n", 3)] == ["3", "1/2", "1/4"]
        with pytest.raises(GraphFormatError):
            parse_weights("1\n-2\n", 2)
        with pytest.raises(GraphFormatError):
            parse_weights("1\n", 2)
