"""Tests for the explicit witness constructions."""

import numpy as np
import pytest

from constructions import (
    CliqueThreePathInstance,
    biclique_parts,
    biclique_size,
    build_biclique_path_instance,
    build_biclique_plus_vertex,
    build_clique_three_path_instance,
    build_peel_graph,
    clique_bound,
    linegraph_pattern,
    permute_biclique_path,
    permute_clique_three_path,
    random_permutation,
    tripod_threshold,
    witness_biclique_path,
    witness_biclique_plus_vertex,
    witness_clique_plus_vertex,
    witness_clique_three_paths,
    witness_linegraph_spider,
    witness_peel,
    witness_XY_to_tripods,
)
from graphs import (
    Graph,
    complete_bipartite,
    disjoint_union,
    is_isomorphic,
    line_graph,
    spider,
    tripod_forest,
    x_graph,
    y_graph,
)
from si_engine import evaluate_witness, verify_witness
from utils.errors import PreconditionError


def assert_witness_for(w, expected: Graph) -> None:
    assert verify_witness(w)
    assert is_isomorphic(evaluate_witness(w), expected) is not None


class TestConstants:
    def test_values_for_small_t(self):
        assert [biclique_size(t) for t in (1, 2, 3)] == [4, 14, 30]
        assert tripod_threshold(1) == 5
        assert clique_bound(1) == 6


class TestBicliquePath:
    def test_minimal_instance_t1(self):
        inst = build_biclique_path_instance(1)
        assert len(inst.A) == len(inst.B) == 4
        assert_witness_for(witness_biclique_path(inst), tripod_forest(1))

    def test_explicit_placements_without_search(self):
        inst = build_biclique_path_instance(1, path_length=3)
        assert_witness_for(witness_biclique_path(inst, search=False), tripod_forest(1))

    def test_seeded_random_instances(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            inst = build_biclique_path_instance(1, path_length=int(rng.integers(2, 5)), rng=rng)
            perm = random_permutation(inst.graph.n, rng)
            permuted = permute_biclique_path(inst, perm)
            assert_witness_for(witness_biclique_path(permuted), tripod_forest(1))

    @pytest.mark.slow
    def test_t2_instance(self):
        inst = build_biclique_path_instance(2)
        assert len(inst.A) == 14
        w = witness_biclique_path(inst, search=False)
        assert_witness_for(w, tripod_forest(2))
        assert evaluate_witness(w).n == 14

    def test_same_neighbourhoods_rejected(self):
        inst = build_biclique_path_instance(1, y_neighbours=[0])
        with pytest.raises(PreconditionError) as err:
            witness_biclique_path(inst)
        assert err.value.condition == 6
        assert "condition 6" in str(err.value)

    def test_short_path_rejected(self):
        with pytest.raises(PreconditionError):
            build_biclique_path_instance(1, path_length=1)


class TestPeel:
    def test_removes_two_edges(self):
        g, A, B, v = build_peel_graph(4, 2, 3)
        w = witness_peel(g, A, B, v, keep=[0])
        assert verify_witness(w)
        assert evaluate_witness(w).m == g.m - 2

    def test_keep_all_is_identity(self):
        g, A, B, v = build_peel_graph(4, 2, 3)
        w = witness_peel(g, A, B, v, keep=[0, 1, 2])
        assert w.k == 1
        assert w.claimed == g

    def test_clique_isolates_vertex(self):
        g, A, _, v = build_peel_graph(5, 0, 3, clique=True)
        w = witness_clique_plus_vertex(g, A, v, keep=[])
        assert verify_witness(w)
        assert w.claimed.degree(v) == 0

    def test_vertex_complete_to_a_rejected(self):
        g, A, B, v = build_peel_graph(4, 2, 4)
        with pytest.raises(PreconditionError) as err:
            witness_peel(g, A, B, v, keep=[])
        assert err.value.condition == 4


class TestXYGraphs:
    @pytest.mark.parametrize("h", [x_graph(5), y_graph(5)])
    def test_reduce_to_claw(self, h):
        assert_witness_for(witness_XY_to_tripods(h, 1), spider(1, 1, 1))

    def test_relabeled_x5(self):
        h = x_graph(5)
        perm = random_permutation(h.n, np.random.default_rng(1))
        assert_witness_for(witness_XY_to_tripods(h.relabel(perm), 1), spider(1, 1, 1))

    def test_below_threshold(self):
        with pytest.raises(PreconditionError):
            witness_XY_to_tripods(x_graph(4), 1)

    def test_not_an_xy_graph(self):
        with pytest.raises(PreconditionError):
            witness_XY_to_tripods(complete_bipartite(5, 5), 1)

    @pytest.mark.parametrize("second", [1, 6])
    def test_unbalanced_biclique_rejected(self, second):
        base = complete_bipartite(6, 5)
        h = Graph.from_edges(12, list(base.edges) + [(0, 11), (second, 11)])
        with pytest.raises(PreconditionError, match="differ"):
            witness_XY_to_tripods(h, 1)


class TestBicliquePlusVertex:
    @pytest.mark.parametrize("nbrs_a,nbrs_b,tag", [
        (2, 0, "X"),
        (1, 3, "Y"),
        (1, 1, "Y"),
    ])
    def test_case_analysis(self, nbrs_a, nbrs_b, tag):
        g, A, B, v = build_biclique_plus_vertex(3, nbrs_a, nbrs_b)
        w, got = witness_biclique_plus_vertex(g, A, B, v, 3)
        assert got == tag
        expected = x_graph(3) if tag == "X" else y_graph(3)
        assert_witness_for(w, expected)

    def test_larger_parts_are_trimmed(self):
        g, A, B, v = build_biclique_plus_vertex(3, 2, 1, extra=2)
        w, tag = witness_biclique_plus_vertex(g, A, B, v, 3)
        assert tag == "Y"
        assert_witness_for(w, y_graph(3))

    def test_single_neighbour_rejected(self):
        g, A, B, v = build_biclique_plus_vertex(3, 1, 0)
        with pytest.raises(PreconditionError) as err:
            witness_biclique_plus_vertex(g, A, B, v, 3)
        assert err.value.condition == 4

    def test_biclique_parts(self):
        assert biclique_parts(complete_bipartite(2, 3), range(5)) == ((0, 1), (2, 3, 4))
        assert biclique_parts(x_graph(3), range(7)) is None


class TestCliqueThreePaths:
    def test_claw_t1(self):
        inst = build_clique_three_path_instance(1)
        assert_witness_for(witness_clique_three_paths(inst), spider(1, 1, 1))

    def test_long_third_path(self):
        inst = build_clique_three_path_instance(1, lengths=(1, 1, 2))
        assert_witness_for(witness_clique_three_paths(inst), spider(1, 1, 1))

    def test_permuted_instance(self):
        inst = build_clique_three_path_instance(1, lengths=(2, 1, 3), extra_clique=1)
        perm = random_permutation(inst.graph.n, np.random.default_rng(4))
        permuted = permute_clique_three_path(inst, perm)
        assert_witness_for(witness_clique_three_paths(permuted), spider(1, 1, 1))

    def test_chord_in_first_cycle_rejected(self):
        inst = build_clique_three_path_instance(1, lengths=(2, 2, 1))
        a, b = inst.Q[0][1], inst.Q[1][1]
        chorded = Graph.from_edges(inst.graph.n, list(inst.graph.edges) + [(a, b)])
        bad = CliqueThreePathInstance(chorded, inst.A, inst.w, inst.Q, inst.t)
        with pytest.raises(PreconditionError) as err:
            witness_clique_three_paths(bad)
        assert err.value.condition == 6


class TestLineGraphSpider:
    def test_pattern_matches_line_graph(self):
        assert is_isomorphic(line_graph(spider(2, 2, 2)), linegraph_pattern(2)) is not None

    @pytest.mark.parametrize("t,q", [(1, 2), (1, 3), (1, 4), (2, 3)])
    def test_two_copy_witness(self, t, q):
        w = witness_linegraph_spider(t, q)
        assert w.k == 2
        expected = disjoint_union([spider(q - 1, q - 1, q)] * t)
        assert_witness_for(w, expected)

    def test_q1_rejected(self):
        with pytest.raises(PreconditionError):
            witness_linegraph_spider(1, 1)
