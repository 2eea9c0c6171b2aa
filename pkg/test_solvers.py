"""Tests for the MWIS pipeline, MIM, class tools and the #SAT helpers."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings

from conftest import small_graphs, weighted_graphs
from graphs import (
    EmbeddingMode,
    Graph,
    WeightedGraph,
    complete,
    complete_bipartite,
    cycle,
    diamond,
    disjoint_union,
    empty,
    find_embedding,
    h_graph,
    is_isomorphic,
    path,
    random_graph,
    spider,
)
from si_engine import evaluate_witness, si_oracle, verify_witness
from solvers import (
    ClassSpec,
    class_membership,
    class_probe,
    contains,
    count_sat_bruteforce,
    dichotomy_classify,
    incidence_graph,
    is_induced_matching,
    is_tripod_forest,
    mim_bruteforce,
    mis,
    mwis,
    mwis_bruteforce,
    p1p3_references,
    p1p3_si_exceptions,
    parse_dimacs,
    sk_membership,
    sk_obstruction,
)
from utils.errors import GraphFormatError, GuardExceededError, PreconditionError


def p1p3() -> Graph:
    return disjoint_union([path(1), path(3)])


class TestMwis:
    def test_path_with_heavy_ends(self):
        weight, members, trace = mwis(WeightedGraph.of(path(4), [3, 1, 1, 3]))
        assert (weight, members) == (Fraction(6), (0, 3))
        assert "clique-separator" in trace.counts()

    def test_c5_uses_tree_dp(self):
        size, members, trace = mis(cycle(5))
        assert size == 2
        assert members == (0, 2)
        assert trace.max_width() == 2

    def test_clique_picks_heaviest_vertex(self):
        weight, members, trace = mwis(WeightedGraph.of(complete(3), [1, 5, 5]))
        assert (weight, members) == (Fraction(5), (1,))
        assert trace.root.kind == "complete"
        assert trace.max_width() == -1

    def test_series_and_parallel(self):
        size, members, trace = mis(complete_bipartite(3, 3))
        assert (size, members) == (3, (0, 1, 2))
        assert trace.root.kind == "series"
        assert mis(empty(3))[2].root.kind == "parallel"

    def test_prime_quotient(self):
        g = Graph.from_edges(5, [(0, 2), (1, 2), (2, 3), (3, 4)])
        size, members, trace = mis(g)
        assert (size, members) == (3, (0, 1, 3))
        assert "prime-quotient" in trace.counts()

    def test_prime_quotient_ties_follow_vertex_order(self):
        g = Graph.from_edges(5, [(0, 1), (1, 3), (1, 4), (2, 4)])
        wg = WeightedGraph.of(g, [0, 1, 0, 1, 0])
        weight, members, trace = mwis(wg, threads=1)
        assert (weight, members) == (Fraction(1), (1,))
        assert (weight, members) == mwis_bruteforce(wg)
        assert "prime-quotient" in trace.counts()

    def test_prime_quotient_keeps_original_weights_in_trace(self):
        g = Graph.from_edges(5, [(0, 2), (1, 2), (2, 3), (3, 4)])
        wg = WeightedGraph.of(g, [Fraction(1, 3), Fraction(1, 3), 1, Fraction(1, 2), 1])
        weight, members, trace = mwis(wg, threads=1)
        assert (weight, members) == mwis_bruteforce(wg)
        assert all(step.weight <= weight for _, step in trace.steps())

    def test_empty_graph(self):
        assert mis(Graph(0, frozenset()))[:2] == (0, ())

    def test_zero_weights_prefer_fewer_vertices(self):
        weight, members, _ = mwis(WeightedGraph.of(empty(3), [0, 2, 0]))
        assert (weight, members) == (Fraction(2), (1,))

    def test_threads_do_not_change_the_answer(self):
        g = disjoint_union([cycle(5), path(4), diamond()])
        wg = WeightedGraph.of(g, range(1, g.n + 1))
        assert mwis(wg, threads=1)[:2] == mwis(wg, threads=3)[:2]

    def test_large_prime_atom_guard(self):
        with pytest.raises(GuardExceededError):
            mis(cycle(21))

    def test_trace_lines(self):
        _, _, trace = mis(cycle(5))
        assert trace.lines()[0].startswith("tree-dp size=5")

    @given(weighted_graphs(max_n=9))
    @hyp_settings(deadline=None, max_examples=150)
    def test_matches_brute_force(self, wg):
        weight, members, _ = mwis(wg, threads=1)
        assert (weight, members) == mwis_bruteforce(wg)

    def test_seeded_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = int(rng.integers(1, 11))
            g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
            weights = [Fraction(int(x), int(d)) for x, d in zip(rng.integers(0, 9, n), rng.integers(1, 4, n))]
            wg = WeightedGraph.of(g, weights)
            assert mwis(wg, threads=1)[:2] == mwis_bruteforce(wg)

    def test_brute_force_guard(self):
        with pytest.raises(GuardExceededError):
            mwis_bruteforce(WeightedGraph.unit(empty(23)))


class TestMim:
    def test_c6(self):
        assert mim_bruteforce(cycle(6)) == (2, ((0, 1), (3, 4)))

    @pytest.mark.parametrize("g,expected", [
        (path(4), 1),
        (cycle(5), 1),
        (disjoint_union([path(2), path(2)]), 2),
        (empty(3), 0),
        (path(6), 2),
    ])
    def test_sizes(self, g, expected):
        assert mim_bruteforce(g)[0] == expected

    def test_is_induced_matching(self):
        assert is_induced_matching(cycle(6), [(0, 1), (3, 4)])
        assert not is_induced_matching(cycle(6), [(0, 1), (2, 3)])
        assert not is_induced_matching(cycle(6), [(0, 1), (1, 2)])

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            mim_bruteforce(complete(8))

    @given(small_graphs(max_n=7))
    @hyp_settings(deadline=None, max_examples=60)
    def test_result_is_induced(self, g):
        size, matching = mim_bruteforce(g)
        assert size == len(matching)
        assert is_induced_matching(g, list(matching))


class TestClasses:
    def test_relations(self):
        assert contains(path(4), p1p3(), "si")
        assert contains(path(4), p1p3(), "subgraph")
        assert not contains(path(4), p1p3(), "induced")
        assert not contains(cycle(4), p1p3(), "si")

    def test_clique_in_si_free_but_not_subgraph_free(self):
        assert class_membership(complete(5), ClassSpec((p1p3(),), "si"))
        assert not class_membership(complete(5), ClassSpec((p1p3(),), "subgraph"))

    def test_spec_validation(self):
        with pytest.raises(PreconditionError):
            ClassSpec(())
        with pytest.raises(PreconditionError):
            ClassSpec((path(2),), "minor")

    def test_p1p3_table_against_references(self):
        table = class_probe([p1p3()], 5, p1p3_references())
        assert table.count_by_order() == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
        assert table.mismatches["subgraph"] == []
        [k23] = table.mismatches["si"]
        assert is_isomorphic(k23, complete_bipartite(2, 3)) is not None
        si, sub, ind = table.column("si"), table.column("subgraph"), table.column("induced")
        assert all(s <= i for s, i in zip(sub, si))
        assert all(s <= i for s, i in zip(si, ind))

    def test_k23_has_p1p3_as_self_intersection(self):
        k23 = complete_bipartite(2, 3)
        for f in p1p3_references()["si"]:
            assert find_embedding(f, k23, EmbeddingMode.INDUCED) is None
        ok, w = si_oracle(k23, p1p3())
        assert ok
        assert verify_witness(w)
        assert is_isomorphic(evaluate_witness(w), p1p3()) is not None

    @pytest.mark.slow
    def test_p1p3_exceptions_up_to_six_vertices(self):
        table = class_probe([p1p3()], 6, p1p3_references())
        found = table.mismatches["si"]
        assert sorted((g.n, g.m) for g in found) == [(5, 6), (6, 8), (6, 9)]
        for g in found:
            assert any(is_isomorphic(g, e) is not None for e in p1p3_si_exceptions())
            ok, w = si_oracle(g, p1p3())
            assert ok and verify_witness(w)
        assert table.mismatches["subgraph"] == []

    def test_probe_guard(self):
        with pytest.raises(GuardExceededError):
            class_probe([path(2)], 8)


class TestTripodsAndSk:
    @pytest.mark.parametrize("g,expected", [
        (spider(1, 1, 1), 1),
        (path(1), 1),
        (p1p3(), 2),
        (path(4), 2),
        (cycle(4), None),
        (complete_bipartite(1, 4), None),
    ])
    def test_is_tripod_forest(self, g, expected):
        assert is_tripod_forest(g) == expected

    def test_sk_obstructions(self):
        assert sk_obstruction(cycle(4), 4) == "C4"
        assert sk_obstruction(cycle(4), 3) is None
        assert sk_obstruction(complete_bipartite(1, 4), 3) == "H0"
        assert sk_obstruction(h_graph(2), 3) == "H2"
        assert sk_membership(path(5), 3)

    def test_sk_needs_k_at_least_three(self):
        with pytest.raises(PreconditionError):
            sk_obstruction(path(3), 2)


class TestDichotomy:
    def test_p1p3_is_poly(self):
        verdict = dichotomy_classify([p1p3()])
        assert (verdict.verdict, verdict.t, verdict.index) == ("POLY", 2, 0)

    def test_c4_is_hard(self):
        verdict = dichotomy_classify([cycle(4)])
        assert (verdict.verdict, verdict.r) == ("HARD", 4)
        assert verdict.lines() == ["verdict=HARD", "r=4", "obstruction[0]=C4"]

    def test_k14_is_hard(self):
        verdict = dichotomy_classify([complete_bipartite(1, 4)])
        assert (verdict.verdict, verdict.r) == ("HARD", 3)

    def test_smallest_t_wins(self):
        verdict = dichotomy_classify([path(4), cycle(3), spider(1, 1, 1)])
        assert (verdict.verdict, verdict.t, verdict.index) == ("POLY", 1, 2)

    def test_empty_list(self):
        with pytest.raises(PreconditionError):
            dichotomy_classify([])


class TestSat:
    def test_parse_and_count(self):
        cnf = parse_dimacs("c example\np cnf 2 2\n1 2 0\n-1 0\n")
        assert cnf.clauses == ((1, 2), (-1,))
        assert count_sat_bruteforce(cnf) == 1

    def test_clause_spanning_lines(self):
        cnf = parse_dimacs("p cnf 3 1\n1 -2\n3 0\n")
        assert cnf.clauses == ((1, -2, 3),)
        assert count_sat_bruteforce(cnf) == 7

    def test_incidence_graph(self):
        g = incidence_graph(parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n"))
        assert g.n == 4
        assert g.sorted_edges() == [(0, 2), (0, 3), (1, 2)]

    @pytest.mark.parametrize("text", [
        "1 2 0\n",
        "p cnf 2 2\n1 2 0\n",
        "p cnf 1 1\n2 0\n",
        "p cnf 1 1\nx 0\n",
        "p dnf 1 1\n1 0\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_dimacs(text)
