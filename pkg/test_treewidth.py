"""Tests for tree decompositions, exact treewidth and the MWIS tree DP."""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from conftest import small_graphs, weighted_graphs
from graphs import (
    Graph,
    WeightedGraph,
    complete,
    complete_bipartite,
    cycle,
    grid,
    induced_subgraph,
    path,
    petersen,
    spider,
)
from solvers import mwis_bruteforce
from treewidth import (
    TreeDecomposition,
    decomposition_from_order,
    exact_treewidth,
    mwis_treedp,
    nice_decomposition,
    solution_key,
    tw_upper_bound,
    validate_decomposition,
)
from utils.errors import GuardExceededError, PreconditionError


class TestExactTreewidth:
    @pytest.mark.parametrize("g,expected", [
        (path(6), 1),
        (spider(2, 1, 3), 1),
        (cycle(3), 2),
        (cycle(8), 2),
        (complete_bipartite(3, 3), 3),
        (complete(5), 4),
        (grid(3, 3), 3),
        (petersen(), 4),
    ])
    def test_known_values(self, g, expected):
        width, td = exact_treewidth(g)
        assert width == expected
        assert td.width == expected
        assert validate_decomposition(g, td)

    def test_trivial_graphs(self):
        assert exact_treewidth(Graph(0, frozenset()))[0] == -1
        assert exact_treewidth(Graph(3, frozenset()))[0] == 0

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            exact_treewidth(path(21))

    @given(small_graphs(max_n=8))
    @hyp_settings(deadline=None, max_examples=40)
    def test_exact_never_exceeds_heuristic(self, g):
        width, td = exact_treewidth(g)
        assert validate_decomposition(g, td)
        assert width <= tw_upper_bound(g)[0]

    @given(small_graphs(max_n=8), st.data())
    @hyp_settings(deadline=None, max_examples=40)
    def test_monotone_under_induced_subgraphs(self, g, data):
        mask = data.draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n))
        sub = induced_subgraph(g, [v for v in range(g.n) if mask[v]])
        assert exact_treewidth(sub)[0] <= exact_treewidth(g)[0]


class TestHeuristic:
    def test_tree_and_clique(self):
        assert tw_upper_bound(path(5))[0] == 1
        assert tw_upper_bound(complete(6))[0] == 5

    def test_grid_is_an_upper_bound(self):
        width, td = tw_upper_bound(grid(3, 3))
        assert width >= exact_treewidth(grid(3, 3))[0]
        assert validate_decomposition(grid(3, 3), td)


class TestValidation:
    def test_single_bag(self):
        td = TreeDecomposition((frozenset(range(5)),), ())
        assert validate_decomposition(cycle(5), td)
        assert td.width == 4

    def test_missing_edge(self):
        td = TreeDecomposition((frozenset({0, 1}), frozenset({1, 2})), ((0, 1),))
        result = validate_decomposition(cycle(3), td)
        assert not result
        assert "edge (0,2)" in result.diagnostic

    def test_disconnected_occurrences(self):
        bags = (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2}))
        td = TreeDecomposition(bags, ((0, 1), (1, 2)))
        result = validate_decomposition(cycle(3), td)
        assert not result
        assert "vertex 0" in result.diagnostic

    def test_elimination_order(self):
        g = cycle(5)
        td = decomposition_from_order(g, [0, 1, 2, 3, 4])
        assert validate_decomposition(g, td)
        assert td.width == 2

    def test_nice_form_ends_in_empty_root(self):
        _, td = exact_treewidth(cycle(5))
        nodes, root = nice_decomposition(td)
        assert nodes[root].bag == frozenset()
        assert {node.kind for node in nodes} <= {"leaf", "introduce", "forget", "join"}


class TestTreeDP:
    def test_path_with_heavy_ends(self):
        wg = WeightedGraph.of(path(4), [3, 1, 1, 3])
        _, td = exact_treewidth(path(4))
        assert mwis_treedp(wg, td) == (Fraction(6), (0, 3))

    def test_c5_unit(self):
        _, td = tw_upper_bound(cycle(5))
        weight, members = mwis_treedp(WeightedGraph.unit(cycle(5)), td)
        assert weight == 2
        assert members == (0, 2)

    def test_invalid_decomposition_rejected(self):
        td = TreeDecomposition((frozenset({0, 1}),), ())
        with pytest.raises(PreconditionError):
            mwis_treedp(WeightedGraph.unit(path(3)), td)

    def test_tie_order(self):
        assert solution_key((Fraction(2), (1,))) < solution_key((Fraction(2), (0, 1)))
        assert solution_key((Fraction(2), (0, 2))) < solution_key((Fraction(2), (1, 2)))
        assert solution_key((Fraction(3), (5,))) < solution_key((Fraction(2), (0,)))

    @given(weighted_graphs(max_n=9))
    @hyp_settings(deadline=None, max_examples=100)
    def test_matches_brute_force(self, wg):
        _, td = tw_upper_bound(wg.graph)
        assert mwis_treedp(wg, td) == mwis_bruteforce(wg)
