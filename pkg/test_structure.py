"""Tests for the structural analyzers and the certifying theorems."""

from itertools import combinations

import pytest
from hypothesis import given, settings as hyp_settings

from conftest import small_graphs
from graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    diamond,
    disjoint_union,
    empty,
    is_isomorphic,
    path,
    petersen,
    tripod_forest,
    x_graph,
)
from si_engine import evaluate_witness, verify_witness
from structure import (
    CompleteCert,
    KrFreeCert,
    ModuleCert,
    Refutation,
    biconnected_components,
    bipartite_piece_report,
    certify_theorem31,
    certify_theorem37,
    clique_cutsets_upto,
    clique_separator_atoms,
    cut_vertices,
    describe_certificate,
    false_twin_classes,
    is_module,
    lex_shortest_path,
    maximal_cliques,
    maximal_induced_bicliques,
    modular_decomposition,
    report_theorem39,
    validate_certificate,
    validate_md_tree,
)
from utils.errors import PreconditionError


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def bicliques_by_brute_force(g: Graph):
    """Maximal induced bicliques by checking every pair of vertex sets."""
    def independent_sets():
        for size in range(1, g.n + 1):
            for s in combinations(range(g.n), size):
                if g.is_independent(s):
                    yield s

    candidates = list(independent_sets())
    found = set()
    for A in candidates:
        for B in candidates:
            if set(A) & set(B) or A[0] > B[0]:
                continue
            if any(not g.has_edge(a, b) for a in A for b in B):
                continue
            rest = set(range(g.n)) - set(A) - set(B)
            grows = any(
                (not g.adj[z] & set(A) and set(B) <= g.adj[z])
                or (not g.adj[z] & set(B) and set(A) <= g.adj[z])
                for z in rest
            )
            if not grows:
                found.add((A, B))
    return sorted(found)


class TestModules:
    def test_false_twins(self):
        assert false_twin_classes(complete_bipartite(3, 3)) == [(0, 1, 2), (3, 4, 5)]
        assert false_twin_classes(cycle(5)) == [(v,) for v in range(5)]
        assert false_twin_classes(empty(2)) == [(0, 1)]

    def test_is_module(self):
        g = Graph.from_edges(7, list(complete_bipartite(3, 3).edges) + [(0, 6)])
        assert is_module(g, range(7))
        assert is_module(g, [4])
        assert not is_module(g, [0, 1, 2])

    def test_edgeless_is_parallel(self):
        tree = modular_decomposition(empty(4))
        assert tree.root.kind == "parallel"
        assert len(tree.root.children) == 4

    def test_complete_is_series(self):
        assert modular_decomposition(complete(4)).root.kind == "series"

    def test_c5_is_prime(self):
        root = modular_decomposition(cycle(5)).root
        assert root.kind == "prime"
        assert [child.kind for child in root.children] == ["leaf"] * 5

    def test_empty_graph(self):
        tree = modular_decomposition(Graph(0, frozenset()))
        assert tree.root is None
        assert validate_md_tree(tree.graph, tree)

    @given(small_graphs(max_n=8))
    @hyp_settings(deadline=None, max_examples=80)
    def test_trees_validate(self, g):
        assert validate_md_tree(g, modular_decomposition(g))


class TestSeparators:
    def test_cut_vertices(self):
        assert cut_vertices(path(3)) == [1]
        assert cut_vertices(cycle(6)) == []
        assert cut_vertices(bowtie()) == [0]
        assert len(biconnected_components(bowtie())) == 2

    def test_clique_cutsets(self):
        assert clique_cutsets_upto(path(4), 1) == [(1,), (2,)]
        assert clique_cutsets_upto(cycle(4), 2) == []
        two_k4 = Graph.from_edges(6, [
            (u, v) for block in ((0, 1, 2, 3), (0, 1, 4, 5)) for u, v in combinations(block, 2)
        ])
        assert clique_cutsets_upto(two_k4, 2) == [(0, 1)]

    def test_disconnected_has_empty_cutset(self):
        assert clique_cutsets_upto(empty(2), 0) == [()]

    def test_atoms(self):
        assert clique_separator_atoms(diamond()).atoms == [(0, 1, 2), (1, 2, 3)]
        assert clique_separator_atoms(cycle(5)).atoms == [(0, 1, 2, 3, 4)]
        assert clique_separator_atoms(complete_bipartite(3, 3)).atoms == [tuple(range(6))]

    def test_lex_shortest_path(self):
        assert lex_shortest_path(path(4), [0], [3]) == [0, 1, 2, 3]
        assert lex_shortest_path(cycle(4), [0], [2]) == [0, 1, 2]
        assert lex_shortest_path(cycle(4), [0], [2], allowed=[0, 2, 3]) == [0, 3, 2]
        assert lex_shortest_path(empty(2), [0], [1]) is None


class TestCliques:
    def test_k33_single_biclique(self):
        assert maximal_induced_bicliques(complete_bipartite(3, 3)) == [((0, 1, 2), (3, 4, 5))]

    def test_c6_matches_brute_force(self):
        found = maximal_induced_bicliques(cycle(6))
        assert found == bicliques_by_brute_force(cycle(6))
        assert len(found) == 6

    @given(small_graphs(min_n=1, max_n=6))
    @hyp_settings(deadline=None, max_examples=50)
    def test_bicliques_match_brute_force(self, g):
        assert maximal_induced_bicliques(g) == bicliques_by_brute_force(g)

    def test_petersen_cliques_are_edges(self):
        cliques = maximal_cliques(petersen())
        assert len(cliques) == 15
        assert all(len(c) == 2 for c in cliques)


class TestTheorem31:
    def test_biclique_is_module(self):
        cert = certify_theorem31(complete_bipartite(5, 5), 1)
        assert isinstance(cert, ModuleCert)
        assert validate_certificate(complete_bipartite(5, 5), cert, 1)

    def test_x5_refuted(self):
        g = x_graph(5)
        cert = certify_theorem31(g, 1)
        assert isinstance(cert, Refutation)
        assert validate_certificate(g, cert, 1)
        assert is_isomorphic(evaluate_witness(cert.witness), tripod_forest(1)) is not None
        assert describe_certificate(cert).startswith("refutation")

    @pytest.mark.parametrize("ear", [
        [(0, 10), (10, 11), (11, 5)],
        [(0, 10), (10, 11), (0, 11), (11, 12), (12, 1)],
        [(3, 10), (10, 11), (11, 12), (12, 13), (13, 9)],
    ])
    def test_ear_with_single_neighbours_refuted(self, ear):
        base = complete_bipartite(5, 5)
        n = 1 + max(max(e) for e in ear)
        g = Graph.from_edges(n, list(base.edges) + ear)
        cert = certify_theorem31(g, 1)
        assert isinstance(cert, Refutation)
        assert cert.case == "single neighbour"
        assert validate_certificate(g, cert, 1)
        assert is_isomorphic(evaluate_witness(cert.witness), tripod_forest(1)) is not None

    def test_universal_vertex_keeps_module(self):
        base = complete_bipartite(5, 5)
        g = Graph.from_edges(11, list(base.edges) + [(10, v) for v in range(10)])
        cert = certify_theorem31(g, 1)
        assert isinstance(cert, ModuleCert)
        assert len(cert.bicliques) == 1

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            certify_theorem31(empty(2), 1)
        with pytest.raises(PreconditionError):
            certify_theorem31(path(3), 1)


class TestTheorem37:
    def test_complete(self):
        cert = certify_theorem37(complete(7), 1)
        assert cert == CompleteCert(7)
        assert validate_certificate(complete(7), cert, 1)

    def test_cycle_is_kr_free(self):
        cert = certify_theorem37(cycle(5), 1)
        assert cert == KrFreeCert(6, 2)
        assert validate_certificate(cycle(5), cert, 1)

    def test_vertex_with_three_clique_neighbours(self):
        k6 = complete(6)
        g = Graph.from_edges(7, list(k6.edges) + [(6, 0), (6, 1), (6, 2)])
        cert = certify_theorem37(g, 1)
        assert isinstance(cert, Refutation)
        assert verify_witness(cert.witness)
        assert validate_certificate(g, cert, 1)

    def test_small_clique_cutset_rejected(self):
        with pytest.raises(PreconditionError):
            certify_theorem37(path(4), 1)

    def test_tampered_certificate_fails(self):
        assert not validate_certificate(cycle(5), KrFreeCert(6, 3), 1)
        assert not validate_certificate(cycle(5), CompleteCert(5), 1)


class TestTheorem39:
    def test_complete_branch(self):
        report = report_theorem39(complete(9), 1)
        assert report.complete
        assert "branch: complete" in report.lines()

    def test_cycle(self):
        report = report_theorem39(cycle(7), 1)
        assert report.hypotheses_hold
        assert (report.width, report.width_exact) == (2, True)
        assert report.exclusions_pass

    def test_petersen(self):
        report = report_theorem39(petersen(), 1)
        assert report.hypotheses_hold
        assert report.width == 4
        assert report.exclusions_pass

    def test_twins_fail_hypotheses(self):
        report = report_theorem39(complete_bipartite(2, 3), 1)
        assert not report.hypotheses_hold
        assert report.width is None
        assert "branch: hypotheses fail" in report.lines()


class TestBipartitePieces:
    def test_k33(self):
        [piece] = bipartite_piece_report(complete_bipartite(3, 3), 1)
        assert piece.is_biclique
        assert (piece.width, piece.width_exact) == (3, True)
        assert piece.kpp_free
        assert not piece.tripod_free

    def test_blocks_and_isolated_vertices(self):
        g = disjoint_union([path(3), empty(1)])
        pieces = bipartite_piece_report(g, 1)
        assert [p.vertices for p in pieces] == [(0, 1), (1, 2), (3,)]
        assert all(p.tripod_free for p in pieces)

    def test_non_bipartite_rejected(self):
        with pytest.raises(PreconditionError):
            bipartite_piece_report(cycle(5), 1)
