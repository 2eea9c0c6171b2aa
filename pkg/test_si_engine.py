"""Tests for vertex maps, intersections, witnesses and the two si oracles."""

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from conftest import small_graphs
from graphs import (
    EmbeddingMode,
    Graph,
    all_graphs,
    complete,
    complete_bipartite,
    cycle,
    diamond,
    disjoint_union,
    empty,
    find_embedding,
    induced_subgraph,
    is_isomorphic,
    path,
    spider,
    x_graph,
)
from si_engine import (
    LabeledGraph,
    SiWitness,
    VertexMap,
    apply_map,
    chain_witnesses,
    check_oracle_agreement,
    compose_witness,
    evaluate_witness,
    identity_witness,
    intersect,
    naive_copy_bound,
    parse_witness,
    serialize_witness,
    si_check,
    si_oracle,
    si_oracle_naive,
    verify_witness,
    witness_from_local_embeddings,
    witness_induced,
)
from utils.errors import GraphFormatError, GuardExceededError, PreconditionError


def claw() -> Graph:
    return spider(1, 1, 1)


class TestMapsAndIntersection:
    def test_identity_map(self):
        placed = apply_map(cycle(4), VertexMap.identity(4))
        assert placed.vertices == frozenset(range(4))
        assert placed.normalize() == cycle(4)

    def test_shifted_path(self):
        placed = apply_map(path(3), VertexMap((5, 6, 7)))
        assert placed.vertices == frozenset({5, 6, 7})
        assert placed.edges == frozenset({(5, 6), (6, 7)})

    def test_moved_endpoint(self):
        placed = apply_map(path(2), VertexMap((7, 0)))
        assert placed.edges == frozenset({(0, 7)})

    def test_non_injective_map_rejected(self):
        with pytest.raises(PreconditionError):
            VertexMap((0, 0, 1))

    def test_wrong_domain_rejected(self):
        with pytest.raises(PreconditionError):
            apply_map(path(3), VertexMap((0, 1)))

    def test_overlapping_cycles(self):
        first = apply_map(cycle(4), VertexMap((0, 1, 2, 3)))
        second = apply_map(cycle(4), VertexMap((2, 3, 4, 5)))
        common = intersect(first, second)
        assert common.vertices == frozenset({2, 3})
        assert common.edges == frozenset({(2, 3)})

    def test_triangle_meets_path(self):
        tri = LabeledGraph.from_graph(complete(3))
        p3 = LabeledGraph.from_graph(path(3))
        assert intersect(tri, p3).normalize() == path(3)


class TestWitnesses:
    def test_identity_evaluates_to_host(self):
        assert evaluate_witness(identity_witness(cycle(5))) == cycle(5)

    def test_induced_witness_on_p4(self):
        w = witness_induced(path(4), [0, 1, 3])
        assert verify_witness(w)
        assert is_isomorphic(evaluate_witness(w), induced_subgraph(path(4), [0, 1, 3])) is not None

    @pytest.mark.parametrize("host,keep,expected", [
        (cycle(5), [0, 1, 2, 3], path(4)),
        (complete(4), [0, 2, 3], complete(3)),
        (diamond(), [0, 1, 3], path(3)),
    ])
    def test_induced_witness_examples(self, host, keep, expected):
        w = witness_induced(host, keep)
        assert verify_witness(w)
        assert is_isomorphic(evaluate_witness(w), expected) is not None

    def test_wrong_claim_fails_with_diagnostic(self):
        w = SiWitness(cycle(4), (VertexMap.identity(4),), path(4))
        result = verify_witness(w)
        assert not result
        assert "mismatch" in result.diagnostic

    @given(small_graphs(min_n=1, max_n=6))
    @hyp_settings(deadline=None, max_examples=40)
    def test_induced_witness_always_verifies(self, g):
        keep = [v for v in range(g.n) if v % 2 == 0]
        assert verify_witness(witness_induced(g, keep))

    def test_local_embeddings_reproduce_induced(self):
        h = cycle(6)
        target = path(4)
        e = find_embedding(target, h, EmbeddingMode.INDUCED)
        w = witness_from_local_embeddings(h, target, [e] * target.n)
        assert verify_witness(w)

    def test_local_embeddings_for_claw_in_x5(self):
        h = x_graph(5)
        embeddings = [
            find_embedding(claw(), h, EmbeddingMode.INDUCED_AT, at=[v]) for v in range(4)
        ]
        assert all(e is not None for e in embeddings)
        w = witness_from_local_embeddings(h, claw(), embeddings)
        assert verify_witness(w)

    def test_local_embeddings_reject_bad_embedding(self):
        e = find_embedding(path(3), complete(3), EmbeddingMode.SUBGRAPH)
        with pytest.raises(PreconditionError):
            witness_from_local_embeddings(complete(3), path(3), [e] * 3)

    def test_compose_with_identity(self):
        w = witness_induced(cycle(5), [0, 1, 2])
        composed = compose_witness(identity_witness(cycle(5)), w)
        assert verify_witness(composed)
        assert is_isomorphic(evaluate_witness(composed), path(3)) is not None

    def test_chain_of_cliques(self):
        w = chain_witnesses(
            witness_induced(complete(4), [0, 1, 2]),
            witness_induced(complete(3), [0, 1]),
        )
        assert verify_witness(w)
        assert is_isomorphic(evaluate_witness(w), complete(2)) is not None

    def test_compose_rejects_misaligned_hosts(self):
        with pytest.raises(PreconditionError):
            compose_witness(witness_induced(cycle(5), [0, 1]), identity_witness(complete(3)))

    def test_composed_oracle_witness_p4_to_p1p3(self):
        target = disjoint_union([path(1), path(3)])
        ok, w = si_oracle(path(4), target)
        assert ok
        composed = compose_witness(identity_witness(path(4)), w)
        assert verify_witness(composed)


class TestOracle:
    def test_triangle_has_only_cliques(self):
        assert si_oracle(complete(3), path(3)) == (False, None)

    def test_induced_claw_in_k14(self):
        ok, w = si_oracle(complete_bipartite(1, 4), claw())
        assert ok and verify_witness(w)

    def test_p4_and_c4_against_p1p3(self):
        target = disjoint_union([path(1), path(3)])
        assert si_check(path(4), target)
        assert not si_check(cycle(4), target)

    def test_larger_target_is_false(self):
        assert si_check(path(3), path(4)) is False

    def test_cap_is_enforced(self):
        with pytest.raises(GuardExceededError):
            si_oracle(cycle(9), path(5), cap=10)

    def test_naive_examples(self):
        assert si_oracle_naive(complete(3), complete(2), max_copies=2, universe=6)
        assert not si_oracle_naive(complete(3), path(3), max_copies=3, universe=6)

    def test_exhaustive_agreement_up_to_four_vertices(self):
        graphs = all_graphs(4)
        for g in graphs:
            for h in graphs:
                if h.n <= g.n:
                    check_oracle_agreement(g, h)

    @pytest.mark.parametrize("h,copies", [
        (empty(4), 6),
        (disjoint_union([path(2), empty(2)]), 5),
    ])
    def test_diamond_needs_one_copy_per_non_edge(self, h, copies):
        ok, w = si_oracle(diamond(), h)
        assert ok
        assert w.k == copies
        assert verify_witness(w)
        assert naive_copy_bound(h) == copies
        assert not si_oracle_naive(diamond(), h, max_copies=copies - 1, universe=8)
        assert si_oracle_naive(diamond(), h, max_copies=copies, universe=8)
        assert check_oracle_agreement(diamond(), h)

    def test_copy_bound_never_below_two(self):
        assert naive_copy_bound(complete(3)) == 2
        assert naive_copy_bound(path(3)) == 2

    @pytest.mark.slow
    @given(small_graphs(min_n=5, max_n=5), small_graphs(min_n=1, max_n=4))
    @hyp_settings(deadline=None, max_examples=30)
    def test_agreement_on_five_vertex_hosts(self, g, h):
        check_oracle_agreement(g, h)


class TestWitnessFormat:
    def test_round_trip(self):
        ok, w = si_oracle(path(4), disjoint_union([path(1), path(3)]))
        parsed = parse_witness(serialize_witness(w))
        assert parsed == w
        assert verify_witness(parsed)

    def test_result_lines_are_ignored(self):
        text = serialize_witness(identity_witness(path(2))) + "RESULT verified=true\n"
        assert parse_witness(text).k == 1

    @pytest.mark.parametrize("text", [
        "",
        "si-witness\nhost\n2 1\n0 1\nmaps 1\n0 1\n",
        "si-witness\nhost\n2 1\n0 1\nmaps 1\n0 0\nclaimed\n2 1\n0 1\n",
        "si-witness\nhost\n2 1\n0 1\nmaps 1\n0 1 2\nclaimed\n2 1\n0 1\n",
        "witness\nhost\n2 1\n0 1\nmaps 1\n0 1\nclaimed\n2 1\n0 1\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_witness(text)


class TestSiProperties:
    def test_transitivity_over_all_triples_up_to_four_vertices(self):
        graphs = all_graphs(4)
        found = {}
        for i, g in enumerate(graphs):
            for j, h in enumerate(graphs):
                ok, w = si_oracle(g, h)
                if ok:
                    found[i, j] = w
        for (i, j), w1 in found.items():
            for l in range(len(graphs)):
                w2 = found.get((j, l))
                if w2 is None:
                    continue
                composed = compose_witness(w1, w2)
                assert verify_witness(composed)
                assert is_isomorphic(evaluate_witness(composed), graphs[l]) is not None
                assert (i, l) in found

    @given(small_graphs(min_n=1, max_n=4), small_graphs(min_n=1, max_n=4), small_graphs(min_n=1, max_n=4))
    @hyp_settings(deadline=None, max_examples=60)
    def test_composed_witness_verifies(self, g, h, f):
        ok1, w1 = si_oracle(g, h)
        ok2, w2 = si_oracle(h, f)
        if ok1 and ok2:
            assert verify_witness(compose_witness(w1, w2))
            assert si_check(g, f)

    @given(small_graphs(min_n=1, max_n=4))
    @hyp_settings(deadline=None, max_examples=40)
    def test_clique_keeps_only_cliques(self, f):
        n = f.n
        ok, w = si_oracle(complete(n), f)
        assert ok == (f.m == n * (n - 1) // 2)
        if ok:
            assert verify_witness(w)

    @given(small_graphs(min_n=2, max_n=4))
    @hyp_settings(deadline=None, max_examples=40)
    def test_every_non_clique_loses_all_its_edges(self, g):
        if g.m == g.n * (g.n - 1) // 2:
            return
        ok, w = si_oracle(g, empty(g.n))
        assert ok
        assert verify_witness(w)

    @given(small_graphs(min_n=1, max_n=5), small_graphs(min_n=1, max_n=4))
    @hyp_settings(deadline=None, max_examples=60)
    def test_self_intersection_is_a_subgraph(self, g, h):
        ok, w = si_oracle(g, h)
        if ok:
            assert find_embedding(h, g, EmbeddingMode.SUBGRAPH) is not None

    @given(small_graphs(min_n=1, max_n=6), st.data())
    @hyp_settings(deadline=None, max_examples=60)
    def test_induced_subgraph_is_self_intersection(self, g, data):
        mask = data.draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n))
        keep = [v for v in range(g.n) if mask[v]]
        w = witness_induced(g, keep)
        assert verify_witness(w)
        assert is_isomorphic(evaluate_witness(w), induced_subgraph(g, keep)) is not None
        assert w.k == 1 + g.n - len(keep)
        if len(keep) == g.n:
            assert w.k == 1
