"""
Instance types for the witness constructions, their validators, and
builders for canonical and seeded random instances.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from graphs.graph import Graph, induced_subgraph
from utils.errors import PreconditionError


def biclique_size(t: int) -> int:
    """s = 3t^2 + t, the part size of the biclique-path lemma."""
    return 3 * t * t + t


def tripod_threshold(t: int) -> int:
    """3t^2 + t + 1: biclique parts and cliques from this size on force a tripod."""
    return biclique_size(t) + 1


def clique_bound(t: int) -> int:
    """r = 3t^2 + t + 2."""
    return biclique_size(t) + 2


def _fail(condition: int, message: str) -> None:
    raise PreconditionError(message, condition=condition)


def _is_path(g: Graph, seq: Sequence[int]) -> bool:
    """True when seq lists the vertices of an induced path in order."""
    if len(set(seq)) != len(seq):
        return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            adjacent = g.has_edge(u, seq[j])
            if adjacent != (j == i + 1):
                return False
    return True


@dataclass(frozen=True)
class BicliquePathInstance:
    """
    Biclique with parts A and B of size 3t^2+t plus an induced path C from
    the anchor x (degree 2) to y; x and y are the only path vertices with
    neighbours in A ∪ B, and their neighbourhoods there differ.
    """

    graph: Graph
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    C: Tuple[int, ...]
    t: int

    @property
    def x(self) -> int:
        return self.C[0]

    @property
    def y(self) -> int:
        return self.C[-1]

    @property
    def s(self) -> int:
        return biclique_size(self.t)

    def anchor_neighbour(self) -> int:
        """The unique neighbour of the anchor inside A ∪ B."""
        ab = set(self.A) | set(self.B)
        inside = sorted(self.graph.adj[self.x] & ab)
        return inside[0]

    def validate(self) -> None:
        """
        Check conditions 1-6 (numbered as in the docstring order below).

        1. A, B independent of size 3t^2+t; 2. A complete to B;
        3. |C| >= 2 and C is an induced path; 4. only x, y touch A ∪ B and both do;
        5. deg(x) = 2; 6. N(x) ∩ (A ∪ B) != N(y) ∩ (A ∪ B).

        Raises:
            PreconditionError: naming the first violated condition
        """
        g, A, B, C = self.graph, set(self.A), set(self.B), list(self.C)
        if self.t < 1:
            raise PreconditionError(f"t must be >= 1, got {self.t}")
        if A & B or A & set(C) or B & set(C) or len(set(C)) != len(C):
            _fail(1, "A, B and C must be pairwise disjoint")
        if set(range(g.n)) != A | B | set(C):
            _fail(1, "the vertex set must be exactly A ∪ B ∪ C")
        if len(A) != self.s or len(B) != self.s:
            _fail(1, f"|A| = {len(A)}, |B| = {len(B)}, both must be {self.s}")
        if not g.is_independent(A) or not g.is_independent(B):
            _fail(1, "A and B must be independent")
        if any(not g.has_edge(a, b) for a in A for b in B):
            _fail(2, "A must be complete to B")
        if len(C) < 2 or not _is_path(g, C):
            _fail(3, "C must induce a path with at least two vertices, listed from x to y")
        ab = A | B
        for c in C[1:-1]:
            if g.adj[c] & ab:
                _fail(4, f"inner path vertex {c} has a neighbour in A ∪ B")
        if not g.adj[self.x] & ab or not g.adj[self.y] & ab:
            _fail(4, "both path ends need a neighbour in A ∪ B")
        if g.degree(self.x) != 2:
            _fail(5, f"anchor {self.x} has degree {g.degree(self.x)}, expected 2")
        if g.adj[self.x] & ab == g.adj[self.y] & ab:
            _fail(6, "x and y have the same neighbourhood in A ∪ B")


@dataclass(frozen=True)
class CliqueThreePathInstance:
    """
    Clique A and a hub w outside A joined to A by three paths Q1, Q2, Q3
    (each listed from w to its end y_i in A).
    """

    graph: Graph
    A: Tuple[int, ...]
    w: int
    Q: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
    t: int

    @property
    def ends(self) -> Tuple[int, int, int]:
        return tuple(q[-1] for q in self.Q)

    def tripod_vertices(self) -> set:
        return set().union(*(set(q) for q in self.Q))

    def validate(self) -> None:
        """
        Conditions: 1 |A| >= 3t^2+t+1; 2 A is a clique; 3 the Q_i are paths
        from w to A, disjoint apart from w, covering V \\ A; 4 deg(w) = 3;
        5 A meets T exactly in the three path ends; 6 Q1 ∪ Q2 induces a
        chordless cycle; 7 A \\ T is anticomplete to T \\ A.
        """
        g, A = self.graph, set(self.A)
        if self.t < 1:
            raise PreconditionError(f"t must be >= 1, got {self.t}")
        if len(A) < tripod_threshold(self.t):
            _fail(1, f"|A| = {len(A)} is below {tripod_threshold(self.t)}")
        if not g.is_clique(A):
            _fail(2, "A must be a clique")
        T = self.tripod_vertices()
        if self.w in A:
            _fail(3, "the hub w must lie outside A")
        for i, q in enumerate(self.Q):
            if len(q) < 2 or q[0] != self.w:
                _fail(3, f"Q{i + 1} must start at w and have at least one edge")
            if any(not g.has_edge(a, b) for a, b in zip(q, q[1:])) or len(set(q)) != len(q):
                _fail(3, f"Q{i + 1} is not a path")
        tails = [set(q[1:]) for q in self.Q]
        if tails[0] & tails[1] or tails[0] & tails[2] or tails[1] & tails[2]:
            _fail(3, "the paths must be disjoint apart from w")
        if set(range(g.n)) != A | T:
            _fail(3, "the vertex set must be exactly A ∪ T")
        if g.degree(self.w) != 3:
            _fail(4, f"deg(w) = {g.degree(self.w)}, expected 3")
        if A & T != set(self.ends) or len(set(self.ends)) != 3:
            _fail(5, "A must meet the paths exactly in their three end vertices")
        cycle = list(self.Q[0]) + list(reversed(self.Q[1][1:]))
        if not is_chordless_cycle(g, cycle):
            _fail(6, "Q1 ∪ Q2 must induce a chordless cycle")
        for a in A - T:
            if g.adj[a] & (T - A):
                _fail(7, f"clique vertex {a} is adjacent to a path vertex outside A")


def is_chordless_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    """True when the listed vertices induce a cycle (in any order)."""
    vs = set(vertices)
    if len(vs) < 3 or len(vs) != len(vertices):
        return False
    sub = induced_subgraph(g, vs)
    return sub.is_connected() and all(sub.degree(v) == 2 for v in range(sub.n))


def relabel_instance_map(vertices: Sequence[int]) -> Dict[int, int]:
    """Index of each chosen vertex inside the induced subgraph on ``vertices``."""
    return {v: i for i, v in enumerate(sorted(set(vertices)))}


# ---------------------------------------------------------------------------
# Builders


def build_biclique_path_instance(
    t: int,
    path_length: int = 2,
    y_neighbours: Optional[Sequence[int]] = None,
    rng: Optional[np.random.Generator] = None,
) -> BicliquePathInstance:
    """
    Canonical instance: A = 0..s-1, B = s..2s-1, C = 2s..2s+L-1 with x = 2s.

    The anchor is joined to vertex 0; y is joined to ``y_neighbours`` (by
    default vertex s, or a random nonempty subset other than {0} when an rng
    is given).
    """
    s = biclique_size(t)
    if path_length < 2:
        raise PreconditionError("the path needs at least two vertices", condition=3)
    A = tuple(range(s))
    B = tuple(range(s, 2 * s))
    C = tuple(range(2 * s, 2 * s + path_length))
    edges = [(a, b) for a in A for b in B]
    edges.extend(zip(C, C[1:]))
    edges.append((C[0], 0))
    if y_neighbours is None:
        if rng is None:
            y_neighbours = [s]
        else:
            pool = list(A + B)
            chosen = [0]
            while chosen == [0]:
                size = int(rng.integers(1, 4))
                chosen = sorted(int(v) for v in rng.choice(pool, size=size, replace=False))
            y_neighbours = chosen
    edges.extend((C[-1], v) for v in y_neighbours)
    graph = Graph.from_edges(2 * s + path_length, edges, f"biclique-path(t={t})")
    return BicliquePathInstance(graph, A, B, C, t)


def build_clique_three_path_instance(
    t: int,
    lengths: Sequence[int] = (1, 1, 1),
    extra_clique: int = 0,
) -> CliqueThreePathInstance:
    """
    Clique on 0..a-1 with a = 3t^2+t+1+extra_clique; hub w = a; path i has
    ``lengths[i]`` edges and ends at clique vertex i.
    """
    a = tripod_threshold(t) + extra_clique
    edges = [(u, v) for u in range(a) for v in range(u + 1, a)]
    w = a
    nxt = a + 1
    paths: List[Tuple[int, ...]] = []
    for i, length in enumerate(lengths):
        if length < 1:
            raise PreconditionError(f"path Q{i + 1} needs at least one edge", condition=3)
        seq = [w]
        for _ in range(length - 1):
            seq.append(nxt)
            nxt += 1
        seq.append(i)
        edges.extend(zip(seq, seq[1:]))
        paths.append(tuple(seq))
    graph = Graph.from_edges(nxt, edges, f"clique-three-paths(t={t})")
    return CliqueThreePathInstance(graph, tuple(range(a)), w, tuple(paths), t)


def build_peel_graph(
    a_size: int,
    b_size: int,
    neighbours: int,
    clique: bool = False,
    v_to_b: int = 0,
) -> Tuple[Graph, Tuple[int, ...], Tuple[int, ...], int]:
    """
    A = 0..a-1 (independent or a clique), B = a..a+b-1 complete to A, and
    v = a+b adjacent to the first ``neighbours`` vertices of A and the first
    ``v_to_b`` vertices of B.
    """
    A = tuple(range(a_size))
    B = tuple(range(a_size, a_size + b_size))
    v = a_size + b_size
    edges = [(x, y) for x in A for y in B]
    if clique:
        edges.extend((x, y) for x in A for y in A if x < y)
    edges.extend((v, x) for x in A[:neighbours])
    edges.extend((v, y) for y in B[:v_to_b])
    return Graph.from_edges(v + 1, edges, "peel"), A, B, v


def build_biclique_plus_vertex(p: int, nbrs_a: int, nbrs_b: int, extra: int = 0) -> Tuple[Graph, Tuple[int, ...], Tuple[int, ...], int]:
    """K_{p+extra,p+extra} with parts A, B and v adjacent to the first nbrs_a of A and nbrs_b of B."""
    size = p + extra
    graph, A, B, v = build_peel_graph(size, size, nbrs_a, clique=False, v_to_b=nbrs_b)
    return graph, A, B, v


def random_permutation(n: int, rng: np.random.Generator) -> List[int]:
    return [int(x) for x in rng.permutation(n)]


def permute_biclique_path(inst: BicliquePathInstance, perm: Sequence[int]) -> BicliquePathInstance:
    g = inst.graph.relabel(perm)
    return BicliquePathInstance(
        g,
        tuple(sorted(perm[v] for v in inst.A)),
        tuple(sorted(perm[v] for v in inst.B)),
        tuple(perm[v] for v in inst.C),
        inst.t,
    )


def permute_clique_three_path(inst: CliqueThreePathInstance, perm: Sequence[int]) -> CliqueThreePathInstance:
    g = inst.graph.relabel(perm)
    return CliqueThreePathInstance(
        g,
        tuple(sorted(perm[v] for v in inst.A)),
        perm[inst.w],
        tuple(tuple(perm[v] for v in q) for q in inst.Q),
        inst.t,
    )
