"""
Core graph types: simple undirected graphs on 0..n-1, vertex-weighted graphs
and pattern embeddings.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from utils.checks import CheckResult
from utils.errors import PreconditionError


Edge = Tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph with vertices 0..n-1.

    Equality compares the labeled edge sets; the name is informational only.
    """

    n: int
    edges: FrozenSet[Edge]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"negative order {self.n}")
        for u, v in self.edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise PreconditionError(f"edge ({u},{v}) outside 0..{self.n - 1} or not normalized")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "") -> "Graph":
        """
        Build a graph from arbitrary-order vertex pairs.

        Args:
            n: Number of vertices
            edges: Iterable of (u, v) pairs, any orientation
            name: Optional display name

        Returns:
            The graph
        """
        normalized = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            normalized.add(_norm_edge(int(u), int(v)))
        return cls(n, frozenset(normalized), name)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph, name: str = "") -> "Graph":
        """Convert a networkx graph, numbering its nodes in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes),
            ((index[u], index[v]) for u, v in nx_graph.edges() if u != v),
            name,
        )

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adj(self) -> Tuple[FrozenSet[int], ...]:
        neighbours: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Adjacency rows as integer bitmasks."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((len(s) for s in self.adj), reverse=True))

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def complement(self) -> "Graph":
        return Graph.from_edges(
            self.n,
            ((u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)),
            f"co-{self.name}" if self.name else "",
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply a permutation of 0..n-1 (vertex i becomes perm[i])."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), self.name)

    def components(self) -> List[List[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"Graph({self.n}, m={self.m}{label})"


@dataclass(frozen=True)
class WeightedGraph:
    """Graph with a nonnegative rational weight per vertex."""

    graph: Graph
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise PreconditionError(
                f"weight vector has length {len(self.weights)}, graph has {self.graph.n} vertices"
            )
        for v, w in enumerate(self.weights):
            if w < 0:
                raise PreconditionError(f"negative weight {w} at vertex {v}")

    @classmethod
    def of(cls, graph: Graph, weights: Iterable) -> "WeightedGraph":
        return cls(graph, tuple(Fraction(w) for w in weights))

    @classmethod
    def unit(cls, graph: Graph) -> "WeightedGraph":
        return cls(graph, tuple(Fraction(1) for _ in range(graph.n)))

    def weight_of(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vertices), Fraction(0))


class EmbeddingMode(str, Enum):
    SUBGRAPH = "subgraph"
    INDUCED = "induced"
    INDUCED_AT = "induced-at"


@dataclass(frozen=True)
class Embedding:
    """
    Injective assignment of pattern vertices (by index) to host vertices.

    For INDUCED_AT the non-edge condition is required only for pairs that
    contain a vertex of ``at``.
    """

    mapping: Tuple[int, ...]
    mode: EmbeddingMode = EmbeddingMode.SUBGRAPH
    at: FrozenSet[int] = frozenset()

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def _needs_nonedge(self, u: int, v: int) -> bool:
        if self.mode is EmbeddingMode.INDUCED:
            return True
        if self.mode is EmbeddingMode.INDUCED_AT:
            return u in self.at or v in self.at
        return False

    def check(self, pattern: Graph, host: Graph) -> CheckResult:
        """
        Validate the embedding against its mode.

        Returns:
            CheckResult naming the first offending vertex or pair
        """
        if len(self.mapping) != pattern.n:
            return CheckResult.failed(f"mapping covers {len(self.mapping)} of {pattern.n} pattern vertices")
        for v, image in enumerate(self.mapping):
            if not 0 <= image < host.n:
                return CheckResult.failed(f"vertex {v} maps outside the host ({image})")
        if len(set(self.mapping)) != len(self.mapping):
            return CheckResult.failed("mapping is not injective")
        for u, v in pattern.sorted_edges():
            if not host.has_edge(self.mapping[u], self.mapping[v]):
                return CheckResult.failed(f"pattern edge ({u},{v}) maps to a host non-edge")
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) or not self._needs_nonedge(u, v):
                    continue
                if host.has_edge(self.mapping[u], self.mapping[v]):
                    return CheckResult.failed(f"pattern non-edge ({u},{v}) maps to a host edge")
        return CheckResult.passed()


def line_graph(g: Graph) -> Graph:
    """Line graph with vertices numbered by the sorted edge list of ``g``."""
    edge_list = g.sorted_edges()
    incident: List[List[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for at_vertex in incident:
        for a in range(len(at_vertex)):
            for b in range(a + 1, len(at_vertex)):
                pairs.add((at_vertex[a], at_vertex[b]))
    return Graph.from_edges(len(edge_list), pairs, f"L({g.name})" if g.name else "")


def disjoint_union(graphs: Sequence[Graph], name: str = "") -> Graph:
    """Disjoint union; the i-th graph's vertices are shifted by the total order before it."""
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges, name)


def induced_subgraph(g: Graph, vertices: Iterable[int], name: str = "") -> Graph:
    """
    Subgraph induced on ``vertices``, relabeled 0..|U|-1 in sorted order of U.

    Raises:
        PreconditionError: if a vertex is out of range
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} not in graph of order {g.n}")
    index = {v: i for i, v in enumerate(chosen)}
    return Graph.from_edges(
        len(chosen),
        ((index[u], index[v]) for u, v in g.edges if u in index and v in index),
        name,
    )


def remove_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    dropped = {_norm_edge(u, v) for u, v in edges}
    return Graph(g.n, frozenset(e for e in g.edges if e not in dropped), g.name)


def common_neighbourhood(g: Graph, vertices: Iterable[int]) -> FrozenSet[int]:
    vs = list(vertices)
    if not vs:
        return frozenset(range(g.n))
    result = set(g.adj[vs[0]])
    for v in vs[1:]:
        result &= g.adj[v]
    return frozenset(result - set(vs))


def neighbourhood_of_set(g: Graph, vertices: Iterable[int]) -> FrozenSet[int]:
    vs = set(vertices)
    result = set()
    for v in vs:
        result |= g.adj[v]
    return frozenset(result - vs)


def components_of(g: Graph, vertices: Iterable[int]) -> List[List[int]]:
    """Connected components of g[vertices] in original labels."""
    allowed = set(vertices)
    seen = set()
    result = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        stack, comp = [start], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        result.append(sorted(comp))
    return result


