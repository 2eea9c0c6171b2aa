"""
Tree decompositions: the container, its validator, and decompositions read
off an elimination ordering.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

import networkx as nx

from graphs.graph import Graph
from utils.checks import CheckResult


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed 0..k-1 and the edges of the tree over them."""

    bags: Tuple[FrozenSet[int], ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def adjacency(self) -> List[List[int]]:
        result: List[List[int]] = [[] for _ in self.bags]
        for a, b in self.edges:
            result[a].append(b)
            result[b].append(a)
        return [sorted(r) for r in result]

    @classmethod
    def from_networkx(cls, tree: nx.Graph) -> "TreeDecomposition":
        """Convert a networkx decomposition whose nodes are frozenset bags."""
        nodes = sorted(tree.nodes(), key=lambda bag: (sorted(bag), len(bag)))
        index = {bag: i for i, bag in enumerate(nodes)}
        edges = sorted(tuple(sorted((index[a], index[b]))) for a, b in tree.edges())
        return cls(tuple(frozenset(b) for b in nodes), tuple(edges)).connected()

    def connected(self) -> "TreeDecomposition":
        """Join the components of a forest decomposition into one tree."""
        if not self.bags:
            return self
        parent = list(range(len(self.bags)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in self.edges:
            parent[find(a)] = find(b)
        roots = sorted({find(i) for i in range(len(self.bags))})
        if len(roots) == 1:
            return self
        extra = tuple((roots[i], roots[i + 1]) for i in range(len(roots) - 1))
        return TreeDecomposition(self.bags, self.edges + extra)


def empty_decomposition() -> TreeDecomposition:
    return TreeDecomposition((frozenset(),), ())


def validate_decomposition(g: Graph, td: TreeDecomposition) -> CheckResult:
    """
    Check the tree shape, vertex and edge coverage, and that the bags
    holding each vertex form a connected subtree.
    """
    k = len(td.bags)
    if k == 0:
        return CheckResult.failed("decomposition has no bags")
    for i, bag in enumerate(td.bags):
        if any(not 0 <= v < g.n for v in bag):
            return CheckResult.failed(f"bag {i} holds a vertex outside the graph")
    for a, b in td.edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            return CheckResult.failed(f"tree edge ({a},{b}) is invalid")
    if len(set(tuple(sorted(e)) for e in td.edges)) != k - 1:
        return CheckResult.failed(f"{k} bags need exactly {k - 1} distinct tree edges")
    adjacency = td.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in adjacency[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != k:
        return CheckResult.failed("decomposition tree is not connected")

    holding: Dict[int, Set[int]] = {v: set() for v in range(g.n)}
    for i, bag in enumerate(td.bags):
        for v in bag:
            holding[v].add(i)
    for v in range(g.n):
        if not holding[v]:
            return CheckResult.failed(f"vertex {v} is in no bag")
    for u, v in g.sorted_edges():
        if not holding[u] & holding[v]:
            return CheckResult.failed(f"edge ({u},{v}) is in no bag")
    for v, bags in holding.items():
        start = min(bags)
        reached = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in adjacency[i]:
                if j in bags and j not in reached:
                    reached.add(j)
                    stack.append(j)
        if reached != bags:
            return CheckResult.failed(f"bags holding vertex {v} are not connected")
    return CheckResult.passed()


def decomposition_from_order(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """
    Decomposition from an elimination ordering: each vertex's bag is itself
    plus its later neighbours in the fill graph, attached to the bag of the
    earliest of those neighbours.
    """
    if g.n == 0:
        return empty_decomposition()
    position = {v: i for i, v in enumerate(order)}
    neighbours = [set(g.adj[v]) for v in range(g.n)]
    bags: List[FrozenSet[int]] = []
    later: List[Set[int]] = []
    for v in order:
        higher = {u for u in neighbours[v] if position[u] > position[v]}
        for a in higher:
            neighbours[a] |= higher - {a}
        bags.append(frozenset(higher | {v}))
        later.append(higher)
    edges = []
    for i, v in enumerate(order):
        if later[i]:
            j = min(position[u] for u in later[i])
            edges.append((i, j))
    return TreeDecomposition(tuple(bags), tuple(edges)).connected()
