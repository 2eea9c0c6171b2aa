"""Maximal cliques and maximal induced bicliques."""

from typing import List, Set, Tuple

import networkx as nx

from graphs.graph import Graph, induced_subgraph

Biclique = Tuple[Tuple[int, ...], Tuple[int, ...]]


def maximal_cliques(g: Graph) -> List[Tuple[int, ...]]:
    """Every maximal clique, each sorted, in lexicographic order."""
    if g.n == 0:
        return []
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx()))


def clique_number(g: Graph) -> int:
    return max((len(c) for c in maximal_cliques(g)), default=0)


def _maximal_independent_sets(g: Graph, vertices: List[int]) -> List[Tuple[int, ...]]:
    sub = induced_subgraph(g, vertices)
    return [
        tuple(sorted(vertices[i] for i in clique))
        for clique in nx.find_cliques(sub.complement().to_networkx())
    ]


def maximal_induced_bicliques(g: Graph, pmin: int = 1, qmin: int = 1) -> List[Biclique]:
    """
    Maximal induced complete bipartite subgraphs (A, B), both parts nonempty
    and independent, with one part of size >= pmin and the other >= qmin.

    Each biclique is reported once, with the part holding the smallest
    vertex first; the list is sorted.

    Enumerates independent sets A whose common neighbourhood can still host
    a part, and for each the maximal independent sets B of that common
    neighbourhood, keeping pairs where A cannot grow either.
    """
    low, high = min(pmin, qmin), max(pmin, qmin)
    low = max(low, 1)
    n = g.n
    masks = g.masks
    everyone = (1 << n) - 1
    found: Set[Biclique] = set()

    def members(mask: int) -> List[int]:
        return [v for v in range(n) if mask >> v & 1]

    def report(A: List[int], common: int) -> None:
        for B in _maximal_independent_sets(g, members(common)):
            if len(B) < low:
                continue
            b_mask = 0
            for b in B:
                b_mask |= 1 << b
            a_mask = 0
            for a in A:
                a_mask |= 1 << a
            growable = False
            for z in range(n):
                bit = 1 << z
                if (a_mask | b_mask) & bit:
                    continue
                if masks[z] & a_mask == 0 and masks[z] & b_mask == b_mask:
                    growable = True
                    break
            if growable:
                continue
            left, right = tuple(A), tuple(B)
            if min(len(left), len(right)) < low or max(len(left), len(right)) < high:
                continue
            pair = (left, right) if left[0] < right[0] else (right, left)
            found.add(pair)

    def grow(A: List[int], blocked: int, common: int, start: int) -> None:
        if A:
            report(A, common)
        for u in range(start, n):
            bit = 1 << u
            if blocked & bit:
                continue
            nxt_common = common & masks[u]
            if bin(nxt_common).count("1") < low:
                continue
            A.append(u)
            grow(A, blocked | masks[u] | bit, nxt_common, u + 1)
            A.pop()

    grow([], 0, everyone, 0)
    return sorted(found)
