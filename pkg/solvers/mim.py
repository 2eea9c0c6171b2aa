"""Maximum induced matching by exhaustive search over edge subsets."""

from typing import List, Tuple

from loguru import logger

from config.settings import settings
from graphs.graph import Edge, Graph
from utils.errors import GuardExceededError, InvariantError


def is_induced_matching(g: Graph, edges: List[Edge]) -> bool:
    """Edges are pairwise disjoint and no other edge of g joins two of them."""
    covered = [v for e in edges for v in e]
    if len(set(covered)) != len(covered):
        return False
    owner = {v: i for i, e in enumerate(edges) for v in e}
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            return False
    return True


def mim_bruteforce(g: Graph) -> Tuple[int, Tuple[Edge, ...]]:
    """
    Maximum induced matching; among maximum ones, the lexicographically
    smallest sorted edge list.

    Raises:
        GuardExceededError: above settings.MIM_MAX_EDGES edges
    """
    if g.m > settings.MIM_MAX_EDGES:
        raise GuardExceededError(f"brute-force MIM limited to {settings.MIM_MAX_EDGES} edges, got {g.m}")
    edges = g.sorted_edges()
    # Two edges conflict when they share a vertex or an edge of g joins them.
    conflicts = []
    for i, (a, b) in enumerate(edges):
        reach = g.adj[a] | g.adj[b] | {a, b}
        mask = 0
        for j, (c, d) in enumerate(edges):
            if j != i and (c in reach or d in reach):
                mask |= 1 << j
        conflicts.append(mask)

    best: List[Tuple[int, ...]] = [()]
    chosen: List[int] = []

    def extend(i: int, blocked: int) -> None:
        if len(chosen) + (len(edges) - i) <= len(best[0]):
            return
        if i == len(edges):
            best[0] = tuple(chosen)
            return
        if not blocked >> i & 1:
            chosen.append(i)
            extend(i + 1, blocked | conflicts[i])
            chosen.pop()
        extend(i + 1, blocked)

    extend(0, 0)
    matching = tuple(edges[i] for i in best[0])
    if not is_induced_matching(g, list(matching)):
        raise InvariantError(f"brute-force MIM produced a non-induced matching {list(matching)}")
    logger.debug(f"mim on {g!r}: size {len(matching)}")
    return len(matching), matching
