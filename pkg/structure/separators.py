"""
Cut vertices, blocks, small clique cutsets and decomposition by clique
separators into atoms.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
from loguru import logger

from graphs.graph import Graph, components_of, neighbourhood_of_set


def cut_vertices(g: Graph) -> List[int]:
    return sorted(nx.articulation_points(g.to_networkx()))


def biconnected_components(g: Graph) -> List[Tuple[int, ...]]:
    """Blocks with at least one edge, ordered by smallest vertex."""
    return sorted(tuple(sorted(c)) for c in nx.biconnected_components(g.to_networkx()))


def is_cutset(g: Graph, vertices: Iterable[int], within: Optional[Iterable[int]] = None) -> bool:
    """True when removing the set leaves at least two components of g[within]."""
    scope = set(range(g.n)) if within is None else set(within)
    rest = scope - set(vertices)
    return len(components_of(g, rest)) > 1


def clique_cutsets_upto(g: Graph, k: int) -> List[Tuple[int, ...]]:
    """
    Every clique cutset with at most ``k`` vertices, by size then lexicographically.
    The empty set is reported for a disconnected graph.
    """
    result = []
    for size in range(0, k + 1):
        for candidate in combinations(range(g.n), size):
            if g.is_clique(candidate) and is_cutset(g, candidate):
                result.append(candidate)
    return result


def minimal_separators(g: Graph, vertices: Optional[Iterable[int]] = None) -> List[FrozenSet[int]]:
    """
    All minimal separators of g[vertices], generated by closing the
    neighbourhoods of components of G - N[v] under G - (S ∪ N(x)).
    """
    scope = set(range(g.n)) if vertices is None else set(vertices)

    def around(removed: Set[int]) -> List[FrozenSet[int]]:
        found = []
        for comp in components_of(g, scope - removed):
            border = frozenset(neighbourhood_of_set(g, comp) & scope)
            if border:
                found.append(border)
        return found

    seen: Set[FrozenSet[int]] = set()
    queue: List[FrozenSet[int]] = []
    for v in sorted(scope):
        for sep in around(({v} | set(g.adj[v])) & scope):
            if sep not in seen:
                seen.add(sep)
                queue.append(sep)
    for sep in queue:
        for x in sorted(sep):
            for nxt in around(set(sep) | (set(g.adj[x]) & scope)):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def find_clique_separator(g: Graph, vertices: Iterable[int]) -> Optional[Tuple[int, ...]]:
    """Smallest (then lexicographically first) minimal separator of g[vertices] that is a clique."""
    for sep in minimal_separators(g, vertices):
        if g.is_clique(sep):
            return tuple(sorted(sep))
    return None


@dataclass(frozen=True)
class AtomDecomposition:
    """Atoms (pieces without a clique separator) and the separators used to split."""

    atoms: List[Tuple[int, ...]] = field(default_factory=list)
    separators: List[Tuple[int, ...]] = field(default_factory=list)


def clique_separator_atoms(g: Graph) -> AtomDecomposition:
    """
    Split ``g`` recursively on clique separators (the empty one between
    components first) until no piece has one.
    """
    if g.n == 0:
        return AtomDecomposition()
    atoms: List[Tuple[int, ...]] = []
    separators: List[Tuple[int, ...]] = []
    stack = [tuple(range(g.n))]
    while stack:
        piece = stack.pop()
        comps = components_of(g, piece)
        if len(comps) > 1:
            separators.append(())
            stack.extend(tuple(c) for c in reversed(comps))
            continue
        sep = find_clique_separator(g, piece)
        if sep is None:
            atoms.append(tuple(sorted(piece)))
            continue
        separators.append(sep)
        rest = set(piece) - set(sep)
        for comp in reversed(components_of(g, rest)):
            stack.append(tuple(sorted(set(comp) | set(sep))))

    unique = sorted(set(atoms))
    maximal = [a for a in unique if not any(set(a) < set(b) for b in unique)]
    logger.debug(f"Clique-separator decomposition of {g!r}: {len(maximal)} atom(s), {len(separators)} split(s)")
    return AtomDecomposition(maximal, separators)
