"""
Deciding G ->∩ H.

``si_oracle`` uses placed patterns: a witness's intersection on h vertices is
fixed, per copy, by the pattern the copy induces on the common core, and any
family of placed patterns lifts to full copies by giving every vertex outside
the core a fresh label. So H is a self-intersection of G exactly when H ≅ G,
or the placed patterns of G that contain H (as a spanning subgraph on the
target labels) have intersection H.

``si_oracle_naive`` enumerates families of maps directly and is the
cross-check for the derived method.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial
from typing import Dict, FrozenSet, List, Optional, Tuple

from loguru import logger

from config.settings import settings
from graphs.graph import Edge, Embedding, EmbeddingMode, Graph
from graphs.matching import find_embedding, is_isomorphic, iter_embeddings
from utils.errors import GuardExceededError, InvariantError
from .labeled import VertexMap
from .witness import LabelAllocator, SiWitness, ensure_verified, place_copy


@dataclass(frozen=True)
class PlacedPattern:
    """
    The pattern G[U] carried onto target labels 0..h-1.

    ``source[j]`` is the vertex of G placed on target label ``j``; ``edges``
    are the target-label pairs whose sources are adjacent in G.
    """

    size: int
    source: Tuple[int, ...]
    edges: FrozenSet[Edge]

    @classmethod
    def from_embedding(cls, g: Graph, embedding: Embedding) -> "PlacedPattern":
        src = embedding.mapping
        edges = frozenset(
            (a, b)
            for a in range(len(src))
            for b in range(a + 1, len(src))
            if g.has_edge(src[a], src[b])
        )
        return cls(len(src), tuple(src), edges)

    def bijection(self) -> Dict[int, int]:
        """Map from source vertices U to target labels."""
        return {v: j for j, v in enumerate(self.source)}


def oracle_cost(n: int, h: int) -> int:
    """Number of placed patterns of size h in a graph of order n: C(n,h)·h!."""
    if h > n:
        return 0
    return comb(n, h) * factorial(h)


def lift_patterns(g: Graph, h: Graph, patterns: List[PlacedPattern]) -> SiWitness:
    """
    Turn placed patterns into full copies of ``g``; vertices outside a
    pattern get fresh labels distinct per copy. A single pattern is placed twice.
    """
    if len(patterns) == 1:
        patterns = patterns * 2
    allocator = LabelAllocator(max(g.n, h.n))
    maps = tuple(place_copy(g.n, p.bijection(), allocator) for p in patterns)
    return SiWitness(g, maps, h)


def si_oracle(g: Graph, h: Graph, cap: Optional[int] = None) -> Tuple[bool, Optional[SiWitness]]:
    """
    Decide whether ``h`` is a self-intersection of ``g`` (up to isomorphism).

    Args:
        g: Host graph
        h: Candidate si-subgraph
        cap: Guard on C(n,h)·h!; defaults to settings.SI_ORACLE_CAP

    Returns:
        (answer, witness) where witness is a verified SiWitness when the answer is true

    Raises:
        GuardExceededError: if the pattern count exceeds the cap
    """
    cap = settings.SI_ORACLE_CAP if cap is None else cap
    if h.n > g.n:
        return False, None
    if is_isomorphic(g, h) is not None:
        return True, SiWitness(g, (VertexMap.identity(g.n),), h)
    cost = oracle_cost(g.n, h.n)
    if cost > cap:
        raise GuardExceededError(f"si oracle needs {cost} placed patterns, cap is {cap}")

    non_edges = {
        (a, b) for a in range(h.n) for b in range(a + 1, h.n) if not h.has_edge(a, b)
    }
    remaining = set(non_edges)
    chosen: List[PlacedPattern] = []
    examined = 0
    for embedding in iter_embeddings(h, g, EmbeddingMode.SUBGRAPH):
        examined += 1
        pattern = PlacedPattern.from_embedding(g, embedding)
        killed = {pair for pair in remaining if pair not in pattern.edges}
        if not chosen or killed:
            chosen.append(pattern)
            remaining -= killed
        if not remaining:
            break

    if not chosen or remaining:
        logger.debug(
            f"si_oracle({g!r}, {h!r}) = false after {examined} patterns, "
            f"{len(remaining)} non-edge(s) never removed"
        )
        return False, None

    witness = lift_patterns(g, h, chosen)
    logger.debug(f"si_oracle({g!r}, {h!r}) = true using {len(chosen)} pattern(s) of {examined}")
    return True, ensure_verified(witness, "si_oracle")


def si_check(g: Graph, h: Graph, cap: Optional[int] = None) -> bool:
    return si_oracle(g, h, cap)[0]


def _bucket_key(graph: Graph) -> Tuple:
    return graph.n, graph.m, graph.degree_sequence()


def si_oracle_naive(g: Graph, h: Graph, max_copies: int, universe: int) -> bool:
    """
    Bounded direct search: is some intersection of at most ``max_copies``
    copies of ``g``, placed by injective maps into 0..universe-1,
    isomorphic to ``h``?

    The first copy is fixed to the identity. A state is the current
    intersection on labels; placing another copy chooses which current
    labels T it keeps and which vertex of ``g`` lands on each of them, the
    other vertices of ``g`` going to unused labels (possible while
    n - |T| <= universe - |state|). States are explored level by level and
    merged up to isomorphism, since what a state can still reach depends
    only on its isomorphism type.

    Raises:
        GuardExceededError: if more than settings.NAIVE_STEP_CAP transitions are needed
    """
    n = g.n
    if h.n > n or universe < n or max_copies < 1:
        return False
    if is_isomorphic(g, h) is not None:
        return True

    seen: Dict[Tuple, List[Graph]] = {_bucket_key(g): [g]}
    labeled_seen = {(g.n, g.edges)}
    frontier = [g]
    steps = 0

    def is_new(state: Graph) -> bool:
        if (state.n, state.edges) in labeled_seen:
            return False
        labeled_seen.add((state.n, state.edges))
        bucket = seen.setdefault(_bucket_key(state), [])
        if any(is_isomorphic(state, other) is not None for other in bucket):
            return False
        bucket.append(state)
        return True

    for level in range(2, max_copies + 1):
        next_frontier: List[Graph] = []
        for state in frontier:
            k = state.n
            for size in range(h.n, k + 1):
                if n - size > universe - k:
                    continue
                for kept in combinations(range(k), size):
                    for sources in permutations(range(n), size):
                        steps += 1
                        if steps > settings.NAIVE_STEP_CAP:
                            raise GuardExceededError(
                                f"naive si oracle exceeded {settings.NAIVE_STEP_CAP} steps"
                            )
                        edges = [
                            (i, j)
                            for i in range(size)
                            for j in range(i + 1, size)
                            if state.has_edge(kept[i], kept[j]) and g.has_edge(sources[i], sources[j])
                        ]
                        if len(edges) < h.m:
                            continue
                        candidate = Graph(size, frozenset(edges))
                        if size == h.n and len(edges) == h.m and is_isomorphic(candidate, h) is not None:
                            logger.debug(f"si_oracle_naive: reached {h!r} with {level} copies")
                            return True
                        if not is_new(candidate):
                            continue
                        if find_embedding(h, candidate, EmbeddingMode.SUBGRAPH) is not None:
                            next_frontier.append(candidate)
        frontier = next_frontier
        if not frontier:
            break
    logger.debug(f"si_oracle_naive: no family of <= {max_copies} copies reaches {h!r} ({steps} steps)")
    return False


def naive_copy_bound(h: Graph) -> int:
    """
    Copies that always suffice when H is a self-intersection: one placed
    pattern per non-edge of H removes that pair, and two copies already
    drop every label outside the core. Taking the first copy as the
    identity costs nothing, so max(2, non-edges of H) copies are enough.
    """
    return max(2, comb(h.n, 2) - h.m)


def check_oracle_agreement(g: Graph, h: Graph) -> bool:
    """
    Run both oracles and raise on disagreement. The naive search gets
    ``naive_copy_bound(h)`` copies and a universe of 2n labels, enough for
    the current intersection plus one copy's fresh labels.
    """
    derived = si_check(g, h)
    naive = si_oracle_naive(g, h, max_copies=naive_copy_bound(h), universe=2 * g.n)
    if derived != naive:
        raise InvariantError(f"oracles disagree on ({g!r}, {h!r}): derived={derived}, naive={naive}")
    return derived
