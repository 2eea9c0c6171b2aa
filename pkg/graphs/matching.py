"""
Embedding search and isomorphism.

The embedding search is an exact backtracking matcher over adjacency
bitmasks: pattern vertices are placed in a fixed order (vertices of the
induced-at set first, then the vertex with the most placed neighbours), and
candidates are the host vertices adjacent to the images of all placed
neighbours and, where the induced condition applies, non-adjacent to the
images of placed non-neighbours.
"""

from typing import Collection, Iterator, List, Optional, Tuple

import networkx as nx
from loguru import logger

from config.settings import settings
from utils.errors import GuardExceededError
from .graph import Embedding, EmbeddingMode, Graph


def _search_order(pattern: Graph, at: Collection[int]) -> List[int]:
    order: List[int] = []
    placed = set()
    remaining = set(range(pattern.n))
    for v in sorted(at):
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    while remaining:
        best = max(
            remaining,
            key=lambda v: (len(pattern.adj[v] & placed), pattern.degree(v), -v),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


class _Matcher:
    """One search over a fixed (pattern, host, mode) triple."""

    def __init__(self, pattern: Graph, host: Graph, mode: EmbeddingMode,
                 at: Collection[int], budget: Optional[int]):
        self.pattern = pattern
        self.host = host
        self.mode = mode
        self.at = frozenset(at)
        self.budget = budget
        self.nodes = 0
        self.order = _search_order(pattern, self.at)

        # For each step: placed neighbours and placed vertices that must map to non-neighbours.
        self.plan: List[Tuple[int, List[int], List[int]]] = []
        for i, u in enumerate(self.order):
            earlier = self.order[:i]
            nbrs = [w for w in earlier if pattern.has_edge(u, w)]
            strict = [
                w for w in earlier
                if not pattern.has_edge(u, w) and self._needs_nonedge(u, w)
            ]
            self.plan.append((u, nbrs, strict))
        self.host_degrees = [host.degree(v) for v in range(host.n)]

    def _needs_nonedge(self, u: int, w: int) -> bool:
        if self.mode is EmbeddingMode.INDUCED:
            return True
        if self.mode is EmbeddingMode.INDUCED_AT:
            return u in self.at or w in self.at
        return False

    def run(self) -> Iterator[Embedding]:
        if self.pattern.n > self.host.n:
            return
        image = [-1] * self.pattern.n
        yield from self._extend(0, image, 0)

    def _extend(self, depth: int, image: List[int], used: int) -> Iterator[Embedding]:
        if depth == len(self.plan):
            yield Embedding(tuple(image), self.mode, self.at)
            return
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise GuardExceededError(f"embedding search exceeded its budget of {self.budget} nodes")

        u, nbrs, strict = self.plan[depth]
        masks = self.host.masks
        candidates = ((1 << self.host.n) - 1) & ~used
        for w in nbrs:
            candidates &= masks[image[w]]
        for w in strict:
            candidates &= ~masks[image[w]]
        if not candidates:
            return

        need = self.pattern.degree(u)
        options = []
        while candidates:
            low = candidates & -candidates
            x = low.bit_length() - 1
            candidates ^= low
            if self.host_degrees[x] >= need:
                options.append(x)
        options.sort(key=lambda x: (self.host_degrees[x] - need, x))

        for x in options:
            image[u] = x
            yield from self._extend(depth + 1, image, used | (1 << x))
        image[u] = -1


def iter_embeddings(
    pattern: Graph,
    host: Graph,
    mode: EmbeddingMode = EmbeddingMode.SUBGRAPH,
    at: Collection[int] = (),
    budget: Optional[int] = None,
) -> Iterator[Embedding]:
    """
    Enumerate every embedding of ``pattern`` into ``host`` of the given mode.

    Args:
        pattern: Graph to place
        host: Graph to place into
        mode: subgraph, induced or induced-at
        at: Vertex set S for the induced-at mode
        budget: Optional cap on search nodes

    Yields:
        Embedding objects in a deterministic order

    Raises:
        GuardExceededError: if the node budget is exhausted
    """
    if mode is not EmbeddingMode.INDUCED_AT:
        at = ()
    return _Matcher(pattern, host, mode, at, budget).run()


def find_embedding(
    pattern: Graph,
    host: Graph,
    mode: EmbeddingMode = EmbeddingMode.SUBGRAPH,
    at: Collection[int] = (),
    budget: Optional[int] = None,
) -> Optional[Embedding]:
    """First embedding of the requested mode, or None when there is none."""
    for embedding in iter_embeddings(pattern, host, mode, at, budget):
        return embedding
    return None


def is_isomorphic(g: Graph, h: Graph) -> Optional[Tuple[int, ...]]:
    """
    Explicit isomorphism test.

    Returns:
        Tuple ``phi`` with ``phi[v]`` the image in ``h`` of vertex ``v`` of
        ``g``, or None if the graphs are not isomorphic
    """
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    if g.n > settings.ISOMORPHISM_MAX_ORDER:
        raise GuardExceededError(
            f"isomorphism test limited to {settings.ISOMORPHISM_MAX_ORDER} vertices, got {g.n}"
        )
    if g.n == 0:
        return ()
    if g == h:
        return tuple(range(g.n))
    mapping = nx.vf2pp_isomorphism(g.to_networkx(), h.to_networkx())
    if mapping is None:
        return None
    phi = tuple(mapping[v] for v in range(g.n))
    logger.debug(f"Isomorphism found between {g!r} and {h!r}")
    return phi
