"""
Self-intersection witnesses: evaluation, verification and the generic
constructions (induced restriction, per-vertex local embeddings, composition).
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from graphs.graph import Embedding, EmbeddingMode, Graph, induced_subgraph
from graphs.matching import is_isomorphic
from utils.checks import CheckResult
from utils.errors import InvariantError, PreconditionError
from .labeled import LabeledGraph, VertexMap, apply_map, intersect_all


@dataclass(frozen=True)
class SiWitness:
    """
    Checkable proof that ``claimed`` is a self-intersection of ``host``:
    the intersection of the copies of ``host`` placed by ``maps`` is
    isomorphic to ``claimed``.
    """

    host: Graph
    maps: Tuple[VertexMap, ...]
    claimed: Graph

    def __post_init__(self):
        if not self.maps:
            raise PreconditionError("a witness needs at least one vertex map")
        for i, alpha in enumerate(self.maps):
            if alpha.n != self.host.n:
                raise PreconditionError(
                    f"map {i} is defined on {alpha.n} vertices, host has {self.host.n}"
                )

    @property
    def k(self) -> int:
        return len(self.maps)


class LabelAllocator:
    """Hands out fresh labels from a counter; never reuses one."""

    def __init__(self, start: int):
        self.next_label = start

    def fresh(self) -> int:
        label = self.next_label
        self.next_label += 1
        return label


def place_copy(n: int, placement: Mapping[int, int], allocator: LabelAllocator) -> VertexMap:
    """
    Vertex map sending each host vertex in ``placement`` to its label and
    every other host vertex to a fresh label.
    """
    return VertexMap(tuple(
        placement[v] if v in placement else allocator.fresh() for v in range(n)
    ))


def identity_witness(g: Graph) -> SiWitness:
    return SiWitness(g, (VertexMap.identity(g.n),), g)


def evaluate_labeled(w: SiWitness) -> LabeledGraph:
    return intersect_all(apply_map(w.host, alpha) for alpha in w.maps)


def evaluate_witness(w: SiWitness) -> Graph:
    """Intersection of all placed copies, relabeled to 0..h-1 in sorted label order."""
    return evaluate_labeled(w).normalize()


def verify_witness(w: SiWitness) -> CheckResult:
    """
    Check that the evaluated intersection is isomorphic to the claimed graph.

    Returns:
        CheckResult whose diagnostic names the first failing comparison
    """
    result = evaluate_witness(w)
    claimed = w.claimed
    if result.n != claimed.n:
        return CheckResult.failed(f"order mismatch: evaluated {result.n} vertices, claimed {claimed.n}")
    if result.m != claimed.m:
        return CheckResult.failed(f"size mismatch: evaluated {result.m} edges, claimed {claimed.m}")
    if result.degree_sequence() != claimed.degree_sequence():
        return CheckResult.failed(
            f"degree sequence mismatch: evaluated {list(result.degree_sequence())}, "
            f"claimed {list(claimed.degree_sequence())}"
        )
    if is_isomorphic(result, claimed) is None:
        return CheckResult.failed("evaluated intersection is not isomorphic to the claimed graph")
    return CheckResult.passed()


def ensure_verified(w: SiWitness, what: str) -> SiWitness:
    """Raise InvariantError unless ``w`` verifies."""
    check = verify_witness(w)
    if not check:
        logger.error(f"{what} produced an unverified witness: {check.diagnostic}")
        raise InvariantError(f"{what}: witness failed verification ({check.diagnostic})")
    logger.debug(f"{what}: verified witness with {w.k} copies")
    return w


def _universe_max(w: SiWitness) -> int:
    return max(alpha.max_label() for alpha in w.maps)


def restrict_witness(w: SiWitness, keep: Iterable[int], claimed: Optional[Graph] = None) -> SiWitness:
    """
    Extend ``w`` so its intersection is restricted to the labels ``keep``.

    For each label to drop, adds a copy of the first map with the host vertex
    carrying that label moved to a fresh label.

    Args:
        w: Witness to extend
        keep: Labels of the current intersection to retain
        claimed: Claimed result; defaults to the restricted intersection
    """
    current = evaluate_labeled(w)
    keep = set(keep)
    if not keep <= current.vertices:
        raise PreconditionError(f"labels {sorted(keep - current.vertices)} are not in the intersection")
    base = w.maps[0]
    owner = {label: v for v, label in enumerate(base.image)}
    allocator = LabelAllocator(_universe_max(w) + 1)
    extra: List[VertexMap] = []
    for label in sorted(current.vertices - keep):
        image = list(base.image)
        image[owner[label]] = allocator.fresh()
        extra.append(VertexMap(tuple(image)))
    if claimed is None:
        restricted = LabeledGraph(
            frozenset(keep),
            frozenset(e for e in current.edges if e[0] in keep and e[1] in keep),
        )
        claimed = restricted.normalize()
    return SiWitness(w.host, w.maps + tuple(extra), claimed)


def witness_induced(g: Graph, vertices: Iterable[int]) -> SiWitness:
    """
    Witness that G[U] is a self-intersection of G.

    The identity copy plus, for each vertex outside U, a copy moving that
    vertex to a fresh label.
    """
    chosen = sorted(set(vertices))
    claimed = induced_subgraph(g, chosen)
    if len(chosen) == g.n:
        return identity_witness(g)
    return ensure_verified(
        restrict_witness(identity_witness(g), chosen, claimed),
        "witness_induced",
    )


def witness_from_local_embeddings(
    h: Graph,
    target: Graph,
    embeddings: Sequence[Embedding],
) -> SiWitness:
    """
    Witness that ``target`` is a self-intersection of ``h`` from one
    embedding of ``target`` into ``h`` per target vertex, each induced with
    respect to that vertex.

    Each embedding becomes a copy of ``h`` whose embedded vertices carry the
    target labels and whose other vertices get fresh labels.

    Raises:
        PreconditionError: an embedding is missing or fails validation
    """
    if len(embeddings) != target.n:
        raise PreconditionError(f"expected {target.n} local embeddings, got {len(embeddings)}")
    for v, embedding in enumerate(embeddings):
        local = Embedding(embedding.mapping, EmbeddingMode.INDUCED_AT, frozenset([v]))
        check = local.check(target, h)
        if not check:
            raise PreconditionError(f"embedding for target vertex {v} is invalid: {check.diagnostic}")

    return witness_from_placements(h, target, [e.mapping for e in embeddings], "witness_from_local_embeddings")


def witness_from_placements(
    h: Graph,
    target: Graph,
    placements: Iterable[Union[Mapping[int, int], Sequence[int]]],
    what: str = "witness_from_placements",
) -> SiWitness:
    """
    Lift partial placements of the target labels into copies of ``h``.

    Each placement sends target vertices (keys, or positions for a sequence)
    to host vertices; the copy gives those host vertices the target labels
    and every other host vertex a fresh label. Duplicate placements are
    merged and a single one is used twice.
    """
    allocator = LabelAllocator(target.n)
    by_host: List[Dict[int, int]] = []
    for placement in placements:
        items = placement.items() if isinstance(placement, Mapping) else enumerate(placement)
        inverse = {host_v: target_v for target_v, host_v in items}
        if inverse not in by_host:
            by_host.append(inverse)
    if not by_host:
        by_host.append({})
    if len(by_host) == 1:
        by_host.append(by_host[0])
    maps = tuple(place_copy(h.n, inverse, allocator) for inverse in by_host)
    return ensure_verified(SiWitness(h, maps, target), what)


def compose_witness(w1: SiWitness, w2: SiWitness) -> SiWitness:
    """
    Transitivity: from G ->∩ M (``w1``) and M ->∩ F (``w2``) build G ->∩ F.

    Each map of ``w2`` is extended injectively over the labels used by
    ``w1``; the composite family is every extended map after every map of
    ``w1``.

    Raises:
        PreconditionError: if the result of ``w1`` is not isomorphic to ``w2.host``
    """
    inner = evaluate_labeled(w1)
    labels = inner.sorted_labels()
    sigma = is_isomorphic(inner.normalize(), w2.host)
    if sigma is None:
        raise PreconditionError("hosts fail to align: first witness result is not isomorphic to second host")

    universe = sorted(set().union(*(alpha.image for alpha in w1.maps)))
    core = {label: sigma[i] for i, label in enumerate(labels)}
    outside = [label for label in universe if label not in core]
    base = _universe_max(w2) + 1
    extension = {label: base + i for i, label in enumerate(outside)}

    maps = []
    seen = set()
    for beta in w2.maps:
        def lift(label: int) -> int:
            return beta[core[label]] if label in core else extension[label]
        for alpha in w1.maps:
            image = tuple(lift(label) for label in alpha.image)
            if image not in seen:
                seen.add(image)
                maps.append(VertexMap(image))
    composed = SiWitness(w1.host, tuple(maps), w2.claimed)
    return ensure_verified(composed, "compose_witness")


def chain_witnesses(*witnesses: SiWitness) -> SiWitness:
    """Compose a sequence G0 ->∩ G1 ->∩ ... ->∩ Gk left to right."""
    if not witnesses:
        raise PreconditionError("chain_witnesses needs at least one witness")
    result = witnesses[0]
    for nxt in witnesses[1:]:
        result = compose_witness(result, nxt)
    return result
