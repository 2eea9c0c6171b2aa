"""Witnesses around large cliques: the clique-three-paths construction and clique peeling."""

from typing import Dict, Iterable, List, Sequence, Set, Tuple

from loguru import logger

from config.settings import settings
from graphs.generators import tripod_forest
from graphs.graph import Embedding, EmbeddingMode, Graph
from graphs.matching import find_embedding
from si_engine.witness import SiWitness, witness_from_local_embeddings
from utils.errors import GuardExceededError, InvariantError
from .biclique import witness_peel
from .instances import CliqueThreePathInstance
from .tripods import SpiderComponent, component_of, outward_path, spider_components, subtree_order


class _Placer:
    """Assigns tripod vertices to host vertices, drawing free ones from a clique pool."""

    def __init__(self, pool: Iterable[int]):
        self.pool = sorted(pool)
        self.image: Dict[int, int] = {}
        self.used: Set[int] = set()

    def put(self, u: int, host_v: int) -> None:
        self.image[u] = host_v
        self.used.add(host_v)

    def put_free(self, u: int) -> None:
        for c in self.pool:
            if c not in self.used:
                self.put(u, c)
                return
        raise InvariantError("clique pool exhausted while placing a tripod forest")


def _explicit_clique_embedding(
    inst: CliqueThreePathInstance,
    target: Graph,
    comps: List[SpiderComponent],
    v: int,
) -> Tuple[int, ...]:
    """
    Embedding of the tripod forest induced with respect to ``v``.

    degree 3: v on the hub, legs along Q1, Q2, Q3 and on into the clique;
    degree 2: v next to y1 on Q1, its outer leg back along Q1 and out along
    Q2, avoiding Q3; degree 1: v next to y1 on Q1, everything else in the
    clique away from y2 and y3.
    """
    A = set(inst.A)
    q1, q2, q3 = inst.Q
    y1, y2, y3 = inst.ends
    comp = component_of(comps, v)
    degree = target.degree(v)

    if degree >= 3:
        placer = _Placer(A)
        placer.put(v, inst.w)
        for start, q in zip(comp.children(target, v), inst.Q):
            for i, u in enumerate(outward_path(target, comp, start), start=1):
                if i < len(q):
                    placer.put(u, q[i])
                else:
                    placer.put_free(u)
    elif degree == 2:
        placer = _Placer(A - {y3})
        x = comp.parent[v]
        placer.put(v, q1[-2])
        placer.put(x, y1)
        walk = list(reversed(q1[:-1])) + list(q2[1:])
        leg = outward_path(target, comp, v)
        for i, u in enumerate(leg[1:], start=1):
            if i < len(walk):
                placer.put(u, walk[i])
            else:
                placer.put_free(u)
        for u, _ in subtree_order(target, comp, x, set(leg)):
            placer.put_free(u)
    else:
        placer = _Placer(A - {y2, y3})
        x = comp.parent[v]
        placer.put(v, q1[-2])
        placer.put(x, y1)
        for u, _ in subtree_order(target, comp, x, {v}):
            placer.put_free(u)

    for other in comps:
        if other is comp:
            continue
        for u in other.vertices:
            placer.put_free(u)
    return tuple(placer.image[u] for u in range(target.n))


def witness_clique_three_paths(inst: CliqueThreePathInstance) -> SiWitness:
    """
    Witness that tS_{t,t,t} is a self-intersection of a clique-three-paths
    instance, from one embedding per tripod vertex induced with respect to
    that vertex.

    Raises:
        PreconditionError: if the instance violates a condition
    """
    inst.validate()
    h = inst.graph
    target = tripod_forest(inst.t)
    comps = spider_components(target)
    embeddings = []
    for v in range(target.n):
        mapping = _explicit_clique_embedding(inst, target, comps, v)
        local = Embedding(mapping, EmbeddingMode.INDUCED_AT, frozenset([v]))
        if not local.check(target, h):
            logger.warning(f"Explicit placement for tripod vertex {v} failed, searching instead")
            try:
                local = find_embedding(
                    target, h, EmbeddingMode.INDUCED_AT, (v,),
                    budget=settings.EMBEDDING_SEARCH_BUDGET,
                )
            except GuardExceededError:
                local = None
            if local is None:
                raise InvariantError(f"no induced-at-{v} embedding of {target!r} into {h!r}")
        embeddings.append(local)
    witness = witness_from_local_embeddings(h, target, embeddings)
    logger.info(f"Clique-three-paths witness for t={inst.t}: {witness.k} copies of {h!r}")
    return witness


def witness_clique_plus_vertex(h: Graph, A: Sequence[int], v: int, keep: Iterable[int]) -> SiWitness:
    """Peel the edges from ``v`` to clique vertices outside ``keep`` (clique A, no B)."""
    return witness_peel(h, A, (), v, keep)
