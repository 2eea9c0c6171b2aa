"""
Witnesses around bicliques: the biclique-path construction, peeling a
vertex's neighbours in a module, X_p / Y_p down to tripod forests, and the
biclique-plus-vertex case analysis.
"""

from typing import Dict, Iterable, List, Literal, Optional, Sequence, Set, Tuple

from loguru import logger

from config.settings import settings
from graphs.generators import tripod_forest, x_graph, y_graph
from graphs.graph import EmbeddingMode, Graph, induced_subgraph, remove_edges
from graphs.matching import find_embedding
from si_engine.labeled import VertexMap
from si_engine.witness import (
    SiWitness,
    chain_witnesses,
    ensure_verified,
    evaluate_labeled,
    witness_from_placements,
    witness_induced,
)
from utils.errors import GuardExceededError, InvariantError, PreconditionError
from .instances import BicliquePathInstance, biclique_size, relabel_instance_map
from .tripods import SpiderComponent, component_of, outward_path, spider_components, subtree_order

BicliqueTag = Literal["X", "Y"]


def _fail(condition: int, message: str) -> None:
    raise PreconditionError(message, condition=condition)


def _first_unused(candidates: Iterable[int], used: Set[int]) -> int:
    for c in candidates:
        if c not in used:
            return c
    raise InvariantError("ran out of free host vertices while placing a tripod forest")


def biclique_parts(g: Graph, vertices: Iterable[int]) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Parts (A, B) when g[vertices] is a complete bipartite graph with both
    parts nonempty; A holds the smallest vertex. None otherwise.
    """
    vs = sorted(set(vertices))
    if len(vs) < 2:
        return None
    first = vs[0]
    B = tuple(u for u in vs if g.has_edge(first, u))
    A = tuple(u for u in vs if not g.has_edge(first, u))
    if not B or not g.is_independent(A) or not g.is_independent(B):
        return None
    if any(not g.has_edge(a, b) for a in A for b in B):
        return None
    return A, B


# ---------------------------------------------------------------------------
# Biclique plus path


def _explicit_path_embedding(
    inst: BicliquePathInstance,
    target: Graph,
    comps: List[SpiderComponent],
    v: int,
) -> Tuple[int, ...]:
    """
    Embedding of the tripod forest induced with respect to ``v``: v sits on
    the anchor, its neighbour towards the center on the anchor's neighbour
    in A ∪ B, its outer leg runs along the path and then alternates between
    the parts; everything else goes into the biclique by parity.
    """
    h = inst.graph
    A, B = set(inst.A), set(inst.B)
    side = {a: 0 for a in A}
    side.update({b: 1 for b in B})
    pools = (sorted(A), sorted(B))
    star = inst.anchor_neighbour()

    comp = component_of(comps, v)
    w = comp.parent[v]
    image: Dict[int, int] = {v: inst.x, w: star}
    used = {inst.x, star}

    leg = outward_path(target, comp, v)
    prev = inst.x
    for i, u in enumerate(leg[1:], start=1):
        if i < len(inst.C):
            image[u] = inst.C[i]
        elif prev == inst.y:
            image[u] = _first_unused(sorted((h.adj[inst.y] & (A | B)) - {star}), used)
        else:
            image[u] = _first_unused(pools[1 - side[prev]], used)
        used.add(image[u])
        prev = image[u]

    for u, par in subtree_order(target, comp, w, set(leg)):
        image[u] = _first_unused(pools[1 - side[image[par]]], used)
        used.add(image[u])

    for other in comps:
        if other is comp:
            continue
        free = [len([x for x in pool if x not in used]) for pool in pools]
        root_part = 0 if free[0] >= free[1] else 1
        image[other.center] = _first_unused(pools[root_part], used)
        used.add(image[other.center])
        for u, par in subtree_order(target, other, other.center, set()):
            image[u] = _first_unused(pools[1 - side[image[par]]], used)
            used.add(image[u])

    return tuple(image[u] for u in range(target.n))


def _local_embedding(
    inst: BicliquePathInstance,
    target: Graph,
    comps: List[SpiderComponent],
    v: int,
    search: bool,
) -> Tuple[int, ...]:
    if search:
        try:
            found = find_embedding(
                target, inst.graph, EmbeddingMode.INDUCED_AT, (v,),
                budget=settings.CONSTRUCTION_SEARCH_BUDGET,
            )
        except GuardExceededError:
            found = None
            logger.warning(f"Embedding search for tripod vertex {v} hit its budget, using the explicit placement")
        if found is not None:
            return found.mapping
    return _explicit_path_embedding(inst, target, comps, v)


def _part_swap_placements(inst: BicliquePathInstance, comps: List[SpiderComponent]) -> List[Dict[int, int]]:
    """
    The all-in-the-biclique placement (center sides on A, far sides on B)
    and one placement per component with that component's sides swapped.
    """
    pool_a, pool_b = sorted(inst.A), sorted(inst.B)

    def place(on_a: List[int], on_b: List[int]) -> Dict[int, int]:
        placement = {u: pool_a[i] for i, u in enumerate(sorted(on_a))}
        placement.update({u: pool_b[i] for i, u in enumerate(sorted(on_b))})
        return placement

    near = {id(c): c.center_side() for c in comps}
    far = {id(c): c.far_side() for c in comps}
    all_near = [u for c in comps for u in near[id(c)]]
    all_far = [u for c in comps for u in far[id(c)]]
    placements = [place(all_near, all_far)]
    for comp in comps:
        swapped_a = [u for u in all_near if u not in near[id(comp)]] + far[id(comp)]
        swapped_b = [u for u in all_far if u not in far[id(comp)]] + near[id(comp)]
        placements.append(place(swapped_a, swapped_b))
    return placements


def witness_biclique_path(inst: BicliquePathInstance, search: bool = True) -> SiWitness:
    """
    Witness that tS_{t,t,t} is a self-intersection of a biclique-path instance.

    One copy per tripod vertex of degree at most 2, placed by an embedding
    induced with respect to that vertex, plus the part-swap copies that
    remove every edge between different tripods.

    Args:
        inst: Validated biclique-path instance
        search: Try the embedding search before the explicit placement

    Raises:
        PreconditionError: if the instance violates a condition
    """
    inst.validate()
    target = tripod_forest(inst.t)
    comps = spider_components(target)
    placements: List = []
    for v in range(target.n):
        if target.degree(v) <= 2:
            placements.append(_local_embedding(inst, target, comps, v, search))
    placements.extend(_part_swap_placements(inst, comps))
    witness = witness_from_placements(inst.graph, target, placements, "witness_biclique_path")
    logger.info(f"Biclique-path witness for t={inst.t}: {witness.k} copies of {inst.graph!r}")
    return witness


# ---------------------------------------------------------------------------
# Peeling


def _check_peel(h: Graph, A: Sequence[int], B: Sequence[int], v: int, keep: Set[int]) -> None:
    a_set, b_set = set(A), set(B)
    if not A or any(not 0 <= u < h.n for u in list(A) + list(B) + [v]):
        _fail(1, "A must be nonempty and every vertex must lie in the graph")
    if a_set & b_set or v in a_set or v in b_set:
        _fail(1, "A, B and v must be pairwise disjoint")
    if not (h.is_independent(A) or h.is_clique(A)):
        _fail(2, "A must be independent or a clique")
    if any(not h.has_edge(a, b) for a in A for b in B):
        _fail(3, "A must be complete to B")
    for u in range(h.n):
        if u == v or u in a_set:
            continue
        touched = h.adj[u] & a_set
        if touched and touched != a_set:
            _fail(3, f"vertex {u} splits A, so A is not a module of the graph without v")
    nbrs = h.adj[v] & a_set
    if not nbrs or nbrs == a_set:
        _fail(4, f"v = {v} needs a neighbour and a non-neighbour in A")
    if not keep <= nbrs:
        _fail(5, f"kept vertices {sorted(keep - nbrs)} are not neighbours of v in A")


def witness_peel(
    h: Graph,
    A: Sequence[int],
    B: Sequence[int],
    v: int,
    keep: Iterable[int],
) -> SiWitness:
    """
    Remove the edges from ``v`` to its neighbours in A outside ``keep``.

    Copies: the identity and, per removed neighbour x, the transposition of
    x with a fixed non-neighbour k of v in A.

    Args:
        h: Graph containing A, B and v
        A: Independent set or clique, complete to B and a module of h - v
        B: Vertices complete to A (may be empty)
        v: Vertex with a neighbour and a non-neighbour in A
        keep: Neighbours of v in A whose edges to v survive

    Raises:
        PreconditionError: naming the violated condition
    """
    A = sorted(set(A))
    B = sorted(set(B))
    keep = set(keep)
    _check_peel(h, A, B, v, keep)

    nbrs = sorted(h.adj[v] & set(A))
    k = min(x for x in A if not h.has_edge(v, x))
    removed = [x for x in nbrs if x not in keep]
    claimed = remove_edges(h, [(v, x) for x in removed])

    maps = [VertexMap.identity(h.n)]
    for x in removed:
        image = list(range(h.n))
        image[x], image[k] = k, x
        maps.append(VertexMap(tuple(image)))
    logger.debug(f"Peeling {len(removed)} edge(s) at vertex {v} using non-neighbour {k}")
    return ensure_verified(SiWitness(h, tuple(maps), claimed), "witness_peel")


# ---------------------------------------------------------------------------
# X_p and Y_p


def _trim(part: Sequence[int], size: int, exclude: Optional[int], include: Optional[int]) -> List[int]:
    pool = [u for u in sorted(part) if u != exclude]
    chosen = [include] if include is not None and include in pool else []
    chosen.extend(u for u in pool if u not in chosen)
    return sorted(chosen[:size])


def witness_XY_to_tripods(h: Graph, t: int) -> SiWitness:
    """
    Witness that tS_{t,t,t} is a self-intersection of X_p or Y_p with
    p >= 3t^2+t+1 (any labeling).

    The degree-2 apex x and one neighbour y form the path; the biclique
    parts are trimmed to 3t^2+t vertices without y and with x's other
    neighbour z, and the induced subgraph is a biclique-path instance.

    Raises:
        PreconditionError: if ``h`` is not such a graph, including a biclique
            with parts of different sizes or below the size threshold
    """
    s = biclique_size(t)
    too_small = None
    unbalanced = None
    for x in range(h.n):
        if h.degree(x) != 2:
            continue
        parts = biclique_parts(h, [u for u in range(h.n) if u != x])
        if parts is None:
            continue
        if len(parts[0]) != len(parts[1]):
            unbalanced = tuple(sorted(len(part) for part in parts))
            continue
        if len(parts[0]) < s + 1:
            too_small = len(parts[0])
            continue
        y, z = sorted(h.adj[x])
        part_y, other = parts if y in parts[0] else (parts[1], parts[0])
        keep_y = _trim(part_y, s, exclude=y, include=z)
        keep_other = _trim(other, s, exclude=None, include=z)
        chosen = keep_y + keep_other + [x, y]
        index = relabel_instance_map(chosen)
        sub = induced_subgraph(h, chosen, f"biclique-path(t={t})")
        inst = BicliquePathInstance(
            sub,
            tuple(sorted(index[u] for u in keep_y)),
            tuple(sorted(index[u] for u in keep_other)),
            (index[x], index[y]),
            t,
        )
        return chain_witnesses(witness_induced(h, chosen), witness_biclique_path(inst))
    if too_small is not None:
        raise PreconditionError(f"biclique parts of size {too_small} are below {s + 1}")
    if unbalanced is not None:
        raise PreconditionError(f"biclique parts of sizes {unbalanced[0]} and {unbalanced[1]} differ, expected K_{{p,p}}")
    raise PreconditionError(f"{h!r} is not a biclique plus a degree-2 apex (X_p or Y_p)")


# ---------------------------------------------------------------------------
# Biclique plus one vertex


def _trim_around(part: Sequence[int], nbrs: Set[int], p: int, required: int) -> List[int]:
    """p vertices of ``part`` keeping v mixed on it (with at least ``required`` neighbours)."""
    near = [u for u in sorted(part) if u in nbrs]
    away = [u for u in sorted(part) if u not in nbrs]
    if not near:
        return away[:p]
    if not away:
        return near[:p]
    take = max(required, p - len(away))
    return sorted(near[:take] + away[:p - take])


def _swap_witness(h: Graph, A: Sequence[int], B: Sequence[int]) -> SiWitness:
    """Identity plus the copy exchanging the i-th vertices of A and B."""
    image = list(range(h.n))
    for a, b in zip(sorted(A), sorted(B)):
        image[a], image[b] = b, a
    maps = (VertexMap.identity(h.n), VertexMap(tuple(image)))
    claimed = evaluate_labeled(SiWitness(h, maps, h)).normalize()
    return ensure_verified(SiWitness(h, maps, claimed), "part swap")


def witness_biclique_plus_vertex(
    h: Graph,
    A: Sequence[int],
    B: Sequence[int],
    v: int,
    p: int,
) -> Tuple[SiWitness, BicliqueTag]:
    """
    Witness that X_p or Y_p is a self-intersection of a biclique plus a vertex.

    Conditions: 1 A, B, {v} disjoint vertices of ``h``; 2 A, B independent
    and complete to each other; 3 |A|, |B| >= p >= 3; 4 v has at least two
    neighbours in A ∪ B; 5 v is mixed on A or on B.

    Returns:
        (witness, tag) with tag "Y" when v ends adjacent to one vertex of each
        part and "X" when it ends adjacent to two vertices of one part

    Raises:
        PreconditionError: naming the violated condition
    """
    A = sorted(set(A))
    B = sorted(set(B))
    if not A or not B or any(not 0 <= u < h.n for u in A + B + [v]):
        _fail(1, "A and B must be nonempty vertex sets of the graph")
    if set(A) & set(B) or v in A or v in B:
        _fail(1, "A, B and v must be pairwise disjoint")
    if not h.is_independent(A) or not h.is_independent(B):
        _fail(2, "A and B must be independent")
    if any(not h.has_edge(a, b) for a in A for b in B):
        _fail(2, "A must be complete to B")
    if p < 3 or len(A) < p or len(B) < p:
        _fail(3, f"need |A|, |B| >= p >= 3, got |A|={len(A)}, |B|={len(B)}, p={p}")
    na, nb = h.adj[v] & set(A), h.adj[v] & set(B)
    if len(na) + len(nb) < 2:
        _fail(4, f"v = {v} has fewer than two neighbours in A ∪ B")
    mixed_a = 0 < len(na) < len(A)
    mixed_b = 0 < len(nb) < len(B)
    if not mixed_a and not mixed_b:
        _fail(5, f"v = {v} is mixed on neither part")

    trimmed_a = _trim_around(A, na, p, 2 if not nb else 1)
    trimmed_b = _trim_around(B, nb, p, 2 if not na else 1)
    chosen = trimmed_a + trimmed_b + [v]
    index = relabel_instance_map(chosen)
    steps = [witness_induced(h, chosen)]
    g0 = steps[0].claimed
    A0 = [index[u] for u in trimmed_a]
    B0 = [index[u] for u in trimmed_b]
    v0 = index[v]
    na0, nb0 = g0.adj[v0] & set(A0), g0.adj[v0] & set(B0)

    tag: BicliqueTag
    if not nb0 or not na0:
        tag = "X"
        part, other, nbrs = (A0, B0, na0) if na0 else (B0, A0, nb0)
        steps.append(witness_peel(g0, part, other, v0, sorted(nbrs)[:2]))
    else:
        tag = "Y"
        current = g0
        if len(na0) == p or len(nb0) == p:
            swap = _swap_witness(current, A0, B0)
            steps.append(swap)
            current = swap.claimed
        first = witness_peel(current, A0, B0, v0, [min(current.adj[v0] & set(A0))])
        steps.append(first)
        current = first.claimed
        steps.append(witness_peel(current, B0, A0, v0, [min(current.adj[v0] & set(B0))]))

    chained = chain_witnesses(*steps)
    target = x_graph(p) if tag == "X" else y_graph(p)
    logger.info(f"Biclique plus vertex {v} reduces to {target.name} in {len(steps)} step(s)")
    return ensure_verified(SiWitness(chained.host, chained.maps, target), "witness_biclique_plus_vertex"), tag
