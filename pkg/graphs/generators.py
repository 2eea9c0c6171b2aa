"""
Named graph families with a fixed, documented vertex labeling.

Labeling conventions:
    K_{p,q}    part A = 0..p-1, part B = p..p+q-1
    P_n, C_n   0-1-...-(n-1) (C_n closes n-1 to 0)
    S_{a,b,c}  center 0; legs numbered leg by leg from the center,
               leg 1 = 1..a, leg 2 = a+1..a+b, leg 3 = a+b+1..a+b+c
    X_p, Y_p   K_{p,p} as above plus apex 2p adjacent to {0, 1} (X) or {0, p} (Y)
    H_k        paths 0-1-2 and 3-4-5, middles 1 and 4 joined by 1-6-7-...-(k+4)-4;
               H_0 = K_{1,4} with center 0
    paw        triangle 0,1,2 plus pendant 3 on 0
    diamond    K_4 minus the edge 0-3
"""

from typing import Callable, Dict, List, Optional, Sequence

import networkx as nx
import numpy as np
from loguru import logger

from config.settings import settings
from utils.errors import GuardExceededError, PreconditionError
from .graph import Graph, disjoint_union


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def complete(n: int) -> Graph:
    _require(n >= 1, f"K needs n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)), f"K{n}")


def complete_bipartite(p: int, q: int) -> Graph:
    _require(p >= 1 and q >= 1, f"Kpq needs p, q >= 1, got {p}, {q}")
    return Graph.from_edges(p + q, ((a, p + b) for a in range(p) for b in range(q)), f"K{p},{q}")


def path(n: int) -> Graph:
    _require(n >= 1, f"P needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def cycle(n: int) -> Graph:
    _require(n >= 3, f"C needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def empty(n: int) -> Graph:
    _require(n >= 0, f"empty needs n >= 0, got {n}")
    return Graph(n, frozenset(), f"E{n}")


def spider(a: int, b: int, c: int) -> Graph:
    """S_{a,b,c}: center 0 with legs of a, b and c edges."""
    _require(min(a, b, c) >= 0, f"spider legs must be >= 0, got {a},{b},{c}")
    edges = []
    nxt = 1
    for length in (a, b, c):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges, f"S{a},{b},{c}")


def tripod_forest(t: int) -> Graph:
    """tS_{t,t,t}: t disjoint copies of S_{t,t,t}."""
    _require(t >= 1, f"tripod_forest needs t >= 1, got {t}")
    return disjoint_union([spider(t, t, t)] * t, name=f"{t}S{t},{t},{t}")


def _biclique_with_apex(p: int, second: int, name: str) -> Graph:
    base = complete_bipartite(p, p)
    apex = 2 * p
    return Graph.from_edges(apex + 1, list(base.edges) + [(0, apex), (second, apex)], name)


def x_graph(p: int) -> Graph:
    _require(p >= 2, f"Xp needs p >= 2, got {p}")
    return _biclique_with_apex(p, 1, f"X{p}")


def y_graph(p: int) -> Graph:
    _require(p >= 1, f"Yp needs p >= 1, got {p}")
    return _biclique_with_apex(p, p, f"Y{p}")


def h_graph(k: int) -> Graph:
    """H_k; H_0 is K_{1,4}."""
    _require(k >= 0, f"Hk needs k >= 0, got {k}")
    if k == 0:
        return Graph.from_edges(5, [(0, i) for i in range(1, 5)], "H0")
    edges = [(0, 1), (1, 2), (3, 4), (4, 5)]
    chain = [1] + list(range(6, k + 5)) + [4]
    edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(k + 5, edges, f"H{k}")


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)], "paw")


def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], "diamond")


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph(), "petersen")


def grid(rows: int, cols: int) -> Graph:
    _require(rows >= 1 and cols >= 1, f"grid needs positive sides, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges, f"grid{rows}x{cols}")


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "K": complete,
    "Kpq": complete_bipartite,
    "P": path,
    "C": cycle,
    "spider": spider,
    "tripod_forest": tripod_forest,
    "Xp": x_graph,
    "Yp": y_graph,
    "Hk": h_graph,
    "paw": paw,
    "diamond": diamond,
    "petersen": petersen,
    "grid": grid,
    "empty": empty,
}

ARITY: Dict[str, int] = {
    "K": 1, "Kpq": 2, "P": 1, "C": 1, "spider": 3, "tripod_forest": 1,
    "Xp": 1, "Yp": 1, "Hk": 1, "paw": 0, "diamond": 0, "petersen": 0,
    "grid": 2, "empty": 1,
}


def gen_named(family: str, params: Sequence[int] = ()) -> Graph:
    """
    Build a member of a named family.

    Args:
        family: One of FAMILIES
        params: Integer parameters for the family

    Returns:
        The canonically labeled graph

    Raises:
        PreconditionError: unknown family, wrong parameter count or invalid size
    """
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family '{family}' (known: {', '.join(FAMILIES)})")
    if len(params) != ARITY[family]:
        raise PreconditionError(f"family '{family}' takes {ARITY[family]} parameter(s), got {len(params)}")
    graph = FAMILIES[family](*[int(x) for x in params])
    logger.debug(f"Generated {graph!r} from {family}{list(params)}")
    return graph


def all_graphs(nmax: int, nmin: int = 1) -> List[Graph]:
    """
    One representative per isomorphism class with nmin..nmax vertices.

    Uses the networkx graph atlas, which covers up to 7 vertices.
    """
    if nmax > settings.PROBE_MAX_ORDER:
        raise GuardExceededError(f"graph enumeration limited to {settings.PROBE_MAX_ORDER} vertices, got {nmax}")
    result = []
    for index, atlas_graph in enumerate(nx.graph_atlas_g()):
        order = atlas_graph.number_of_nodes()
        if nmin <= order <= nmax:
            result.append(Graph.from_networkx(atlas_graph, f"G{index}"))
    logger.debug(f"Enumerated {len(result)} graph classes on {nmin}..{nmax} vertices")
    return result


def random_graph(n: int, p: float, rng: np.random.Generator, name: Optional[str] = None) -> Graph:
    """G(n, p) drawn from a seeded numpy generator."""
    draws = rng.random(n * (n - 1) // 2)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [pair for pair, x in zip(pairs, draws) if x < p]
    return Graph.from_edges(n, edges, name or "")


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Random graph made connected by adding a random spanning path over its components."""
    g = random_graph(n, p, rng)
    comps = g.components()
    if len(comps) == 1:
        return g
    extra = []
    for left, right in zip(comps, comps[1:]):
        extra.append((left[int(rng.integers(len(left)))], right[int(rng.integers(len(right)))]))
    return Graph.from_edges(n, list(g.edges) + extra)
