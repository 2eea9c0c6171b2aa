"""
Class membership under the three containment relations, exhaustive class
probes, tripod recognition, the S_k tests and the dichotomy classifier.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from config.settings import settings
from graphs.generators import all_graphs, complete, complete_bipartite, cycle, diamond, h_graph, paw, path, tripod_forest
from graphs.graph import EmbeddingMode, Graph, disjoint_union
from graphs.matching import find_embedding
from si_engine.oracle import si_check
from utils.errors import GuardExceededError, InvariantError, PreconditionError

RelationMode = Literal["induced", "subgraph", "si"]
MODES: Tuple[RelationMode, ...] = ("induced", "subgraph", "si")
Verdict = Literal["POLY", "HARD"]


@dataclass(frozen=True)
class ClassSpec:
    """Free(M), SubgraphFree(M) or SiFree(M) depending on ``mode``."""

    forbidden: Tuple[Graph, ...]
    mode: RelationMode = "si"

    def __post_init__(self):
        if not self.forbidden:
            raise PreconditionError("a class needs at least one forbidden graph")
        if self.mode not in MODES:
            raise PreconditionError(f"unknown relation mode '{self.mode}'")


def contains(g: Graph, f: Graph, mode: RelationMode) -> bool:
    """True when ``f`` occurs in ``g`` under the relation."""
    if f.n > g.n:
        return False
    if mode == "si":
        return si_check(g, f)
    search = EmbeddingMode.INDUCED if mode == "induced" else EmbeddingMode.SUBGRAPH
    return find_embedding(f, g, search) is not None


def class_membership(g: Graph, spec: ClassSpec) -> bool:
    return not any(contains(g, f, spec.mode) for f in spec.forbidden)


# ---------------------------------------------------------------------------
# Probes


@dataclass(frozen=True)
class ProbeRow:
    graph: Graph
    membership: Dict[str, bool]


@dataclass
class ProbeTable:
    """Membership of every graph class up to ``nmax`` vertices, per relation."""

    forbidden: Tuple[Graph, ...]
    nmax: int
    rows: List[ProbeRow] = field(default_factory=list)
    # mode -> reference list compared against, and the graphs where they differ
    references: Dict[str, Tuple[Graph, ...]] = field(default_factory=dict)
    mismatches: Dict[str, List[Graph]] = field(default_factory=dict)

    def column(self, mode: RelationMode) -> List[bool]:
        return [row.membership[mode] for row in self.rows]

    def count_by_order(self) -> Dict[int, int]:
        result: Dict[int, int] = {}
        for row in self.rows:
            result[row.graph.n] = result.get(row.graph.n, 0) + 1
        return result

    def lines(self) -> List[str]:
        out = [f"classes={len(self.rows)} nmax={self.nmax}"]
        for mode in MODES:
            members = sum(self.column(mode))
            out.append(f"{mode}_members={members}")
        for mode, ref in self.references.items():
            names = ",".join(f.name or f"n{f.n}m{f.m}" for f in ref)
            out.append(f"reference {mode} Free({names}) mismatches={len(self.mismatches[mode])}")
            for graph in self.mismatches[mode]:
                out.append(f"  mismatch {graph.name} n={graph.n} edges={graph.sorted_edges()}")
        return out


def class_probe(
    forbidden: Sequence[Graph],
    nmax: int,
    references: Optional[Dict[str, Sequence[Graph]]] = None,
) -> ProbeTable:
    """
    Membership table over every isomorphism class on 1..nmax vertices.

    Args:
        forbidden: The list M
        nmax: Largest order enumerated
        references: Optional map from a mode to an induced-obstruction list;
            the mode's column is compared with Free(list)

    Raises:
        GuardExceededError: above settings.PROBE_MAX_ORDER vertices
    """
    if nmax > settings.PROBE_MAX_ORDER:
        raise GuardExceededError(f"class probes limited to {settings.PROBE_MAX_ORDER} vertices, got {nmax}")
    table = ProbeTable(tuple(forbidden), nmax)
    for g in all_graphs(nmax):
        membership = {
            mode: class_membership(g, ClassSpec(tuple(forbidden), mode)) for mode in MODES
        }
        table.rows.append(ProbeRow(g, membership))
    for mode, ref in (references or {}).items():
        spec = ClassSpec(tuple(ref), "induced")
        table.references[mode] = tuple(ref)
        table.mismatches[mode] = [
            row.graph for row in table.rows
            if row.membership[mode] != class_membership(row.graph, spec)
        ]
    logger.info(
        f"Probe over {len(table.rows)} classes up to {nmax} vertices: "
        + ", ".join(f"{mode} {len(v)} mismatch(es)" for mode, v in table.mismatches.items())
    )
    return table


def _named(g: Graph, name: str) -> Graph:
    return Graph(g.n, g.edges, name)


def p1p3_references() -> Dict[str, Tuple[Graph, ...]]:
    """
    Induced-obstruction lists as published for SiFree(P1+P3) and
    SubgraphFree(P1+P3). The subgraph list is exact; the si list misses the
    graphs in ``p1p3_si_exceptions``.
    """
    p1p3 = _named(disjoint_union([path(1), path(3)]), "P1+P3")
    p4 = _named(path(4), "P4")
    shared = (p1p3, p4, _named(paw(), "paw"), _named(diamond(), "diamond"))
    return {
        "si": shared,
        "subgraph": (
            _named(disjoint_union([cycle(3), path(1)]), "C3+P1"),
            _named(cycle(4), "C4"),
            _named(complete_bipartite(1, 3), "K13"),
        ) + shared + (_named(complete(4), "K4"),),
    }


def p1p3_si_exceptions() -> Tuple[Graph, ...]:
    """
    Graphs on at most six vertices in Free(P1+P3, P4, paw, diamond) that still
    have P1+P3 as a self-intersection. Each contains an induced K_{2,3}, so
    adding K_{2,3} to the si reference list closes the gap up to six vertices.
    """
    return tuple(_named(complete_bipartite(a, b), f"K{a}{b}") for a, b in ((2, 3), (2, 4), (3, 3)))


# ---------------------------------------------------------------------------
# Tripods and S_k


def _is_tripod_shape(g: Graph) -> bool:
    for comp in g.components():
        edges = sum(g.degree(v) for v in comp) // 2
        if edges != len(comp) - 1:
            return False
        degrees = [g.degree(v) for v in comp]
        if max(degrees, default=0) > 3 or degrees.count(3) > 1:
            return False
    return True


def is_tripod_forest(g: Graph) -> Optional[int]:
    """
    Smallest t with g an induced subgraph of tS_{t,t,t}, or None when g is
    not a tripod forest.
    """
    if not _is_tripod_shape(g):
        return None
    for t in range(1, max(g.n, 1) + 1):
        if find_embedding(g, tripod_forest(t), EmbeddingMode.INDUCED) is not None:
            logger.debug(f"{g!r} embeds in tS_(t,t,t) for t={t}")
            return t
    raise InvariantError(f"tripod forest {g!r} did not embed in tS_(t,t,t) for any t <= {g.n}")


def sk_obstruction(g: Graph, k: int) -> Optional[str]:
    """
    First reason g is outside S_k (``C<j>``, ``H0`` or ``H<i>``), or None.

    Raises:
        PreconditionError: if k < 3
    """
    if k < 3:
        raise PreconditionError(f"S_k needs k >= 3, got {k}")
    girth = nx.girth(g.to_networkx())
    if girth <= k:
        return f"C{int(girth)}"
    if g.max_degree() >= 4:
        return "H0"
    for i in range(1, k + 1):
        pattern = h_graph(i)
        if pattern.n <= g.n and find_embedding(pattern, g, EmbeddingMode.SUBGRAPH) is not None:
            return f"H{i}"
    return None


def sk_membership(g: Graph, k: int) -> bool:
    return sk_obstruction(g, k) is None


@dataclass(frozen=True)
class DichotomyVerdict:
    """
    POLY carries the tripod forest and its t; HARD carries r and, for each
    forbidden graph, the obstruction keeping it out of S_r.
    """

    verdict: Verdict
    index: Optional[int] = None
    t: Optional[int] = None
    r: Optional[int] = None
    obstructions: Tuple[str, ...] = ()

    def lines(self) -> List[str]:
        if self.verdict == "POLY":
            return ["verdict=POLY", f"graph_index={self.index}", f"t={self.t}"]
        return ["verdict=HARD", f"r={self.r}"] + [
            f"obstruction[{i}]={o}" for i, o in enumerate(self.obstructions)
        ]


def dichotomy_classify(forbidden: Sequence[Graph]) -> DichotomyVerdict:
    """
    POLY when some forbidden graph is a tripod forest (smallest t wins, then
    the earliest graph), otherwise HARD with the least r >= 3 at which every
    forbidden graph falls outside S_r.

    Raises:
        PreconditionError: if the list is empty
    """
    if not forbidden:
        raise PreconditionError("dichotomy_classify needs at least one forbidden graph")
    best: Optional[Tuple[int, int]] = None
    for index, f in enumerate(forbidden):
        t = is_tripod_forest(f)
        if t is not None and (best is None or t < best[0]):
            best = (t, index)
    if best is not None:
        logger.info(f"Dichotomy: POLY via forbidden graph {best[1]} with t={best[0]}")
        return DichotomyVerdict("POLY", index=best[1], t=best[0])

    limit = max(3, max(f.n for f in forbidden))
    for r in range(3, limit + 1):
        obstructions = [sk_obstruction(f, r) for f in forbidden]
        if all(o is not None for o in obstructions):
            logger.info(f"Dichotomy: HARD with r={r}")
            return DichotomyVerdict("HARD", r=r, obstructions=tuple(obstructions))
    raise InvariantError(f"no r <= {limit} excludes every non-tripod forbidden graph from S_r")
