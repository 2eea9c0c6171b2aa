"""Per-block report for bipartite inputs: bicliques, width and the two exclusions."""

from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx
from loguru import logger

from config.settings import settings
from constructions.biclique import biclique_parts
from constructions.instances import tripod_threshold
from graphs.generators import complete_bipartite, tripod_forest
from graphs.graph import EmbeddingMode, Graph, induced_subgraph
from graphs.matching import find_embedding
from treewidth.exact import exact_treewidth, tw_upper_bound
from utils.errors import PreconditionError
from .separators import biconnected_components


@dataclass(frozen=True)
class PieceReport:
    vertices: Tuple[int, ...]
    is_biclique: bool
    width: int
    width_exact: bool
    kpp_free: bool
    tripod_free: bool


def bipartite_piece_report(g: Graph, t: int) -> List[PieceReport]:
    """
    For each block of a bipartite graph: whether it is a biclique, its
    treewidth, and whether it avoids K_{p,p} (p = 3t^2+t+1) and tS_{t,t,t}
    as induced subgraphs.

    Raises:
        PreconditionError: if g is not bipartite
    """
    if not nx.is_bipartite(g.to_networkx()):
        raise PreconditionError(f"{g!r} is not bipartite")
    p = tripod_threshold(t)
    kpp = complete_bipartite(p, p)
    tripods = tripod_forest(t)
    logger.debug(f"Bipartite piece report for {g!r} with t={t}, p={p}")
    reports = []
    blocks = biconnected_components(g) + [(v,) for v in range(g.n) if g.degree(v) == 0]
    for block in sorted(blocks):
        sub = induced_subgraph(g, block)
        if sub.n <= settings.TREEWIDTH_MAX_ORDER:
            width, _ = exact_treewidth(sub)
            exact = True
        else:
            width, _ = tw_upper_bound(sub)
            exact = False
        reports.append(PieceReport(
            vertices=block,
            is_biclique=biclique_parts(sub, range(sub.n)) is not None,
            width=width,
            width_exact=exact,
            kpp_free=_free(kpp, sub),
            tripod_free=_free(tripods, sub),
        ))
    return reports


def _free(pattern: Graph, g: Graph) -> bool:
    if pattern.n > g.n:
        return True
    return find_embedding(pattern, g, EmbeddingMode.INDUCED, budget=settings.EMBEDDING_SEARCH_BUDGET) is None
