"""
Line graphs of spider forests: L(tS_{q,q,q}) ->∩ tS_{q-1,q-1,q}.

Labels 1..3q of one component follow the pattern: path 1..2q, path
2q+1..3q, and 2q+1 adjacent to q and q+1. The second copy shifts labels
1..2q down by one, so label 0 appears and 2q drops out.
"""

from loguru import logger

from graphs.generators import spider
from graphs.graph import Graph, disjoint_union, line_graph
from graphs.matching import is_isomorphic
from si_engine.labeled import VertexMap
from si_engine.witness import SiWitness, ensure_verified
from utils.errors import InvariantError, PreconditionError


def linegraph_pattern(q: int) -> Graph:
    """L(S_{q,q,q}) in pattern labels, vertex i standing for label i+1."""
    if q < 1:
        raise PreconditionError(f"q must be >= 1, got {q}")
    edges = [(i, i + 1) for i in range(2 * q - 1)]
    edges.extend((i, i + 1) for i in range(2 * q, 3 * q - 1))
    edges.extend([(2 * q, q - 1), (2 * q, q)])
    return Graph.from_edges(3 * q, edges, f"L(S{q},{q},{q})")


def shift_label(label: int, q: int) -> int:
    """i -> i-1 for i <= 2q, identity above."""
    return label - 1 if label <= 2 * q else label


def witness_linegraph_spider(t: int, q: int) -> SiWitness:
    """
    Two-copy witness that tS_{q-1,q-1,q} is a self-intersection of
    L(tS_{q,q,q}); component c uses the label block starting at c(3q+1).

    Raises:
        PreconditionError: if t < 1 or q < 2
    """
    if t < 1 or q < 2:
        raise PreconditionError(f"need t >= 1 and q >= 2, got t={t}, q={q}")
    host = line_graph(disjoint_union([spider(q, q, q)] * t, name=f"{t}S{q},{q},{q}"))
    block = line_graph(spider(q, q, q))
    sigma = is_isomorphic(block, linegraph_pattern(q))
    if sigma is None:
        raise InvariantError(f"line graph of S{q},{q},{q} does not match its pattern")

    size = block.n
    first, second = [], []
    for c in range(t):
        offset = c * (3 * q + 1)
        for v in range(size):
            label = sigma[v] + 1
            first.append(offset + label)
            second.append(offset + shift_label(label, q))
    claimed = disjoint_union([spider(q - 1, q - 1, q)] * t, name=f"{t}S{q - 1},{q - 1},{q}")
    witness = SiWitness(host, (VertexMap(tuple(first)), VertexMap(tuple(second))), claimed)
    logger.info(f"Line-graph witness: L({t}S{q},{q},{q}) ->∩ {claimed.name}")
    return ensure_verified(witness, "witness_linegraph_spider")
