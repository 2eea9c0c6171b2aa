"""
Maximum-weight independent set by dynamic programming over a nice tree
decomposition.

Solutions compare by weight (larger first), then size (smaller first), then
the sorted vertex tuple (lexicographically smaller first); this order is
preserved under disjoint unions, so the best entry per bag state extends to
the best overall solution.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Literal, Optional, Tuple

from loguru import logger

from graphs.graph import WeightedGraph
from utils.errors import InvariantError, PreconditionError
from .decomposition import TreeDecomposition, validate_decomposition

Solution = Tuple[Fraction, Tuple[int, ...]]
NiceKind = Literal["leaf", "introduce", "forget", "join"]


def solution_key(solution: Solution) -> Tuple:
    weight, members = solution
    return -weight, len(members), members


def better(a: Optional[Solution], b: Solution) -> bool:
    """True when b beats a (or a is missing)."""
    return a is None or solution_key(b) < solution_key(a)


@dataclass(frozen=True)
class NiceNode:
    kind: NiceKind
    bag: FrozenSet[int]
    vertex: Optional[int] = None
    children: Tuple[int, ...] = ()


def nice_decomposition(td: TreeDecomposition) -> Tuple[List[NiceNode], int]:
    """
    Nice form of ``td`` rooted at bag 0 and ending in an empty root bag;
    children always precede their parent in the returned list.
    """
    nodes: List[NiceNode] = []
    adjacency = td.adjacency()

    def add(kind: NiceKind, bag, vertex: Optional[int] = None, children: Tuple[int, ...] = ()) -> int:
        nodes.append(NiceNode(kind, frozenset(bag), vertex, children))
        return len(nodes) - 1

    def build(i: int, parent: int) -> int:
        bag = set(td.bags[i])
        branches = []
        for c in adjacency[i]:
            if c == parent:
                continue
            top = build(c, i)
            current = set(td.bags[c])
            for v in sorted(current - bag):
                current.discard(v)
                top = add("forget", current, v, (top,))
            for v in sorted(bag - current):
                current.add(v)
                top = add("introduce", current, v, (top,))
            branches.append(top)
        if not branches:
            top = add("leaf", ())
            current = set()
            for v in sorted(bag):
                current.add(v)
                top = add("introduce", current, v, (top,))
            return top
        top = branches[0]
        for other in branches[1:]:
            top = add("join", bag, None, (top, other))
        return top

    top = build(0, -1)
    current = set(td.bags[0])
    for v in sorted(current.copy()):
        current.discard(v)
        top = add("forget", current, v, (top,))
    return nodes, top


def _merge(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted(set(a) | set(b)))


def mwis_treedp(wg: WeightedGraph, td: TreeDecomposition) -> Solution:
    """
    Exact maximum-weight independent set using a tree decomposition.

    Args:
        wg: Weighted graph
        td: Valid tree decomposition of wg.graph

    Returns:
        (weight, sorted vertex tuple)

    Raises:
        PreconditionError: if the decomposition is invalid
    """
    g = wg.graph
    check = validate_decomposition(g, td)
    if not check:
        raise PreconditionError(f"invalid tree decomposition: {check.diagnostic}")
    if g.n == 0:
        return Fraction(0), ()

    nodes, root = nice_decomposition(td)
    tables: Dict[int, Dict[FrozenSet[int], Solution]] = {}
    for idx, node in enumerate(nodes):
        table: Dict[FrozenSet[int], Solution] = {}
        if node.kind == "leaf":
            table[frozenset()] = (Fraction(0), ())
        elif node.kind == "introduce":
            v = node.vertex
            for state, (weight, members) in tables[node.children[0]].items():
                table[state] = (weight, members)
                if not g.adj[v] & state:
                    table[state | {v}] = (weight + wg.weights[v], _merge(members, (v,)))
        elif node.kind == "forget":
            v = node.vertex
            for state, solution in tables[node.children[0]].items():
                key = state - {v}
                if better(table.get(key), solution):
                    table[key] = solution
        else:
            left, right = (tables[c] for c in node.children)
            for state, (w1, m1) in left.items():
                if state not in right:
                    continue
                w2, m2 = right[state]
                table[state] = (w1 + w2 - wg.weight_of(state), _merge(m1, m2))
        for c in node.children:
            tables.pop(c, None)
        tables[idx] = table

    weight, members = tables[root][frozenset()]
    if not g.is_independent(members) or wg.weight_of(members) != weight:
        raise InvariantError(f"tree DP returned an inconsistent solution {list(members)} of weight {weight}")
    logger.debug(f"Tree DP on {g!r} (width {td.width}, {len(nodes)} nice nodes): weight {weight}")
    return weight, members
