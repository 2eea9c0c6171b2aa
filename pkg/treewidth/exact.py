"""
Exact treewidth by dynamic programming over vertex subsets, bounded above
by the networkx min-fill-in heuristic.
"""

from typing import Dict, List, Tuple

from networkx.algorithms.approximation import treewidth_min_fill_in
from loguru import logger

from config.settings import settings
from graphs.graph import Graph
from utils.errors import GuardExceededError, InvariantError
from .decomposition import (
    TreeDecomposition,
    decomposition_from_order,
    empty_decomposition,
    validate_decomposition,
)


def tw_upper_bound(g: Graph) -> Tuple[int, TreeDecomposition]:
    """
    Min-fill-in heuristic width and its decomposition.

    Returns:
        (width, decomposition) with the decomposition validated
    """
    if g.n == 0:
        return -1, empty_decomposition()
    width, tree = treewidth_min_fill_in(g.to_networkx())
    td = TreeDecomposition.from_networkx(tree)
    check = validate_decomposition(g, td)
    if not check:
        raise InvariantError(f"min-fill-in decomposition of {g!r} is invalid: {check.diagnostic}")
    return td.width, td


def _reach_outside(masks: Tuple[int, ...], inside: int, v: int) -> int:
    """Number of vertices outside ``inside`` ∪ {v} reachable from v through ``inside``."""
    seen = 1 << v
    outside = 0
    stack = [v]
    while stack:
        u = stack.pop()
        fresh = masks[u] & ~seen
        seen |= fresh
        outside |= fresh & ~inside
        through = fresh & inside
        while through:
            low = through & -through
            stack.append(low.bit_length() - 1)
            through ^= low
    return bin(outside).count("1")


def exact_treewidth(g: Graph) -> Tuple[int, TreeDecomposition]:
    """
    Exact treewidth and an optimal decomposition.

    Eliminates vertices subset by subset: the cost of eliminating v after
    the set S is the number of vertices outside S ∪ {v} reachable from v
    through S, and the treewidth is the least possible maximum cost over a
    full ordering. States at or above the heuristic width are pruned.

    Raises:
        GuardExceededError: if the graph has more than settings.TREEWIDTH_MAX_ORDER vertices
    """
    if g.n > settings.TREEWIDTH_MAX_ORDER:
        raise GuardExceededError(
            f"exact treewidth limited to {settings.TREEWIDTH_MAX_ORDER} vertices, got {g.n}"
        )
    upper, upper_td = tw_upper_bound(g)
    if g.n <= 1 or upper <= 0:
        return upper, upper_td

    n = g.n
    masks = g.masks
    best: Dict[int, int] = {0: -1}
    parents: List[Dict[int, Tuple[int, int]]] = []
    for _ in range(n):
        nxt: Dict[int, int] = {}
        back: Dict[int, Tuple[int, int]] = {}
        for state, value in best.items():
            for v in range(n):
                if state >> v & 1:
                    continue
                cost = max(value, _reach_outside(masks, state, v))
                if cost >= upper:
                    continue
                grown = state | (1 << v)
                if grown not in nxt or cost < nxt[grown]:
                    nxt[grown] = cost
                    back[grown] = (state, v)
        parents.append(back)
        best = nxt
        if not best:
            break

    full = (1 << n) - 1
    if full not in best:
        logger.debug(f"Treewidth of {g!r} equals the heuristic bound {upper}")
        return upper, upper_td

    order = []
    state = full
    for level in range(n - 1, -1, -1):
        state, v = parents[level][state]
        order.append(v)
    order.reverse()
    td = decomposition_from_order(g, order)
    if td.width != best[full]:
        raise InvariantError(f"elimination order gives width {td.width}, expected {best[full]}")
    logger.debug(f"Exact treewidth of {g!r} is {td.width} (heuristic gave {upper})")
    return td.width, td
