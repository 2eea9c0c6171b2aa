"""
Modules, false twins and the modular decomposition tree.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

from loguru import logger

from graphs.graph import Graph, components_of
from utils.checks import CheckResult

ModuleKind = Literal["leaf", "parallel", "series", "prime"]


@dataclass(frozen=True)
class MDNode:
    """
    Strong module with its maximal strong submodules as children (ordered by
    smallest vertex). ``quotient`` has one vertex per child, adjacent when
    the children are.
    """

    kind: ModuleKind
    vertices: Tuple[int, ...]
    children: Tuple["MDNode", ...] = ()
    quotient: Optional[Graph] = None


@dataclass(frozen=True)
class MDTree:
    graph: Graph
    root: Optional[MDNode]

    def nodes(self) -> Iterator[MDNode]:
        """Preorder walk over all nodes."""
        if self.root is None:
            return
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def strong_modules(self) -> List[Tuple[int, ...]]:
        return sorted(node.vertices for node in self.nodes())


def false_twin_classes(g: Graph) -> List[Tuple[int, ...]]:
    """Classes of vertices with identical open neighbourhoods, ordered by smallest vertex."""
    classes: Dict[FrozenSet[int], List[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v], []).append(v)
    return sorted(tuple(members) for members in classes.values())


def is_twin_free(g: Graph) -> bool:
    return all(len(c) == 1 for c in false_twin_classes(g))


def is_module(g: Graph, vertices: Iterable[int], within: Optional[Iterable[int]] = None) -> bool:
    """True when every vertex outside U (inside ``within``) is complete or anticomplete to U."""
    chosen = set(vertices)
    scope = set(range(g.n)) if within is None else set(within)
    for u in scope - chosen:
        touched = g.adj[u] & chosen
        if touched and len(touched) != len(chosen):
            return False
    return True


def _mask(vertices: Iterable[int]) -> int:
    result = 0
    for v in vertices:
        result |= 1 << v
    return result


def minimal_module(g: Graph, seed: Iterable[int], within: Iterable[int]) -> FrozenSet[int]:
    """Smallest module of g[within] containing ``seed``: repeatedly absorb splitters."""
    scope = sorted(set(within))
    current = _mask(seed)
    changed = True
    while changed:
        changed = False
        for u in scope:
            bit = 1 << u
            if current & bit:
                continue
            touched = g.masks[u] & current
            if touched and touched != current:
                current |= bit
                changed = True
    return frozenset(v for v in scope if current >> v & 1)


def _co_components(g: Graph, vertices: Sequence[int]) -> List[List[int]]:
    remaining = set(vertices)
    result = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        comp, queue = [start], [start]
        for u in queue:
            strangers = [w for w in remaining if w not in g.adj[u]]
            for w in strangers:
                remaining.discard(w)
                comp.append(w)
                queue.append(w)
        result.append(sorted(comp))
    return sorted(result)


def top_level_partition(g: Graph, vertices: Iterable[int]) -> Tuple[ModuleKind, List[List[int]]]:
    """
    Kind of the module g[U] and its maximal strong submodules.

    Returns:
        ("leaf", []) for a single vertex, otherwise the kind and the children
        ordered by smallest vertex
    """
    scope = sorted(set(vertices))
    if len(scope) <= 1:
        return "leaf", []
    comps = components_of(g, scope)
    if len(comps) > 1:
        return "parallel", comps
    cocomps = _co_components(g, scope)
    if len(cocomps) > 1:
        return "series", cocomps

    whole = frozenset(scope)
    parent = {v: v for v in scope}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, u in enumerate(scope):
        for v in scope[i + 1:]:
            if find(u) == find(v):
                continue
            if minimal_module(g, (u, v), scope) != whole:
                parent[find(v)] = find(u)
    groups: Dict[int, List[int]] = {}
    for v in scope:
        groups.setdefault(find(v), []).append(v)
    return "prime", sorted(sorted(members) for members in groups.values())


def quotient_graph(g: Graph, children: Sequence[Sequence[int]]) -> Graph:
    reps = [min(c) for c in children]
    return Graph.from_edges(
        len(reps),
        ((i, j) for i in range(len(reps)) for j in range(i + 1, len(reps)) if g.has_edge(reps[i], reps[j])),
    )


def _decompose(g: Graph, vertices: Sequence[int]) -> MDNode:
    kind, parts = top_level_partition(g, vertices)
    if kind == "leaf":
        return MDNode("leaf", tuple(vertices))
    children = tuple(_decompose(g, part) for part in parts)
    return MDNode(kind, tuple(sorted(vertices)), children, quotient_graph(g, parts))


def modular_decomposition(g: Graph) -> MDTree:
    """Modular decomposition tree of ``g`` (root None for the empty graph)."""
    if g.n == 0:
        return MDTree(g, None)
    tree = MDTree(g, _decompose(g, list(range(g.n))))
    logger.debug(f"Modular decomposition of {g!r}: {sum(1 for _ in tree.nodes())} nodes")
    return tree


def _is_prime_quotient(q: Graph) -> bool:
    everything = frozenset(range(q.n))
    return all(
        minimal_module(q, (u, v), range(q.n)) == everything
        for u in range(q.n) for v in range(u + 1, q.n)
    )


def validate_md_tree(g: Graph, tree: MDTree) -> CheckResult:
    """
    Check that children partition their parent, every node is a module, node
    kinds match the connectivity of the node and its complement, and prime
    quotients have no nontrivial module.
    """
    if tree.root is None:
        return CheckResult.passed() if g.n == 0 else CheckResult.failed("empty tree for a nonempty graph")
    if tree.root.vertices != tuple(range(g.n)):
        return CheckResult.failed("root does not cover every vertex")
    for node in tree.nodes():
        if not is_module(g, node.vertices):
            return CheckResult.failed(f"node {list(node.vertices)} is not a module")
        if node.kind == "leaf":
            if len(node.vertices) != 1 or node.children:
                return CheckResult.failed(f"leaf {list(node.vertices)} must hold exactly one vertex")
            continue
        union = sorted(v for child in node.children for v in child.vertices)
        if union != list(node.vertices) or len(node.children) < 2:
            return CheckResult.failed(f"children of {list(node.vertices)} do not partition it")
        parts = [child.vertices for child in node.children]
        if node.quotient != quotient_graph(g, parts):
            return CheckResult.failed(f"quotient of {list(node.vertices)} does not match its children")
        if node.kind == "parallel" and node.quotient.m != 0:
            return CheckResult.failed(f"parallel node {list(node.vertices)} has adjacent children")
        if node.kind == "series" and not node.quotient.is_complete():
            return CheckResult.failed(f"series node {list(node.vertices)} has non-adjacent children")
        if node.kind == "prime" and (node.quotient.n < 4 or not _is_prime_quotient(node.quotient)):
            return CheckResult.failed(f"prime node {list(node.vertices)} has a non-prime quotient")
    return CheckResult.passed()
