"""Shape helpers for forests of spiders (the targets tS_{t,t,t})."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from graphs.graph import Graph


@dataclass(frozen=True)
class SpiderComponent:
    """One component of a spider forest, rooted at its highest-degree vertex."""

    vertices: Tuple[int, ...]
    center: int
    parent: Dict[int, Optional[int]] = field(hash=False)
    depth: Dict[int, int] = field(hash=False)

    def children(self, g: Graph, u: int) -> List[int]:
        return sorted(w for w in g.adj[u] if self.parent.get(w) == u)

    def center_side(self) -> List[int]:
        """Vertices at even distance from the center."""
        return [v for v in self.vertices if self.depth[v] % 2 == 0]

    def far_side(self) -> List[int]:
        return [v for v in self.vertices if self.depth[v] % 2 == 1]


def spider_components(g: Graph) -> List[SpiderComponent]:
    """Components of ``g`` rooted at their lowest vertex of maximum degree."""
    result = []
    for comp in g.components():
        center = max(comp, key=lambda v: (g.degree(v), -v))
        parent: Dict[int, Optional[int]] = {center: None}
        depth = {center: 0}
        queue = [center]
        for u in queue:
            for w in sorted(g.adj[u]):
                if w not in parent:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
        result.append(SpiderComponent(tuple(comp), center, parent, depth))
    return result


def component_of(components: List[SpiderComponent], v: int) -> SpiderComponent:
    for comp in components:
        if v in comp.parent:
            return comp
    raise KeyError(v)


def outward_path(g: Graph, comp: SpiderComponent, v: int) -> List[int]:
    """v followed by the vertices of its leg further from the center, ending at a leaf."""
    result = [v]
    current = v
    while True:
        kids = comp.children(g, current)
        if not kids:
            return result
        current = kids[0]
        result.append(current)


def subtree_order(g: Graph, comp: SpiderComponent, start: int, blocked: set) -> List[Tuple[int, int]]:
    """
    BFS order of the vertices of ``comp`` reachable from ``start`` without
    entering ``blocked``, as (vertex, already-visited neighbour) pairs.
    """
    order = []
    seen = {start} | set(blocked)
    queue = [start]
    for u in queue:
        for w in sorted(g.adj[u]):
            if w not in seen:
                seen.add(w)
                order.append((w, u))
                queue.append(w)
    return order
