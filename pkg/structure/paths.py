"""Shortest paths with a reproducible (lexicographically smallest) tie-break."""

from typing import Iterable, List, Optional

from graphs.graph import Graph


def lex_shortest_path(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    allowed: Optional[Iterable[int]] = None,
) -> Optional[List[int]]:
    """
    Shortest path from some source to some target inside ``allowed``.

    Among shortest paths, the one with the lexicographically smallest vertex
    sequence is returned (start vertex first). None if no path exists.
    """
    scope = set(range(g.n)) if allowed is None else set(allowed)
    goal = set(targets) & scope
    starts = set(sources) & scope
    dist = {t: 0 for t in goal}
    queue = sorted(goal)
    for u in queue:
        for w in g.adj[u]:
            if w in scope and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    reachable = [s for s in starts if s in dist]
    if not reachable:
        return None
    current = min(reachable, key=lambda s: (dist[s], s))
    path = [current]
    while dist[current] > 0:
        current = min(w for w in g.adj[current] if dist.get(w) == dist[current] - 1)
        path.append(current)
    return path
