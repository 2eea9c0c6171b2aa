"""
Graphs on arbitrary nonnegative labels, injective vertex maps and intersection.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from graphs.graph import Edge, Graph
from utils.errors import PreconditionError


@dataclass(frozen=True)
class VertexMap:
    """
    Injective map from the vertices 0..n-1 of a host into the nonnegative integers.

    ``image[i]`` is the label of host vertex ``i``.
    """

    image: Tuple[int, ...]

    def __post_init__(self):
        if any(label < 0 for label in self.image):
            raise PreconditionError("vertex map labels must be nonnegative")
        if len(set(self.image)) != len(self.image):
            raise PreconditionError(f"vertex map is not injective: {list(self.image)}")

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __getitem__(self, v: int) -> int:
        return self.image[v]

    def max_label(self) -> int:
        return max(self.image, default=-1)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on a finite set of nonnegative integer labels."""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u >= v or u not in self.vertices or v not in self.vertices:
                raise PreconditionError(f"labeled edge ({u},{v}) invalid for its vertex set")

    @classmethod
    def from_graph(cls, g: Graph) -> "LabeledGraph":
        return cls(frozenset(range(g.n)), g.edges)

    def intersect(self, other: "LabeledGraph") -> "LabeledGraph":
        return LabeledGraph(self.vertices & other.vertices, self.edges & other.edges)

    def sorted_labels(self) -> list:
        return sorted(self.vertices)

    def normalize(self, name: str = "") -> Graph:
        """Relabel to 0..h-1 following the sorted order of the labels."""
        index = {label: i for i, label in enumerate(self.sorted_labels())}
        return Graph(len(index), frozenset((index[u], index[v]) for u, v in self.edges), name)


def apply_map(g: Graph, alpha: VertexMap) -> LabeledGraph:
    """
    Place ``g`` by ``alpha``: G^alpha has the image labels and the image edges.

    Raises:
        PreconditionError: if ``alpha`` is not defined on exactly V(g)
    """
    if alpha.n != g.n:
        raise PreconditionError(f"vertex map defined on {alpha.n} vertices, graph has {g.n}")
    edges = frozenset(
        (min(alpha[u], alpha[v]), max(alpha[u], alpha[v])) for u, v in g.edges
    )
    return LabeledGraph(frozenset(alpha.image), edges)


def intersect(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Common vertices and common edges."""
    return g1.intersect(g2)


def intersect_all(graphs: Iterable[LabeledGraph]) -> LabeledGraph:
    iterator = iter(graphs)
    try:
        result = next(iterator)
    except StopIteration:
        raise PreconditionError("cannot intersect an empty family")
    for other in iterator:
        result = result.intersect(other)
    return result
