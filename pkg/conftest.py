"""Shared pytest setup and hypothesis strategies."""

import sys
from fractions import Fraction
from pathlib import Path

# Add the repository root to the path
sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import strategies as st

from graphs.graph import Graph, WeightedGraph


@st.composite
def small_graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    """Arbitrary simple graph with min_n..max_n vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, present) if keep])


@st.composite
def weighted_graphs(draw, min_n: int = 0, max_n: int = 8) -> WeightedGraph:
    """Graph with nonnegative rational weights (zero weights included)."""
    g = draw(small_graphs(min_n, max_n))
    weights = draw(st.lists(
        st.fractions(min_value=Fraction(0), max_value=Fraction(10), max_denominator=4),
        min_size=g.n,
        max_size=g.n,
    ))
    return WeightedGraph.of(g, weights)
