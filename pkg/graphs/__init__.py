"""Graph core: types, named families, embedding search and text formats."""

from .graph import (
    Edge,
    Graph,
    WeightedGraph,
    Embedding,
    EmbeddingMode,
    line_graph,
    disjoint_union,
    induced_subgraph,
    remove_edges,
    common_neighbourhood,
    neighbourhood_of_set,
    components_of,
)
from .generators import (
    gen_named,
    complete,
    complete_bipartite,
    path,
    cycle,
    empty,
    spider,
    tripod_forest,
    x_graph,
    y_graph,
    h_graph,
    paw,
    diamond,
    petersen,
    grid,
    all_graphs,
    random_graph,
    random_connected_graph,
)
from .matching import iter_embeddings, find_embedding, is_isomorphic
from .io import (
    parse_graph,
    serialize_graph,
    parse_edge_list,
    serialize_edge_list,
    parse_graph6,
    serialize_graph6,
    read_graph,
    write_graph,
    parse_weights,
    format_fraction,
)

__all__ = [
    "Edge", "Graph", "WeightedGraph", "Embedding", "EmbeddingMode",
    "line_graph", "disjoint_union", "induced_subgraph", "remove_edges",
    "common_neighbourhood", "neighbourhood_of_set", "components_of",
    "gen_named", "complete", "complete_bipartite", "path", "cycle", "empty",
    "spider", "tripod_forest", "x_graph", "y_graph", "h_graph", "paw",
    "diamond", "petersen", "grid", "all_graphs", "random_graph",
    "random_connected_graph",
    "iter_embeddings", "find_embedding", "is_isomorphic",
    "parse_graph", "serialize_graph", "parse_edge_list", "serialize_edge_list",
    "parse_graph6", "serialize_graph6", "read_graph", "write_graph",
    "parse_weights", "format_fraction",
]
