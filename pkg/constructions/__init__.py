"""Explicit witness constructions for the structural lemmas."""

from .instances import (
    BicliquePathInstance,
    CliqueThreePathInstance,
    biclique_size,
    tripod_threshold,
    clique_bound,
    is_chordless_cycle,
    build_biclique_path_instance,
    build_clique_three_path_instance,
    build_peel_graph,
    build_biclique_plus_vertex,
    permute_biclique_path,
    permute_clique_three_path,
    random_permutation,
)
from .biclique import (
    biclique_parts,
    witness_biclique_path,
    witness_peel,
    witness_XY_to_tripods,
    witness_biclique_plus_vertex,
)
from .clique import witness_clique_three_paths, witness_clique_plus_vertex
from .linegraph import linegraph_pattern, shift_label, witness_linegraph_spider

__all__ = [
    "BicliquePathInstance", "CliqueThreePathInstance",
    "biclique_size", "tripod_threshold", "clique_bound", "is_chordless_cycle",
    "build_biclique_path_instance", "build_clique_three_path_instance",
    "build_peel_graph", "build_biclique_plus_vertex",
    "permute_biclique_path", "permute_clique_three_path", "random_permutation",
    "biclique_parts", "witness_biclique_path", "witness_peel",
    "witness_XY_to_tripods", "witness_biclique_plus_vertex",
    "witness_clique_three_paths", "witness_clique_plus_vertex",
    "linegraph_pattern", "shift_label", "witness_linegraph_spider",
]
