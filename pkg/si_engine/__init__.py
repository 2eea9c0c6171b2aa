"""The self-intersection calculus: maps, intersections, witnesses and oracles."""

from .labeled import VertexMap, LabeledGraph, apply_map, intersect, intersect_all
from .witness import (
    SiWitness,
    LabelAllocator,
    place_copy,
    identity_witness,
    evaluate_labeled,
    evaluate_witness,
    verify_witness,
    ensure_verified,
    restrict_witness,
    witness_induced,
    witness_from_local_embeddings,
    witness_from_placements,
    compose_witness,
    chain_witnesses,
)
from .oracle import (
    PlacedPattern,
    oracle_cost,
    naive_copy_bound,
    si_oracle,
    si_check,
    si_oracle_naive,
    check_oracle_agreement,
)
from .serialization import serialize_witness, parse_witness

__all__ = [
    "VertexMap", "LabeledGraph", "apply_map", "intersect", "intersect_all",
    "SiWitness", "LabelAllocator", "place_copy", "identity_witness",
    "evaluate_labeled", "evaluate_witness", "verify_witness", "ensure_verified",
    "restrict_witness", "witness_induced", "witness_from_local_embeddings",
    "witness_from_placements", "compose_witness", "chain_witnesses",
    "PlacedPattern", "oracle_cost", "naive_copy_bound", "si_oracle", "si_check", "si_oracle_naive",
    "check_oracle_agreement",
    "serialize_witness", "parse_witness",
]
