"""Tree decompositions, exact treewidth and the MWIS tree DP."""

from .decomposition import (
    TreeDecomposition,
    validate_decomposition,
    decomposition_from_order,
    empty_decomposition,
)
from .exact import exact_treewidth, tw_upper_bound
from .mwis_dp import NiceNode, nice_decomposition, mwis_treedp, solution_key, better

__all__ = [
    "TreeDecomposition", "validate_decomposition", "decomposition_from_order",
    "empty_decomposition", "exact_treewidth", "tw_upper_bound",
    "NiceNode", "nice_decomposition", "mwis_treedp", "solution_key", "better",
]
