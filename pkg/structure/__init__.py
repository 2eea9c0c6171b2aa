"""Structural analyzers and the certifying structure theorems."""

from .modules import (
    MDNode,
    MDTree,
    false_twin_classes,
    is_twin_free,
    is_module,
    minimal_module,
    top_level_partition,
    modular_decomposition,
    validate_md_tree,
)
from .separators import (
    AtomDecomposition,
    cut_vertices,
    biconnected_components,
    is_cutset,
    clique_cutsets_upto,
    minimal_separators,
    find_clique_separator,
    clique_separator_atoms,
)
from .cliques import maximal_cliques, clique_number, maximal_induced_bicliques
from .paths import lex_shortest_path
from .certificates import (
    ModuleCert,
    KrFreeCert,
    CompleteCert,
    TwBoundCert,
    Refutation,
    Certificate,
    describe_certificate,
    certify_theorem31,
    certify_theorem31_components,
    certify_theorem37,
    Theorem39Report,
    report_theorem39,
    validate_certificate,
)
from .bipartite import PieceReport, bipartite_piece_report

__all__ = [
    "MDNode", "MDTree", "false_twin_classes", "is_twin_free", "is_module",
    "minimal_module", "top_level_partition", "modular_decomposition", "validate_md_tree",
    "AtomDecomposition", "cut_vertices", "biconnected_components", "is_cutset",
    "clique_cutsets_upto", "minimal_separators", "find_clique_separator",
    "clique_separator_atoms",
    "maximal_cliques", "clique_number", "maximal_induced_bicliques", "lex_shortest_path",
    "ModuleCert", "KrFreeCert", "CompleteCert", "TwBoundCert", "Refutation", "Certificate",
    "describe_certificate", "certify_theorem31", "certify_theorem31_components",
    "certify_theorem37", "Theorem39Report", "report_theorem39", "validate_certificate",
    "PieceReport", "bipartite_piece_report",
]
