"""Exact solvers, brute-force oracles and class-level tools."""

from .mwis import TraceStep, DecompositionTrace, MwisPipeline, mwis, mis, mwis_bruteforce
from .mim import is_induced_matching, mim_bruteforce
from .classes import (
    ClassSpec,
    RelationMode,
    MODES,
    contains,
    class_membership,
    ProbeRow,
    ProbeTable,
    class_probe,
    p1p3_references,
    p1p3_si_exceptions,
    is_tripod_forest,
    sk_obstruction,
    sk_membership,
    DichotomyVerdict,
    dichotomy_classify,
)
from .sat import Cnf, parse_dimacs, incidence_graph, count_sat_bruteforce

__all__ = [
    "TraceStep", "DecompositionTrace", "MwisPipeline", "mwis", "mis", "mwis_bruteforce",
    "is_induced_matching", "mim_bruteforce",
    "ClassSpec", "RelationMode", "MODES", "contains", "class_membership",
    "ProbeRow", "ProbeTable", "class_probe", "p1p3_references", "p1p3_si_exceptions",
    "is_tripod_forest", "sk_obstruction", "sk_membership",
    "DichotomyVerdict", "dichotomy_classify",
    "Cnf", "parse_dimacs", "incidence_graph", "count_sat_bruteforce",
]
