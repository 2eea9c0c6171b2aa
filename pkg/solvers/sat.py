"""
CNF formulas in DIMACS form, their incidence graphs and a brute-force
model counter.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from loguru import logger

from config.settings import settings
from graphs.graph import Graph
from utils.errors import GraphFormatError, GuardExceededError


@dataclass(frozen=True)
class Cnf:
    """Variables 1..num_vars; each clause is a tuple of nonzero signed literals."""

    num_vars: int
    clauses: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise GraphFormatError(f"literal {lit} outside 1..{self.num_vars}")


def parse_dimacs(text: str) -> Cnf:
    """
    Parse DIMACS CNF: ``c`` comment lines, one ``p cnf V C`` header, then
    clauses terminated by 0 (they may span lines).

    Raises:
        GraphFormatError: on a missing header, bad tokens or a clause count mismatch
    """
    header = None
    clauses: List[Tuple[int, ...]] = []
    current: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError(f"line {lineno}: bad problem line '{line}'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad problem line '{line}'")
            continue
        if header is None:
            raise GraphFormatError(f"line {lineno}: clause before the 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: '{token}' is not a literal")
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise GraphFormatError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return Cnf(header[0], tuple(clauses))


def incidence_graph(cnf: Cnf) -> Graph:
    """Variables are vertices 0..V-1, clause j is vertex V+j; one edge per occurring variable."""
    edges = {
        (abs(lit) - 1, cnf.num_vars + j)
        for j, clause in enumerate(cnf.clauses)
        for lit in clause
    }
    return Graph.from_edges(cnf.num_vars + len(cnf.clauses), sorted(edges), "incidence")


def count_sat_bruteforce(cnf: Cnf) -> int:
    """
    Number of satisfying assignments, evaluated over all assignments at once.

    Raises:
        GuardExceededError: above settings.SAT_MAX_VARIABLES variables
    """
    k = cnf.num_vars
    if k > settings.SAT_MAX_VARIABLES:
        raise GuardExceededError(f"#SAT brute force limited to {settings.SAT_MAX_VARIABLES} variables, got {k}")
    assignments = (np.arange(2 ** k, dtype=np.int64)[:, None] >> np.arange(k)) & 1
    values = assignments.astype(bool)
    satisfied = np.ones(2 ** k, dtype=bool)
    for clause in cnf.clauses:
        hit = np.zeros(2 ** k, dtype=bool)
        for lit in clause:
            column = values[:, abs(lit) - 1]
            hit |= column if lit > 0 else ~column
        satisfied &= hit
    count = int(satisfied.sum())
    logger.debug(f"#SAT over {k} variables and {len(cnf.clauses)} clauses: {count}")
    return count
