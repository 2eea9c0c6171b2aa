"""
Text formats: the "n m" edge list, header-less graph6 and weight files.
"""

from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Tuple, Union

import networkx as nx
from loguru import logger

from config.settings import settings
from utils.errors import GraphFormatError
from .graph import Graph


GraphFormat = Literal["edgelist", "graph6"]


def _parse_ints(line: str, lineno: int, expected: int) -> List[int]:
    parts = line.split()
    if len(parts) != expected:
        raise GraphFormatError(f"line {lineno}: expected {expected} integers, got '{line.strip()}'")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer token in '{line.strip()}'")


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format: header "n m" followed by m lines "u v".

    Raises:
        GraphFormatError: malformed header, wrong edge count, self-loop,
            vertex index >= n or duplicate edge
    """
    lines = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not lines:
        raise GraphFormatError("empty input: missing 'n m' header")
    lineno, header = lines[0]
    n, m = _parse_ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: malformed header '{header.strip()}'")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")

    seen = set()
    for lineno, line in body:
        u, v = _parse_ints(line, lineno, 2)
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if min(u, v) < 0 or max(u, v) >= n:
            raise GraphFormatError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {edge[0]} {edge[1]}")
        seen.add(edge)
    return Graph(n, frozenset(seen))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    token = text.strip()
    if token.startswith(">>graph6<<"):
        token = token[len(">>graph6<<"):]
    if not token or any(c.isspace() for c in token):
        raise GraphFormatError(f"malformed graph6 string '{text.strip()}'")
    try:
        nx_graph = nx.from_graph6_bytes(token.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"malformed graph6 string '{token}': {e}")
    if nx_graph.number_of_nodes() > settings.GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 input has more than {settings.GRAPH6_MAX_ORDER} vertices")
    return Graph.from_networkx(nx_graph)


def serialize_graph6(g: Graph) -> str:
    if g.n > settings.GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 output supports at most {settings.GRAPH6_MAX_ORDER} vertices, got {g.n}")
    data = nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.n)), header=False)
    return data.decode("ascii").strip()


def parse_graph(text: str) -> Graph:
    """
    Parse either format: a first line with two integers is an edge list,
    a single token is graph6.
    """
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("empty input")
    first = stripped.splitlines()[0].split()
    if len(first) == 1 and len(stripped.split()) == 1 and not first[0].lstrip("-").isdigit():
        return parse_graph6(stripped)
    return parse_edge_list(text)


def serialize_graph(g: Graph, fmt: GraphFormat = "edgelist") -> str:
    if fmt == "graph6":
        return serialize_graph6(g) + "\n"
    return serialize_edge_list(g)


def format_for_path(path: Union[str, Path]) -> GraphFormat:
    return "graph6" if str(path).endswith(".g6") else "edgelist"


def read_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {path}: {e}")
    graph = parse_graph(text)
    logger.debug(f"Read {graph!r} from {path}")
    return Graph(graph.n, graph.edges, path.stem)


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(serialize_graph(g, format_for_path(path)), encoding="utf-8")
    logger.info(f"Wrote {g!r} to {path}")


def parse_weights(text: str, n: int) -> Tuple[Fraction, ...]:
    """
    Parse one nonnegative rational per line ("3", "1/2", "0.25").

    Raises:
        GraphFormatError: bad token, negative value or wrong count
    """
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token:
            continue
        try:
            value = Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError(f"weights line {lineno}: not a rational '{token}'")
        if value < 0:
            raise GraphFormatError(f"weights line {lineno}: negative weight {token}")
        values.append(value)
    if len(values) != n:
        raise GraphFormatError(f"expected {n} weights, found {len(values)}")
    return tuple(values)


def format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
