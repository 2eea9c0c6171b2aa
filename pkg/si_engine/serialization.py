"""
Witness text format.

    si-witness
    host
    <edge list of the host>
    maps <k>
    <n labels of map 1>
    ...
    claimed
    <edge list of the claimed graph>
"""

from typing import List, Tuple

from graphs.graph import Graph
from graphs.io import parse_edge_list, serialize_edge_list
from utils.errors import GraphFormatError, PreconditionError
from .labeled import VertexMap
from .witness import SiWitness


MAGIC = "si-witness"


def serialize_witness(w: SiWitness) -> str:
    parts = [MAGIC, "host", serialize_edge_list(w.host).rstrip("\n"), f"maps {w.k}"]
    parts.extend(" ".join(str(label) for label in alpha.image) for alpha in w.maps)
    parts.extend(["claimed", serialize_edge_list(w.claimed).rstrip("\n")])
    return "\n".join(parts) + "\n"


def _take_edge_list(lines: List[str], pos: int) -> Tuple[Graph, int]:
    if pos >= len(lines):
        raise GraphFormatError("witness truncated: missing edge-list header")
    header = lines[pos].split()
    if len(header) != 2 or not all(x.isdigit() for x in header):
        raise GraphFormatError(f"witness: malformed edge-list header '{lines[pos]}'")
    m = int(header[1])
    block = lines[pos:pos + 1 + m]
    if len(block) != m + 1:
        raise GraphFormatError("witness truncated inside an edge list")
    return parse_edge_list("\n".join(block)), pos + 1 + m


def parse_witness(text: str) -> SiWitness:
    """
    Parse the witness text format; trailing CLI ``RESULT`` lines are skipped.

    Raises:
        GraphFormatError: on any structural problem
    """
    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.startswith("RESULT ")
    ]
    if len(lines) < 2 or lines[0] != MAGIC or lines[1] != "host":
        raise GraphFormatError(f"witness must start with '{MAGIC}' and 'host'")
    host, pos = _take_edge_list(lines, 2)

    if pos >= len(lines) or not lines[pos].startswith("maps "):
        raise GraphFormatError("witness: expected 'maps <k>'")
    try:
        k = int(lines[pos].split()[1])
    except (IndexError, ValueError):
        raise GraphFormatError(f"witness: malformed maps line '{lines[pos]}'")
    pos += 1
    maps = []
    for _ in range(k):
        if pos >= len(lines):
            raise GraphFormatError("witness truncated inside the map list")
        try:
            image = tuple(int(x) for x in lines[pos].split())
        except ValueError:
            raise GraphFormatError(f"witness: non-integer label in '{lines[pos]}'")
        if len(image) != host.n:
            raise GraphFormatError(f"witness: map has {len(image)} labels, host has {host.n} vertices")
        try:
            maps.append(VertexMap(image))
        except PreconditionError as e:
            raise GraphFormatError(f"witness: {e}")
        pos += 1

    if pos >= len(lines) or lines[pos] != "claimed":
        raise GraphFormatError("witness: expected 'claimed'")
    claimed, pos = _take_edge_list(lines, pos + 1)
    if pos != len(lines):
        raise GraphFormatError("witness: trailing content after the claimed graph")
    try:
        return SiWitness(host, tuple(maps), claimed)
    except PreconditionError as e:
        raise GraphFormatError(f"witness: {e}")
