"""
Certifying forms of the structure theorems.

Each certifier returns either the structural conclusion (as a re-checkable
certificate) or a Refutation: a verified witness that tS_{t,t,t} is a
self-intersection of the input graph.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from loguru import logger

from config.settings import settings
from constructions.biclique import (
    witness_biclique_path,
    witness_biclique_plus_vertex,
    witness_XY_to_tripods,
)
from constructions.clique import witness_clique_plus_vertex, witness_clique_three_paths
from constructions.instances import (
    BicliquePathInstance,
    CliqueThreePathInstance,
    biclique_size,
    clique_bound,
    relabel_instance_map,
    tripod_threshold,
)
from graphs.generators import complete_bipartite, spider, tripod_forest
from graphs.graph import EmbeddingMode, Graph, disjoint_union, induced_subgraph, line_graph
from graphs.matching import find_embedding, is_isomorphic
from si_engine.witness import SiWitness, chain_witnesses, verify_witness, witness_induced
from treewidth.decomposition import TreeDecomposition, validate_decomposition
from treewidth.exact import exact_treewidth, tw_upper_bound
from utils.checks import CheckResult
from utils.errors import PreconditionError
from .cliques import Biclique, clique_number, maximal_cliques, maximal_induced_bicliques
from .modules import false_twin_classes, is_module
from .paths import lex_shortest_path
from .separators import clique_cutsets_upto, cut_vertices


@dataclass(frozen=True)
class ModuleCert:
    """Every large maximal induced biclique, each of whose unions is a module."""

    bicliques: Tuple[Biclique, ...]
    threshold: int


@dataclass(frozen=True)
class KrFreeCert:
    """Exhaustive clique search found no clique of size r."""

    r: int
    clique_number: int


@dataclass(frozen=True)
class CompleteCert:
    n: int


@dataclass(frozen=True)
class TwBoundCert:
    width: int
    decomposition: TreeDecomposition


@dataclass(frozen=True)
class Refutation:
    """Witness that tS_{t,t,t} is a self-intersection, plus the proof case that built it."""

    witness: SiWitness
    t: int
    case: str = ""


Certificate = Union[ModuleCert, KrFreeCert, CompleteCert, TwBoundCert, Refutation]


def describe_certificate(cert: Certificate) -> str:
    if isinstance(cert, ModuleCert):
        return f"module ({len(cert.bicliques)} biclique(s) with parts >= {cert.threshold})"
    if isinstance(cert, KrFreeCert):
        return f"K{cert.r}-free (clique number {cert.clique_number})"
    if isinstance(cert, CompleteCert):
        return f"complete (K{cert.n})"
    if isinstance(cert, TwBoundCert):
        return f"treewidth <= {cert.width}"
    return f"refutation ({cert.case}, {cert.witness.k} copies)"


# ---------------------------------------------------------------------------
# Bicliques are modules


def _mixed_vertices(g: Graph, vertices: Sequence[int]) -> List[int]:
    chosen = set(vertices)
    return [
        u for u in range(g.n)
        if u not in chosen and g.adj[u] & chosen and len(g.adj[u] & chosen) != len(chosen)
    ]


def _trim_keeping(part: Sequence[int], size: int, required: Sequence[int]) -> List[int]:
    chosen = [u for u in required if u in part]
    chosen.extend(u for u in sorted(part) if u not in chosen)
    return sorted(chosen[:size])


def _refute_single_neighbour(g: Graph, A: Sequence[int], B: Sequence[int], x: int, y: int, t: int) -> SiWitness:
    """x has one neighbour y in A ∪ B: a shortest path in G - y back to the biclique gives the path C."""
    ab = set(A) | set(B)
    allowed = set(range(g.n)) - {y}
    route = lex_shortest_path(g, [x], ab - {y}, allowed)
    if route is None:
        raise PreconditionError(f"no path from {x} back to the biclique avoiding {y}; is the graph 2-connected?")
    k = len(route) - 1
    j = max(i for i in range(0, k - 1) if g.has_edge(route[i], y))
    C = route[j:k]
    end = route[k]
    s = biclique_size(t)
    keep_a = _trim_keeping(A, s, [y, end])
    keep_b = _trim_keeping(B, s, [y, end])
    chosen = keep_a + keep_b + C
    index = relabel_instance_map(chosen)
    sub = induced_subgraph(g, chosen, f"biclique-path(t={t})")
    inst = BicliquePathInstance(
        sub,
        tuple(sorted(index[u] for u in keep_a)),
        tuple(sorted(index[u] for u in keep_b)),
        tuple(index[u] for u in C),
        t,
    )
    return chain_witnesses(witness_induced(g, chosen), witness_biclique_path(inst))


def certify_theorem31(g: Graph, t: int) -> Certificate:
    """
    Either every maximal induced biclique with both parts of size at least
    3t^2+t+1 is a module, or tS_{t,t,t} is a self-intersection of ``g``.

    Args:
        g: Connected graph without cut vertices
        t: Tripod parameter (>= 1)

    Returns:
        ModuleCert or Refutation

    Raises:
        PreconditionError: if g is disconnected or has a cut vertex
    """
    if t < 1:
        raise PreconditionError(f"t must be >= 1, got {t}")
    if not g.is_connected():
        raise PreconditionError(f"{g!r} is not connected")
    cuts = cut_vertices(g)
    if cuts:
        raise PreconditionError(f"{g!r} has cut vertices {cuts}")

    threshold = tripod_threshold(t)
    bicliques = maximal_induced_bicliques(g, threshold, threshold)
    for A, B in bicliques:
        mixed = _mixed_vertices(g, A + B)
        if not mixed:
            continue
        x = mixed[0]
        touched = sorted(g.adj[x] & (set(A) | set(B)))
        logger.info(f"Biclique {list(A)} | {list(B)} is split by vertex {x} ({len(touched)} neighbour(s))")
        if len(touched) >= 2:
            first, tag = witness_biclique_plus_vertex(g, A, B, x, threshold)
            witness = chain_witnesses(first, witness_XY_to_tripods(first.claimed, t))
            return Refutation(witness, t, f"two or more neighbours ({tag}_{threshold})")
        witness = _refute_single_neighbour(g, A, B, x, touched[0], t)
        return Refutation(witness, t, "single neighbour")
    logger.info(f"All {len(bicliques)} large maximal biclique(s) of {g!r} are modules")
    return ModuleCert(tuple(bicliques), threshold)


def certify_theorem31_components(g: Graph, t: int) -> List[Tuple[Tuple[int, ...], Certificate]]:
    """Run certify_theorem31 on every connected component (each must be free of cut vertices)."""
    result = []
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        result.append((tuple(comp), certify_theorem31(sub, t)))
    return result


# ---------------------------------------------------------------------------
# Complete or K_r-free


def _clique_instance(g: Graph, A: Sequence[int], w: int, paths: Sequence[Sequence[int]], t: int) -> Tuple[List[int], CliqueThreePathInstance]:
    chosen = sorted(set(A) | {u for q in paths for u in q})
    index = relabel_instance_map(chosen)
    sub = induced_subgraph(g, chosen, f"clique-three-paths(t={t})")
    inst = CliqueThreePathInstance(
        sub,
        tuple(sorted(index[u] for u in A)),
        index[w],
        tuple(tuple(index[u] for u in q) for q in paths),
        t,
    )
    return chosen, inst


def _shortest_ear(g: Graph, clique: Sequence[int]) -> List[int]:
    """Shortest path with both ends in the clique and at least one vertex, all inner ones, outside it."""
    A = set(clique)
    outside = set(range(g.n)) - A
    best: Optional[List[int]] = None
    for y1 in sorted(A):
        starts = g.adj[y1] & outside
        exits = [u for u in outside if g.adj[u] & (A - {y1})]
        route = lex_shortest_path(g, starts, exits, outside)
        if route is None:
            continue
        ear = [y1] + route + [min(g.adj[route[-1]] & (A - {y1}))]
        if best is None or (len(ear), ear) < (len(best), best):
            best = ear
    if best is None:
        raise PreconditionError("no path leaves the clique and returns; the graph has a small clique cutset")
    return best


def certify_theorem37(g: Graph, t: int) -> Certificate:
    """
    Without clique cutsets of size at most 2, ``g`` is complete, or
    K_r-free with r = 3t^2+t+2, or tS_{t,t,t} is a self-intersection of it.

    Raises:
        PreconditionError: if g has a clique cutset of size <= 2
    """
    if t < 1:
        raise PreconditionError(f"t must be >= 1, got {t}")
    small = clique_cutsets_upto(g, 2)
    if small:
        raise PreconditionError(f"{g!r} has clique cutset(s) of size <= 2, first {list(small[0])}")
    if g.is_complete():
        return CompleteCert(g.n)

    r = clique_bound(t)
    big = [c for c in maximal_cliques(g) if len(c) >= r]
    if not big:
        omega = clique_number(g)
        logger.info(f"{g!r} is K{r}-free (clique number {omega})")
        return KrFreeCert(r, omega)

    clique = big[0]
    A = set(clique)
    outside = [u for u in range(g.n) if u not in A]
    counts = {u: len(g.adj[u] & A) for u in outside}

    many = [u for u in outside if counts[u] >= 3]
    if many:
        w = many[0]
        keep = sorted(g.adj[w] & A)[:3]
        chosen = sorted(A | {w})
        index = relabel_instance_map(chosen)
        first = witness_induced(g, chosen)
        peel = witness_clique_plus_vertex(first.claimed, [index[a] for a in sorted(A)], index[w], [index[y] for y in keep])
        inst = CliqueThreePathInstance(
            peel.claimed,
            tuple(sorted(index[a] for a in A)),
            index[w],
            tuple((index[w], index[y]) for y in keep),
            t,
        )
        witness = chain_witnesses(first, peel, witness_clique_three_paths(inst))
        return Refutation(witness, t, "three or more clique neighbours")

    two = [u for u in outside if counts[u] == 2]
    if two:
        w = two[0]
        y1, y2 = sorted(g.adj[w] & A)
        route = lex_shortest_path(g, [w], A - {y1, y2}, set(range(g.n)) - {y1, y2})
        if route is None:
            raise PreconditionError(f"{{{y1}, {y2}}} separates {w} from the clique")
        z, y3 = route[-2], route[-1]
        extra = sorted(g.adj[z] & (A - {y1, y2, y3}))
        trimmed = A - set(extra)
        chosen, inst = _clique_instance(g, sorted(trimmed), w, [(w, y1), (w, y2), tuple(route)], t)
        witness = chain_witnesses(witness_induced(g, chosen), witness_clique_three_paths(inst))
        return Refutation(witness, t, "two clique neighbours")

    ear = _shortest_ear(g, clique)
    y1, y2 = ear[0], ear[-1]
    inner = ear[1:-1]
    route = lex_shortest_path(g, inner, A - {y1, y2}, set(range(g.n)) - {y1, y2})
    if route is None:
        raise PreconditionError(f"{{{y1}, {y2}}} separates the ear from the clique")
    w = route[0]
    i = ear.index(w)
    q1 = tuple(reversed(ear[:i + 1]))
    q2 = tuple(ear[i:])
    chosen, inst = _clique_instance(g, sorted(A), w, [q1, q2, tuple(route)], t)
    witness = chain_witnesses(witness_induced(g, chosen), witness_clique_three_paths(inst))
    return Refutation(witness, t, "at most one clique neighbour each")


# ---------------------------------------------------------------------------
# Main structure report


@dataclass
class Theorem39Report:
    """Hypotheses, observed width and exclusion checks for one graph."""

    t: int
    r: int
    twin_classes: List[Tuple[int, ...]] = field(default_factory=list)
    small_clique_cutsets: List[Tuple[int, ...]] = field(default_factory=list)
    complete: bool = False
    width: Optional[int] = None
    width_exact: bool = False
    decomposition: Optional[TreeDecomposition] = None
    clique_number: Optional[int] = None
    kr_free: Optional[bool] = None
    krr_free: Optional[bool] = None
    linegraph_free: Optional[bool] = None
    linegraph_variant_free: Optional[bool] = None

    @property
    def twin_free(self) -> bool:
        return all(len(c) == 1 for c in self.twin_classes)

    @property
    def hypotheses_hold(self) -> bool:
        return self.twin_free and not self.small_clique_cutsets

    @property
    def exclusions_pass(self) -> bool:
        return bool(self.kr_free and self.krr_free and self.linegraph_free)

    def lines(self) -> List[str]:
        out = [
            f"hypotheses: twin-free={self.twin_free} small-clique-cutsets={len(self.small_clique_cutsets)}",
        ]
        if not self.hypotheses_hold:
            out.append("branch: hypotheses fail")
            return out
        if self.complete:
            out.append("branch: complete")
            return out
        kind = "exact" if self.width_exact else "upper-bound"
        out.append(f"treewidth ({kind}): {self.width}")
        out.append(f"K{self.r}-free: {self.kr_free} (clique number {self.clique_number})")
        out.append(f"induced K{self.r},{self.r}-free: {self.krr_free}")
        out.append(f"induced L({self.t}S{self.t + 1},{self.t + 1},{self.t + 1})-free: {self.linegraph_free}")
        out.append(f"induced L({self.t}S{self.t + 1},{self.t + 1},{self.t})-free: {self.linegraph_variant_free} (informational)")
        return out


def _induced_free(pattern: Graph, g: Graph) -> bool:
    if pattern.n > g.n:
        return True
    found = find_embedding(pattern, g, EmbeddingMode.INDUCED, budget=settings.EMBEDDING_SEARCH_BUDGET)
    return found is None


def report_theorem39(g: Graph, t: int) -> Theorem39Report:
    """
    Check the hypotheses (no false twins, no clique cutset of size <= 2)
    and, for incomplete graphs meeting them, report the treewidth and the
    exclusions a member of the class must satisfy. Failures are reported,
    never raised.
    """
    report = Theorem39Report(t=t, r=clique_bound(t))
    report.twin_classes = false_twin_classes(g)
    report.small_clique_cutsets = clique_cutsets_upto(g, 2)
    if not report.hypotheses_hold:
        return report
    if g.is_complete():
        report.complete = True
        return report

    if g.n <= settings.TREEWIDTH_MAX_ORDER:
        report.width, report.decomposition = exact_treewidth(g)
        report.width_exact = True
    else:
        report.width, report.decomposition = tw_upper_bound(g)
    r = report.r
    report.clique_number = clique_number(g)
    report.kr_free = report.clique_number < r
    report.krr_free = _induced_free(complete_bipartite(r, r), g)
    q = t + 1
    report.linegraph_free = _induced_free(line_graph(disjoint_union([spider(q, q, q)] * t)), g)
    report.linegraph_variant_free = _induced_free(line_graph(disjoint_union([spider(q, q, t)] * t)), g)
    logger.info(f"Structure report for {g!r}: width {report.width}, exclusions pass={report.exclusions_pass}")
    return report


# ---------------------------------------------------------------------------
# Independent re-checking


def validate_certificate(g: Graph, cert: Certificate, t: int) -> CheckResult:
    """Re-check a certificate against ``g`` without trusting how it was built."""
    if isinstance(cert, ModuleCert):
        expected = maximal_induced_bicliques(g, cert.threshold, cert.threshold)
        if sorted(cert.bicliques) != expected:
            return CheckResult.failed("biclique list differs from a fresh enumeration")
        for A, B in cert.bicliques:
            if not is_module(g, A + B):
                return CheckResult.failed(f"biclique {list(A)} | {list(B)} is not a module")
        return CheckResult.passed()
    if isinstance(cert, KrFreeCert):
        omega = clique_number(g)
        if omega != cert.clique_number or omega >= cert.r:
            return CheckResult.failed(f"clique number is {omega}, certificate says {cert.clique_number} < {cert.r}")
        return CheckResult.passed()
    if isinstance(cert, CompleteCert):
        if not g.is_complete() or g.n != cert.n:
            return CheckResult.failed("graph is not complete")
        return CheckResult.passed()
    if isinstance(cert, TwBoundCert):
        check = validate_decomposition(g, cert.decomposition)
        if not check:
            return check
        if cert.decomposition.width > cert.width:
            return CheckResult.failed(f"decomposition has width {cert.decomposition.width} > {cert.width}")
        return CheckResult.passed()
    if cert.witness.host != g:
        return CheckResult.failed("refutation witness is for a different host graph")
    if is_isomorphic(cert.witness.claimed, tripod_forest(t)) is None:
        return CheckResult.failed(f"refutation claims something other than {t}S{t},{t},{t}")
    return verify_witness(cert.witness)
