"""
Command handlers.

Each handler fills a Report and returns 0, or 1 when the checks it ran
failed. Errors propagate as SiToolError subclasses and are turned into exit
codes by ``cli.main``.
"""

from pathlib import Path
from typing import Callable, Dict, List, Tuple

import networkx as nx
from loguru import logger

from config.settings import settings
from constructions import (
    build_biclique_path_instance,
    build_biclique_plus_vertex,
    build_clique_three_path_instance,
    build_peel_graph,
    tripod_threshold,
    witness_biclique_path,
    witness_biclique_plus_vertex,
    witness_clique_three_paths,
    witness_linegraph_spider,
    witness_peel,
    witness_XY_to_tripods,
)
from graphs import (
    WeightedGraph,
    format_fraction,
    gen_named,
    parse_weights,
    read_graph,
    serialize_graph,
    write_graph,
    x_graph,
    y_graph,
)
from graphs.io import format_for_path
from si_engine import SiWitness, parse_witness, serialize_witness, si_oracle, verify_witness
from solvers import (
    class_probe,
    count_sat_bruteforce,
    dichotomy_classify,
    incidence_graph,
    mim_bruteforce,
    mis,
    mwis,
    p1p3_references,
    parse_dimacs,
)
from structure import (
    bipartite_piece_report,
    certify_theorem31,
    certify_theorem37,
    clique_cutsets_upto,
    clique_number,
    clique_separator_atoms,
    cut_vertices,
    describe_certificate,
    false_twin_classes,
    modular_decomposition,
    report_theorem39,
    validate_certificate,
)
from treewidth import exact_treewidth, tw_upper_bound
from utils.errors import GraphFormatError, PreconditionError
from .run_config import RunConfig, parse_int_list
from .suites import run_suite


class Report:
    """Line-oriented report body followed by ``RESULT key=value`` lines."""

    def __init__(self):
        self.body: List[str] = []
        self.results: List[Tuple[str, str]] = []

    def line(self, text: str = "") -> None:
        self.body.append(text)

    def banner(self, title: str) -> None:
        self.body.extend(["=" * 60, title, "=" * 60])

    def result(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.results.append((key, str(value)))

    def render(self) -> str:
        lines = self.body + [f"RESULT {k}={v}" for k, v in self.results]
        return "\n".join(lines) + "\n" if lines else ""


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e}")


def _vertex_list(vertices) -> str:
    return ",".join(str(v) for v in vertices)


# ---------------------------------------------------------------------------
# Graph commands


def cmd_gen(cfg: RunConfig, report: Report) -> int:
    family = cfg.option("family")
    params = [int(x) for x in cfg.option("params", [])]
    g = gen_named(family, params)
    if cfg.output:
        write_graph(g, cfg.output)
        report.line(f"wrote {g.name} to {cfg.output} ({format_for_path(cfg.output)})")
    else:
        report.line(serialize_graph(g).rstrip("\n"))
    report.result("family", family)
    report.result("n", g.n)
    report.result("m", g.m)
    return 0


def cmd_analyze(cfg: RunConfig, report: Report) -> int:
    g = read_graph(cfg.inputs[0])
    t = cfg.param("t", 1)
    report.banner(f"analysis of {g.name} (n={g.n}, m={g.m}, t={t})")

    twins = [c for c in false_twin_classes(g) if len(c) > 1]
    report.line(f"false twin classes: {[list(c) for c in twins]}")
    cuts = cut_vertices(g)
    report.line(f"cut vertices: {cuts}")
    small = clique_cutsets_upto(g, 2)
    report.line(f"clique cutsets of size <= 2: {[list(c) for c in small]}")
    atoms = clique_separator_atoms(g)
    report.line(f"atoms: {[list(a) for a in atoms.atoms]}")
    tree = modular_decomposition(g)
    root_kind = tree.root.kind if tree.root is not None else "empty"
    report.line(f"modular decomposition root: {root_kind} with {len(tree.strong_modules())} strong module(s)")
    omega = clique_number(g)
    report.line(f"clique number: {omega}")

    if g.n <= settings.TREEWIDTH_MAX_ORDER:
        width, _ = exact_treewidth(g)
        exact = True
    else:
        width, _ = tw_upper_bound(g)
        exact = False
    report.line(f"treewidth: {width} ({'exact' if exact else 'upper bound'})")

    outcomes: Dict[str, str] = {}
    for name, certify in (("theorem31", certify_theorem31), ("theorem37", certify_theorem37)):
        try:
            cert = certify(g, t)
        except PreconditionError as e:
            report.line(f"{name}: skipped ({e})")
            outcomes[name] = "skipped"
            continue
        check = validate_certificate(g, cert, t)
        report.line(f"{name}: {describe_certificate(cert)} revalidated={bool(check)}")
        outcomes[name] = type(cert).__name__

    report.line("structure report:")
    for text in report_theorem39(g, t).lines():
        report.line(f"  {text}")

    if nx.is_bipartite(g.to_networkx()):
        report.line("bipartite pieces:")
        for piece in bipartite_piece_report(g, t):
            report.line(
                f"  {_vertex_list(piece.vertices)}: biclique={piece.is_biclique} width={piece.width} "
                f"kpp_free={piece.kpp_free} tripod_free={piece.tripod_free}"
            )

    report.result("n", g.n)
    report.result("m", g.m)
    report.result("twin_free", not twins)
    report.result("clique_number", omega)
    report.result("width", width)
    report.result("width_exact", exact)
    for name, outcome in outcomes.items():
        report.result(name, outcome)
    return 0


def cmd_tw(cfg: RunConfig, report: Report) -> int:
    g = read_graph(cfg.inputs[0])
    if cfg.option("heuristic"):
        width, td = tw_upper_bound(g)
        exact = False
    else:
        width, td = exact_treewidth(g)
        exact = True
    for i, bag in enumerate(td.bags):
        report.line(f"bag {i}: {_vertex_list(sorted(bag))}")
    for a, b in td.edges:
        report.line(f"tree edge {a}-{b}")
    report.result("width", width)
    report.result("exact", exact)
    return 0


def cmd_mwis(cfg: RunConfig, report: Report) -> int:
    g = read_graph(cfg.inputs[0])
    weights_path = cfg.option("weights")
    if weights_path:
        wg = WeightedGraph(g, parse_weights(_read_text(weights_path), g.n))
        weight, members, trace = mwis(wg, threads=cfg.threads)
        weight_text = format_fraction(weight)
    else:
        size, members, trace = mis(g)
        weight_text = str(size)
    if cfg.option("trace"):
        report.line("decomposition trace:")
        for text in trace.lines():
            report.line(f"  {text}")
    for kind, count in trace.counts().items():
        report.line(f"steps {kind}: {count}")
    report.result("weight", weight_text)
    report.result("set", _vertex_list(members))
    report.result("max_width", trace.max_width())
    return 0


def cmd_mim(cfg: RunConfig, report: Report) -> int:
    g = read_graph(cfg.inputs[0])
    size, matching = mim_bruteforce(g)
    report.result("size", size)
    report.result("edges", ",".join(f"{u}-{v}" for u, v in matching))
    return 0


def cmd_si_check(cfg: RunConfig, report: Report) -> int:
    host = read_graph(cfg.inputs[0])
    pattern = read_graph(cfg.inputs[1])
    answer, witness = si_oracle(host, pattern)
    if witness is not None and cfg.output:
        Path(cfg.output).write_text(serialize_witness(witness), encoding="utf-8")
        report.line(f"witness with {witness.k} copies written to {cfg.output}")
    report.result("si", answer)
    return 0


# ---------------------------------------------------------------------------
# Witnesses


def _lemma_biclique_path(params: Tuple[int, ...]) -> SiWitness:
    t = params[0]
    length = params[1] if len(params) > 1 else 2
    return witness_biclique_path(build_biclique_path_instance(t, length))


def _lemma_peel(params: Tuple[int, ...]) -> SiWitness:
    a_size, b_size, neighbours, keep = params[:4]
    clique = len(params) > 4 and params[4] == 1
    graph, A, B, v = build_peel_graph(a_size, b_size, neighbours, clique=clique)
    return witness_peel(graph, A, B, v, A[:keep])


def _lemma_xy(params: Tuple[int, ...]) -> SiWitness:
    t = params[0]
    use_y = len(params) > 1 and params[1] == 1
    p = tripod_threshold(t) + (params[2] if len(params) > 2 else 0)
    h = y_graph(p) if use_y else x_graph(p)
    return witness_XY_to_tripods(h, t)


def _lemma_plus_vertex(params: Tuple[int, ...]) -> SiWitness:
    p, nbrs_a, nbrs_b = params[:3]
    graph, A, B, v = build_biclique_plus_vertex(p, nbrs_a, nbrs_b)
    witness, tag = witness_biclique_plus_vertex(graph, A, B, v, p)
    logger.info(f"Biclique plus vertex reached the {tag}_{p} graph")
    return witness


def _lemma_clique_paths(params: Tuple[int, ...]) -> SiWitness:
    t = params[0]
    lengths = params[1:4] if len(params) >= 4 else (1, 1, 1)
    return witness_clique_three_paths(build_clique_three_path_instance(t, lengths))


def _lemma_linegraph(params: Tuple[int, ...]) -> SiWitness:
    return witness_linegraph_spider(params[0], params[1])


# lemma id -> (builder, minimum parameter count, parameter help)
LEMMAS: Dict[str, Tuple[Callable[[Tuple[int, ...]], SiWitness], int, str]] = {
    "3.2": (_lemma_biclique_path, 1, "t[,path_vertices]"),
    "3.3": (_lemma_peel, 4, "a,b,neighbours,keep[,clique]"),
    "3.5": (_lemma_xy, 1, "t[,use_y[,extra]]"),
    "3.6": (_lemma_plus_vertex, 3, "p,nbrs_a,nbrs_b"),
    "3.8": (_lemma_clique_paths, 1, "t[,l1,l2,l3]"),
    "3.10": (_lemma_linegraph, 2, "t,q"),
}


def cmd_witness_make(cfg: RunConfig, report: Report) -> int:
    lemma = cfg.option("lemma")
    if lemma not in LEMMAS:
        raise PreconditionError(f"unknown lemma '{lemma}' (known: {', '.join(LEMMAS)})")
    builder, arity, usage = LEMMAS[lemma]
    params = parse_int_list(cfg.option("params"))
    if len(params) < arity:
        raise PreconditionError(f"lemma {lemma} takes parameters {usage}, got {list(params)}")
    witness = builder(params)
    text = serialize_witness(witness)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
        report.line(f"witness written to {cfg.output}")
    else:
        report.line(text.rstrip("\n"))
    report.result("lemma", lemma)
    report.result("copies", witness.k)
    report.result("claimed_n", witness.claimed.n)
    report.result("verified", bool(verify_witness(witness)))
    return 0


def cmd_witness_verify(cfg: RunConfig, report: Report) -> int:
    witness = parse_witness(_read_text(cfg.inputs[0]))
    check = verify_witness(witness)
    if not check:
        report.line(f"diagnostic: {check.diagnostic}")
    report.result("copies", witness.k)
    report.result("verified", bool(check))
    return 0 if check else 1


# ---------------------------------------------------------------------------
# Classes


def _forbidden(cfg: RunConfig):
    paths = [p for p in (cfg.option("forbidden") or "").split(",") if p]
    if not paths:
        raise PreconditionError("--forbidden needs at least one graph file")
    return [read_graph(p) for p in paths]


def cmd_classify(cfg: RunConfig, report: Report) -> int:
    verdict = dichotomy_classify(_forbidden(cfg))
    for text in verdict.lines():
        key, _, value = text.partition("=")
        report.result(key, value)
    return 0


def cmd_probe(cfg: RunConfig, report: Report) -> int:
    forbidden = _forbidden(cfg)
    references = p1p3_references() if cfg.option("reference") == "p1p3" else None
    table = class_probe(forbidden, cfg.param("nmax", 5), references)
    lines = table.lines()
    target = cfg.option("report")
    if target:
        rows = [
            f"{row.graph.name} n={row.graph.n} "
            + " ".join(f"{mode}={row.membership[mode]}" for mode in ("induced", "subgraph", "si"))
            for row in table.rows
        ]
        Path(target).write_text("\n".join(lines + rows) + "\n", encoding="utf-8")
    for text in lines:
        report.line(text)
    report.result("classes", len(table.rows))
    report.result("mismatches", sum(len(v) for v in table.mismatches.values()))
    return 0


def cmd_sat(cfg: RunConfig, report: Report) -> int:
    cnf = parse_dimacs(_read_text(cfg.inputs[0]))
    count = count_sat_bruteforce(cnf)
    g = incidence_graph(cnf)
    report.line(f"incidence graph: n={g.n} m={g.m}")
    for piece in bipartite_piece_report(g, 1):
        report.line(
            f"  piece {_vertex_list(piece.vertices)}: biclique={piece.is_biclique} width={piece.width} "
            f"kpp_free={piece.kpp_free} tripod_free={piece.tripod_free}"
        )
    report.result("variables", cnf.num_vars)
    report.result("clauses", len(cnf.clauses))
    report.result("models", count)
    return 0


def cmd_verify(cfg: RunConfig, report: Report) -> int:
    suite = cfg.option("suite")
    checks = run_suite(suite, cfg)
    report.banner(f"suite {suite} seed={cfg.seed}")
    for check in checks:
        report.line(check.line(cfg.timings))
    failed = [c.name for c in checks if not c.passed]
    report.result("suite", suite)
    report.result("checks", len(checks))
    report.result("failed", len(failed))
    if failed:
        logger.warning(f"Suite {suite}: {len(failed)} failing check(s): {', '.join(failed[:10])}")
    return 1 if failed else 0


COMMANDS: Dict[str, Callable[[RunConfig, Report], int]] = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "tw": cmd_tw,
    "mwis": cmd_mwis,
    "mim": cmd_mim,
    "si-check": cmd_si_check,
    "witness-make": cmd_witness_make,
    "witness-verify": cmd_witness_verify,
    "classify": cmd_classify,
    "probe": cmd_probe,
    "sat": cmd_sat,
    "verify": cmd_verify,
}
