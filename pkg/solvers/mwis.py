"""
Maximum-weight independent set through modular and clique-separator
decomposition, with a trace of every reduction that fired.

Every solution uses the tie order of the tree DP: larger weight first, then
fewer vertices, then the lexicographically smaller sorted vertex tuple.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, FrozenSet, Iterable, Iterator, List, Literal, Optional, Tuple

from loguru import logger

from config.settings import settings
from graphs.graph import Graph, WeightedGraph, components_of, induced_subgraph
from structure.modules import top_level_partition
from structure.separators import find_clique_separator
from treewidth.exact import exact_treewidth
from treewidth.mwis_dp import Solution, better, mwis_treedp
from utils.errors import GuardExceededError, InvariantError

StepKind = Literal["complete", "parallel", "series", "prime-quotient", "clique-separator", "tree-dp"]
LEAF_KINDS = ("complete", "tree-dp")


@dataclass
class TraceStep:
    """One reduction applied to a vertex subset."""

    kind: StepKind
    vertices: Tuple[int, ...]
    weight: Fraction
    width: Optional[int] = None
    separator: Tuple[int, ...] = ()
    children: List["TraceStep"] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass
class DecompositionTrace:
    root: TraceStep

    def steps(self) -> Iterator[Tuple[int, TraceStep]]:
        """Preorder walk yielding (depth, step)."""
        stack = [(0, self.root)]
        while stack:
            depth, step = stack.pop()
            yield depth, step
            stack.extend((depth + 1, c) for c in reversed(step.children))

    def leaves(self) -> List[TraceStep]:
        return [step for _, step in self.steps() if not step.children]

    def max_width(self) -> int:
        """Largest treewidth met at a tree-DP leaf, -1 when none was needed."""
        widths = [s.width for s in self.leaves() if s.kind == "tree-dp" and s.width is not None]
        return max(widths, default=-1)

    def counts(self) -> Dict[str, int]:
        result: Dict[str, int] = {}
        for _, step in self.steps():
            result[step.kind] = result.get(step.kind, 0) + 1
        return dict(sorted(result.items()))

    def lines(self) -> List[str]:
        out = []
        for depth, step in self.steps():
            extra = ""
            if step.width is not None:
                extra += f" width={step.width}"
            if step.kind == "clique-separator":
                extra += f" separator={list(step.separator)}"
            out.append(f"{'  ' * depth}{step.kind} size={step.size} weight={step.weight}{extra}")
        return out


def _combine(solutions: Iterable[Solution]) -> Solution:
    weight = Fraction(0)
    members: List[int] = []
    for w, m in solutions:
        weight += w
        members.extend(m)
    return weight, tuple(sorted(members))


def _quotient_keys(solutions: List[Solution], n: int) -> Tuple[List[Fraction], int, int]:
    """
    Fold the tie order into one rational per module so that plain weight
    maximisation on the quotient agrees with ``solution_key`` on the union.

    A module solution (w, M) becomes w·scale - 2|M| + sum 2^-(v+1) over M.
    Weight gaps are at least 1/L, which the scale lifts above the size and
    index terms; for equal sizes the index term orders sets by their
    smallest differing vertex, which is the sorted-tuple order.

    Returns:
        (keys, scale, L)
    """
    lcd = lcm(*(w.denominator for w, _ in solutions)) if solutions else 1
    scale = (4 * n + 4) * lcd
    keys = []
    for w, members in solutions:
        if not members:
            keys.append(Fraction(0))
            continue
        bonus = sum(Fraction(1, 2 ** (v + 1)) for v in members)
        keys.append(w * scale - 2 * len(members) + bonus)
    return keys, scale, lcd


def _decode_key(key: Fraction, scale: int, lcd: int) -> Fraction:
    """Weight behind a quotient key; the size and index terms stay below 1/(2L)."""
    return Fraction(round(key * lcd / scale), lcd)


class MwisPipeline:
    """
    Memoized solver over vertex subsets of one weighted graph.

    Args:
        wg: Weighted graph to solve
        threads: Workers for the components of a disconnected input
    """

    def __init__(self, wg: WeightedGraph, threads: int = 1):
        self.wg = wg
        self.g = wg.graph
        self.threads = threads
        self.memo: Dict[FrozenSet[int], Tuple[Solution, TraceStep]] = {}

    def run(self) -> Tuple[Solution, DecompositionTrace]:
        solution, step = self.solve(frozenset(range(self.g.n)), top=True)
        return solution, DecompositionTrace(step)

    def solve(self, vertices: FrozenSet[int], top: bool = False) -> Tuple[Solution, TraceStep]:
        cached = self.memo.get(vertices)
        if cached is not None:
            return cached
        result = self._solve(vertices, top)
        self.memo[vertices] = result
        return result

    def _solve(self, vertices: FrozenSet[int], top: bool) -> Tuple[Solution, TraceStep]:
        scope = tuple(sorted(vertices))
        if self.g.is_clique(scope):
            best: Solution = (Fraction(0), ())
            for v in scope:
                candidate = (self.wg.weights[v], (v,))
                if better(best, candidate):
                    best = candidate
            return best, TraceStep("complete", scope, best[0])

        kind, children = top_level_partition(self.g, scope)
        if kind == "parallel":
            parts = [frozenset(c) for c in children]
            if top and self.threads > 1:
                with ThreadPoolExecutor(max_workers=self.threads) as pool:
                    results = list(pool.map(self.solve, parts))
            else:
                results = [self.solve(part) for part in parts]
            solution = _combine(s for s, _ in results)
            return solution, TraceStep("parallel", scope, solution[0], children=[t for _, t in results])

        if kind == "series":
            results = [self.solve(frozenset(c)) for c in children]
            solution: Solution = (Fraction(0), ())
            for s, _ in results:
                if better(solution, s):
                    solution = s
            return solution, TraceStep("series", scope, solution[0], children=[t for _, t in results])

        if any(len(c) > 1 for c in children):
            return self._solve_quotient(scope, children)
        return self._solve_prime(scope)

    def _solve_quotient(self, scope: Tuple[int, ...], children: List[List[int]]) -> Tuple[Solution, TraceStep]:
        results = [self.solve(frozenset(c)) for c in children]
        reps = [c[0] for c in children]
        quotient = Graph.from_edges(
            len(children),
            [(i, j) for i in range(len(reps)) for j in range(i + 1, len(reps)) if self.g.has_edge(reps[i], reps[j])],
        )
        keys, scale, lcd = _quotient_keys([s for s, _ in results], self.g.n)
        inner = MwisPipeline(WeightedGraph(quotient, tuple(keys)))
        (_, chosen), quotient_trace = inner.run()
        for _, inner_step in quotient_trace.steps():
            inner_step.weight = _decode_key(inner_step.weight, scale, lcd)
        solution = _combine(results[i][0] for i in chosen)
        logger.debug(f"Prime quotient on {len(children)} modules of a {len(scope)}-vertex piece")
        step = TraceStep("prime-quotient", scope, solution[0], children=[t for _, t in results])
        step.children.append(quotient_trace.root)
        return solution, step

    def _solve_prime(self, scope: Tuple[int, ...]) -> Tuple[Solution, TraceStep]:
        separator = find_clique_separator(self.g, scope)
        if separator is not None:
            rest = set(scope) - set(separator)
            options = [None] + list(separator)
            best: Optional[Solution] = None
            steps = []
            for x in options:
                remaining = rest if x is None else rest - self.g.adj[x]
                parts = [self.solve(frozenset(c)) for c in components_of(self.g, remaining)]
                head = [] if x is None else [(self.wg.weights[x], (x,))]
                candidate = _combine(head + [s for s, _ in parts])
                steps.extend(t for _, t in parts)
                if better(best, candidate):
                    best = candidate
            return best, TraceStep("clique-separator", scope, best[0], separator=separator, children=steps)

        if len(scope) > settings.TREEWIDTH_MAX_ORDER:
            raise GuardExceededError(
                f"atom {list(scope)} has {len(scope)} vertices; the tree DP is limited to "
                f"{settings.TREEWIDTH_MAX_ORDER}"
            )
        sub = WeightedGraph(induced_subgraph(self.g, scope), tuple(self.wg.weights[v] for v in scope))
        width, td = exact_treewidth(sub.graph)
        weight, members = mwis_treedp(sub, td)
        solution = (weight, tuple(scope[i] for i in members))
        logger.debug(f"Tree DP on a {len(scope)}-vertex atom of width {width}")
        return solution, TraceStep("tree-dp", scope, weight, width=width)


def _check_solution(wg: WeightedGraph, solution: Solution, what: str) -> None:
    weight, members = solution
    if not wg.graph.is_independent(members):
        raise InvariantError(f"{what} returned a set that is not independent: {list(members)}")
    if wg.weight_of(members) != weight:
        raise InvariantError(f"{what} reported weight {weight} but the set weighs {wg.weight_of(members)}")


def mwis(wg: WeightedGraph, threads: Optional[int] = None) -> Tuple[Fraction, Tuple[int, ...], DecompositionTrace]:
    """
    Exact maximum-weight independent set on any desk-scale graph.

    Args:
        wg: Weighted graph with nonnegative weights
        threads: Workers for the top-level components (defaults to settings.THREADS)

    Returns:
        (weight, sorted vertex tuple, trace)

    Raises:
        GuardExceededError: if an atom is too large for exact treewidth
    """
    pipeline = MwisPipeline(wg, settings.THREADS if threads is None else threads)
    solution, trace = pipeline.run()
    _check_solution(wg, solution, "mwis")
    logger.info(
        f"mwis on {wg.graph!r}: weight {solution[0]}, {len(solution[1])} vertices, "
        f"{len(pipeline.memo)} subproblems, max tree-DP width {trace.max_width()}"
    )
    return solution[0], solution[1], trace


def mis(g: Graph) -> Tuple[int, Tuple[int, ...], DecompositionTrace]:
    """Maximum independent set: mwis with unit weights."""
    weight, members, trace = mwis(WeightedGraph.unit(g))
    return int(weight), members, trace


def mwis_bruteforce(wg: WeightedGraph) -> Solution:
    """
    Exhaustive maximum-weight independent set under the shared tie order.

    Raises:
        GuardExceededError: above settings.MWIS_BRUTEFORCE_MAX_ORDER vertices
    """
    g = wg.graph
    if g.n > settings.MWIS_BRUTEFORCE_MAX_ORDER:
        raise GuardExceededError(
            f"brute-force MWIS limited to {settings.MWIS_BRUTEFORCE_MAX_ORDER} vertices, got {g.n}"
        )
    masks = g.masks
    best: List[Solution] = [(Fraction(0), ())]
    chosen: List[int] = []

    def extend(v: int, blocked: int, weight: Fraction) -> None:
        if v == g.n:
            candidate = (weight, tuple(chosen))
            if better(best[0], candidate):
                best[0] = candidate
            return
        if not blocked >> v & 1:
            chosen.append(v)
            extend(v + 1, blocked | masks[v], weight + wg.weights[v])
            chosen.pop()
        extend(v + 1, blocked, weight)

    extend(0, 0, Fraction(0))
    return best[0]
