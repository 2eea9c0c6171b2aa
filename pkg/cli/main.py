"""
Command-line entry point.

Exit codes: 0 success, 1 checks ran and failed, 2 bad input or violated
precondition, 3 size guard exceeded, 4 internal invariant breach. Output is
buffered and printed only on exit 0; otherwise a single ERROR line goes to
stderr.
"""

import argparse
import sys
import time
from typing import List, Optional, Sequence

from loguru import logger

from config.settings import settings
from utils.errors import GraphFormatError, GuardExceededError, InvariantError, PreconditionError, SiToolError
from utils.logger import setup_logger
from .commands import COMMANDS, Report
from .run_config import from_namespace
from .suites import SUITES

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_INVARIANT = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sitool",
        description="Self-intersection calculus toolkit: witnesses, certificates and solvers",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    parser.add_argument("--threads", type=int, default=None, help="Workers for the parallel regions")
    parser.add_argument("--timings", action="store_true", help="Include wall-clock times in verify reports")
    parser.add_argument("--show-config", action="store_true", help="Print the active configuration")
    sub = parser.add_subparsers(dest="command")

    gen = sub.add_parser("gen", help="Generate a named graph family")
    gen.add_argument("family")
    gen.add_argument("params", nargs="*", type=int)
    gen.add_argument("--out", help="Output file (.g6 for graph6, edge list otherwise)")

    analyze = sub.add_parser("analyze", help="Structural report and certificates")
    analyze.add_argument("file")
    analyze.add_argument("--t", type=int, default=None)

    tw = sub.add_parser("tw", help="Treewidth and a tree decomposition")
    tw.add_argument("file")
    tw.add_argument("--heuristic", action="store_true", help="Min-fill upper bound instead of the exact value")

    mwis = sub.add_parser("mwis", help="Maximum (weight) independent set")
    mwis.add_argument("file")
    mwis.add_argument("--weights", help="One rational weight per line")
    mwis.add_argument("--trace", action="store_true", help="Print the decomposition trace")

    mim = sub.add_parser("mim", help="Maximum induced matching (brute force)")
    mim.add_argument("file")

    si = sub.add_parser("si-check", help="Is PATTERN a self-intersection of HOST")
    si.add_argument("host")
    si.add_argument("pattern")
    si.add_argument("--out", help="Write the witness here when the answer is true")

    witness = sub.add_parser("witness", help="Build or check witness files")
    witness_sub = witness.add_subparsers(dest="action", required=True)
    make = witness_sub.add_parser("make")
    make.add_argument("--lemma", required=True)
    make.add_argument("--params", default="")
    make.add_argument("--out")
    check = witness_sub.add_parser("verify")
    check.add_argument("file")

    classify = sub.add_parser("classify", help="Dichotomy verdict for a forbidden list")
    classify.add_argument("--forbidden", required=True, help="Comma-separated graph files")

    probe = sub.add_parser("probe", help="Membership table over all small graphs")
    probe.add_argument("--forbidden", required=True, help="Comma-separated graph files")
    probe.add_argument("--nmax", type=int, default=None)
    probe.add_argument("--reference", choices=["p1p3"], default=None)
    probe.add_argument("--report", help="Write the full table here")

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--budget", type=int, default=None, help="Instance count override")
    verify.add_argument("--q", type=int, default=None)
    verify.add_argument("--nmax", type=int, default=None)

    sat = sub.add_parser("sat", help="Model count and incidence-graph report for a DIMACS file")
    sat.add_argument("file")
    return parser


def _inputs(args: argparse.Namespace) -> List[str]:
    return [getattr(args, name) for name in ("file", "host", "pattern") if getattr(args, name, None)]


def _exit_code(error: SiToolError) -> int:
    if isinstance(error, (GraphFormatError, PreconditionError)):
        return EXIT_INPUT
    if isinstance(error, GuardExceededError):
        return EXIT_GUARD
    if isinstance(error, InvariantError):
        return EXIT_INVARIANT
    return EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    levels = {0: None, 1: "INFO"}
    setup_logger(levels.get(args.verbose, "DEBUG"))

    if args.show_config:
        if not settings.validate():
            return EXIT_INPUT
        settings.print_config()
        if args.command is None:
            return EXIT_OK
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT

    name = args.command
    if name == "witness":
        name = f"witness-{args.action}"
    report = Report()
    start = time.perf_counter()
    try:
        cfg = from_namespace(args, _inputs(args))
        code = COMMANDS[name](cfg, report)
    except SiToolError as e:
        logger.opt(exception=e).debug(f"{name} failed")
        print(f"ERROR {name}: {e}", file=sys.stderr)
        return _exit_code(e)
    except OSError as e:
        print(f"ERROR {name}: {e}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        logger.info(f"{name} finished in {time.perf_counter() - start:.3f}s")

    if code != EXIT_OK:
        sys.stderr.write(report.render())
        print(f"ERROR {name}: checks failed", file=sys.stderr)
        return code
    sys.stdout.write(report.render())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
