"""Command-line surface: run configuration, handlers and verification suites."""

from .run_config import RunConfig, from_namespace, parse_int_list
from .commands import COMMANDS, LEMMAS, Report
from .suites import SUITES, SuiteCheck, run_suite
from .main import build_parser, main

__all__ = [
    "RunConfig", "from_namespace", "parse_int_list",
    "COMMANDS", "LEMMAS", "Report",
    "SUITES", "SuiteCheck", "run_suite",
    "build_parser", "main",
]
