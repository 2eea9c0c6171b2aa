"""Utility modules for the si-subgraph toolkit."""

from .logger import setup_logger, logger
from .errors import (
    SiToolError,
    GraphFormatError,
    PreconditionError,
    GuardExceededError,
    InvariantError,
)
from .checks import CheckResult

__all__ = [
    "setup_logger",
    "logger",
    "SiToolError",
    "GraphFormatError",
    "PreconditionError",
    "GuardExceededError",
    "InvariantError",
    "CheckResult",
]
