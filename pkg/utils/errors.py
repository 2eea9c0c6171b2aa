"""
Exception hierarchy shared by every package.

The CLI maps each class to an exit code (see ``cli.main``).
"""

from typing import Optional


class SiToolError(Exception):
    """Base class for every toolkit error."""


class GraphFormatError(SiToolError, ValueError):
    """Malformed graph, weights or witness text."""


class PreconditionError(SiToolError, ValueError):
    """
    An operation was called on input violating its preconditions.

    Args:
        message: Human readable reason
        condition: Number of the violated instance condition, when one applies
    """

    def __init__(self, message: str, condition: Optional[int] = None):
        if condition is not None:
            message = f"condition {condition} violated: {message}"
        super().__init__(message)
        self.condition = condition


class GuardExceededError(SiToolError, RuntimeError):
    """A configured size or search guard was exceeded."""


class InvariantError(SiToolError, RuntimeError):
    """An internal result failed its own post-check."""
