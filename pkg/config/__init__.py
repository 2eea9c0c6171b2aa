"""Configuration module for the si-subgraph toolkit."""

from .settings import settings, Settings

__all__ = ["settings", "Settings"]
