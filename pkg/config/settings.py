"""
Configuration module for the si-subgraph toolkit.
Loads environment variables and provides centralized settings and guards.
"""

import os
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Settings:
    """Centralized configuration: environment overrides plus fixed size guards."""

    # Environment overrides (the only ones; reports never depend on them)
    LOG_LEVEL: str = os.getenv("SI_LOG_LEVEL", "WARNING")
    LOG_FILE: Optional[str] = os.getenv("SI_LOG_FILE")
    THREADS: int = int(os.getenv("SI_THREADS", "1"))

    # si-engine guards
    SI_ORACLE_CAP: int = 50_000_000
    NAIVE_STEP_CAP: int = 20_000_000
    EMBEDDING_SEARCH_BUDGET: int = 2_000_000
    CONSTRUCTION_SEARCH_BUDGET: int = 5_000

    # graph-core guards
    ISOMORPHISM_MAX_ORDER: int = 64
    GRAPH6_MAX_ORDER: int = 62

    # treewidth / solvers guards
    TREEWIDTH_MAX_ORDER: int = 20
    MWIS_BRUTEFORCE_MAX_ORDER: int = 22
    MIM_MAX_EDGES: int = 24
    PROBE_MAX_ORDER: int = 7
    SAT_MAX_VARIABLES: int = 20

    @classmethod
    def validate(cls) -> bool:
        """
        Check that every guard is positive and the thread count is usable.

        Returns:
            True if the configuration is sane, otherwise False
        """
        numeric_fields = {
            "THREADS": cls.THREADS,
            "SI_ORACLE_CAP": cls.SI_ORACLE_CAP,
            "NAIVE_STEP_CAP": cls.NAIVE_STEP_CAP,
            "EMBEDDING_SEARCH_BUDGET": cls.EMBEDDING_SEARCH_BUDGET,
            "CONSTRUCTION_SEARCH_BUDGET": cls.CONSTRUCTION_SEARCH_BUDGET,
            "TREEWIDTH_MAX_ORDER": cls.TREEWIDTH_MAX_ORDER,
            "MWIS_BRUTEFORCE_MAX_ORDER": cls.MWIS_BRUTEFORCE_MAX_ORDER,
            "MIM_MAX_EDGES": cls.MIM_MAX_EDGES,
            "PROBE_MAX_ORDER": cls.PROBE_MAX_ORDER,
            "SAT_MAX_VARIABLES": cls.SAT_MAX_VARIABLES,
        }

        invalid_fields = [
            field for field, value in numeric_fields.items()
            if value < 1
        ]

        if invalid_fields:
            print(f"⚠️  Invalid configuration values: {', '.join(invalid_fields)}")
            return False

        return True

    @classmethod
    def print_config(cls) -> None:
        """Print the active configuration."""
        print("=" * 60)
        print("si-subgraph toolkit - Configuration")
        print("=" * 60)
        print(f"Log level: {cls.LOG_LEVEL}")
        print(f"Log file: {cls.LOG_FILE or '-'}")
        print(f"Threads: {cls.THREADS}")
        print(f"si oracle cap: {cls.SI_ORACLE_CAP}")
        print(f"Naive oracle step cap: {cls.NAIVE_STEP_CAP}")
        print(f"Embedding search budget: {cls.EMBEDDING_SEARCH_BUDGET}")
        print(f"Construction search budget: {cls.CONSTRUCTION_SEARCH_BUDGET}")
        print(f"Treewidth max order: {cls.TREEWIDTH_MAX_ORDER}")
        print(f"MWIS brute force max order: {cls.MWIS_BRUTEFORCE_MAX_ORDER}")
        print(f"MIM max edges: {cls.MIM_MAX_EDGES}")
        print(f"Probe max order: {cls.PROBE_MAX_ORDER}")
        print(f"SAT max variables: {cls.SAT_MAX_VARIABLES}")
        print("=" * 60)


# Create a singleton instance
settings = Settings()
