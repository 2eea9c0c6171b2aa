"""
Run configuration: the parsed command line in one immutable record.

Reports depend only on this record, so two runs with the same RunConfig
print the same bytes.
"""

import argparse
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from config.settings import settings
from utils.errors import PreconditionError

PARAM_NAMES = ("t", "k", "p", "q", "r", "nmax", "seed", "budget")
DEFAULT_SEED = 0


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: Tuple[str, ...] = ()
    params: Dict[str, int] = field(default_factory=dict)
    output: Optional[str] = None
    verbosity: int = 0
    threads: int = 1
    timings: bool = False
    options: Dict[str, object] = field(default_factory=dict)

    @property
    def seed(self) -> int:
        return self.params.get("seed", DEFAULT_SEED)

    def param(self, name: str, default: Optional[int] = None) -> int:
        value = self.params.get(name, default)
        if value is None:
            raise PreconditionError(f"command '{self.command}' needs --{name}")
        return value

    def option(self, name: str, default=None):
        return self.options.get(name, default)


def parse_int_list(text: Optional[str]) -> Tuple[int, ...]:
    """Comma-separated integers ("1,2" -> (1, 2)); empty or None gives ()."""
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise PreconditionError(f"expected comma-separated integers, got '{text}'")


def from_namespace(args: argparse.Namespace, inputs: Sequence[str] = ()) -> RunConfig:
    """Collect the shared parameters; everything else lands in ``options``."""
    raw = vars(args)
    params = {name: raw[name] for name in PARAM_NAMES if raw.get(name) is not None}
    if raw.get("seed") is None and raw.get("command") == "verify":
        params["seed"] = DEFAULT_SEED
    reserved = set(PARAM_NAMES) | {"command", "out", "verbose", "threads", "timings", "show_config", "handler"}
    options = {key: value for key, value in raw.items() if key not in reserved}
    threads = settings.THREADS if raw.get("threads") is None else raw["threads"]
    if threads < 1:
        raise PreconditionError(f"--threads must be >= 1, got {threads}")
    return RunConfig(
        command=raw.get("command") or "",
        inputs=tuple(inputs),
        params=params,
        output=raw.get("out"),
        verbosity=raw.get("verbose") or 0,
        threads=threads,
        timings=bool(raw.get("timings")),
        options=options,
    )
