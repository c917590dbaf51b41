"""Run configuration shared by the library and the CLI."""

from __future__ import annotations

import contextlib
import os
from dataclasses import asdict, dataclass, replace


@dataclass(frozen=True)
class RunConfig:
    enumeration_budget: int = 2_000_000
    quotient_degree_budget: int = 10_000
    parallelism: int = 0  # 0 means os.cpu_count()
    include_stretch: bool = False
    verify_pr: bool = True  # cross-check every pr() with the centralizer-sum route

    def __post_init__(self):
        if self.enumeration_budget <= 0 or self.quotient_degree_budget <= 0:
            raise ValueError("budgets must be positive")
        if self.parallelism < 0:
            raise ValueError("parallelism must be >= 0")

    @property
    def workers(self) -> int:
        return self.parallelism or os.cpu_count() or 1

    def as_dict(self) -> dict:
        return asdict(self)


_current = RunConfig()


def get_config() -> RunConfig:
    return _current


def set_config(cfg: RunConfig) -> None:
    global _current
    _current = cfg


@contextlib.contextmanager
def use_config(cfg: RunConfig | None = None, **overrides):
    """Temporarily replace the active configuration."""
    global _current
    saved = _current
    _current = replace(cfg or saved, **overrides)
    try:
        yield _current
    finally:
        _current = saved
