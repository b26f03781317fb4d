"""Resource caps and output settings shared across the package."""

from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace
from typing import Iterator, Optional


def _env_threads() -> int:
    raw = os.environ.get("EXTAUTO_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class Config:
    order_cap: int = 512
    search_cap: int = 256
    sigma_cap: int = 10**7
    cochain_cap: int = 10**6
    output_format: str = "text"
    threads: int = 1
    heavy: bool = False

    def __post_init__(self):
        for name in ("order_cap", "search_cap", "sigma_cap", "cochain_cap", "threads"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


_current: contextvars.ContextVar[Optional[Config]] = contextvars.ContextVar(
    "extauto_config", default=None
)


def get_config() -> Config:
    cfg = _current.get()
    if cfg is None:
        cfg = Config(threads=_env_threads())
        _current.set(cfg)
    return cfg


@contextlib.contextmanager
def use_config(config: Optional[Config] = None, **overrides) -> Iterator[Config]:
    """Temporarily replace the active configuration.

    >>> with use_config(search_cap=1024):
    ...     pass
    """
    base = config if config is not None else get_config()
    cfg = replace(base, **overrides) if overrides else base
    token = _current.set(cfg)
    try:
        yield cfg
    finally:
        _current.reset(token)
