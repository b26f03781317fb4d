"""Automorphisms of group extensions: factor systems, cohomology and compatible pairs."""

from __future__ import annotations

from .config import Config, get_config, use_config
from .corpus_io import example, parse, serialize
from .extensions import Extension, FactorSystem, make_extension

__all__ = [
    "Config",
    "Extension",
    "FactorSystem",
    "example",
    "get_config",
    "make_extension",
    "parse",
    "serialize",
    "use_config",
]

__version__ = "0.1.0"
