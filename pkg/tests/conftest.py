from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

from extauto import corpus_io

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DEFAULT_CORPUS = corpus_io.catalog_names(include_heavy=False)
SMALL_CORPUS = [n for n in DEFAULT_CORPUS if corpus_io.example(n).G.order <= 16]


@pytest.fixture(scope="session")
def corpus():
    """Default catalog extensions, built once per session."""
    return {name: corpus_io.example(name) for name in DEFAULT_CORPUS}
