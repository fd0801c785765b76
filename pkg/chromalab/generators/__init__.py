"""Deterministic, seedable instance families and their fixture files."""

from __future__ import annotations

from chromalab.generators.config import FAMILY_DEFAULTS, Family, GenConfig
from chromalab.generators.cross import gen_cross_pattern, staircase_omega
from chromalab.generators.families import gen
from chromalab.generators.fixtures import (
    FIXTURE_SCHEMA,
    FIXTURE_VERSION_DIR,
    Fixture,
    instance_id,
    iter_fixtures,
    read_fixture,
    write_fixture,
)

__all__ = [
    "FAMILY_DEFAULTS",
    "FIXTURE_SCHEMA",
    "FIXTURE_VERSION_DIR",
    "Family",
    "Fixture",
    "GenConfig",
    "gen",
    "gen_cross_pattern",
    "instance_id",
    "iter_fixtures",
    "read_fixture",
    "staircase_omega",
    "write_fixture",
]
