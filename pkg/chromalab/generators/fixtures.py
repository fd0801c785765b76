"""Versioned fixture files: a generator header plus the spec it produced.

Layout::

    {"schema": 1, "generator": {"family": ..., "seed": ..., "params": {...},
     "prng": "PCG64"}, "spec": {...}}

Fixtures live in ``fixtures/v1/``; the file stem is the instance id.
"""

from __future__ import annotations

import json
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from chromalab.errors import InvalidSpecError
from chromalab.exp.logging import get_logger
from chromalab.generators.config import FAMILY_DEFAULTS, GenConfig
from chromalab.generators.families import Spec, gen
from chromalab.structure.serialization import spec_from_dict, spec_to_dict

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

FIXTURE_SCHEMA = 1
FIXTURE_VERSION_DIR = "v1"


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Fixture:
    """A stored instance.

    Args:
        instance_id: File stem, unique per family, seed and parameter overrides.
        config: The generator config that produced ``spec``.
        spec: The instance.
        path: Where it was read from.
    """

    instance_id: str
    config: GenConfig
    spec: Spec
    path: Path


# ------------------------------------------------------------------------------
def instance_id(config: GenConfig) -> str:
    """``<family>-seed<seed>`` followed by every parameter that differs from its default.

    Parameters are sorted by name, so a config and its resolved form share one id.
    """
    defaults = FAMILY_DEFAULTS[config.family]
    changed = sorted((k, v) for k, v in config.resolved.items() if defaults[k] != v)
    overrides = "".join(f"-{k}{v}" for k, v in changed)
    return f"{config.family}-seed{config.seed}{overrides}"


# ------------------------------------------------------------------------------
def fixture_text(config: GenConfig, spec: Spec) -> str:
    data = {"schema": FIXTURE_SCHEMA, "generator": config.to_dict(), "spec": spec_to_dict(spec)}
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------------------
def write_fixture(out_dir: Path, config: GenConfig, spec: Spec | None = None) -> Path:
    """Write one fixture into ``out_dir``; the spec is generated when not given.

    Returns:
        The written path.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{instance_id(config)}.json"
    logger.info("Writing fixture: %s", path)
    path.write_text(fixture_text(config, gen(config) if spec is None else spec), encoding="utf-8")
    return path


# ------------------------------------------------------------------------------
def read_fixture(path: Path) -> Fixture:
    """Load a fixture written by :func:`write_fixture`.

    Raises:
        InvalidSpecError: On an unknown schema or a malformed file.
    """
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidSpecError(f"{path}: not JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict) or data.get("schema") != FIXTURE_SCHEMA:
        raise InvalidSpecError(f"{path}: expected a schema {FIXTURE_SCHEMA} fixture")
    try:
        config = GenConfig.from_dict(data["generator"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpecError(f"{path}: bad generator header: {exc}") from exc
    return Fixture(
        instance_id=path.stem, config=config, spec=spec_from_dict(data["spec"]), path=path
    )


# ------------------------------------------------------------------------------
def iter_fixtures(directory: Path) -> Iterator[Fixture]:
    """Fixtures under ``directory`` (recursively), ordered by instance id."""
    for path in sorted(directory.rglob("*.json"), key=lambda p: p.stem):
        yield read_fixture(path)
