"""Seeded instance families.

Every spec is checked before it is returned: blowups for the family's weight
constraints and freeness of the realization, bracelets with
:func:`~chromalab.structure.bracelet.validate_bracelet`. Bracelets are drawn by
rejection; the other families are constructive.
"""

from __future__ import annotations

import numpy as np

from chromalab.errors import GenerationError
from chromalab.exp.logging import get_logger
from chromalab.exp.random import make_rng
from chromalab.generators.config import Family, GenConfig
from chromalab.generators.cross import gen_cross_pattern
from chromalab.graphs.freeness import check_freeness
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.bracelet import BAG_PARTS, CROSS_RELATIONS, BraceletSpec, validate_bracelet
from chromalab.structure.catalog import BASES, gx_violations, special_emerald_weights

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type Spec = BlowupSpec | BraceletSpec

_RANDOM_BASES: dict[Family, str] = {
    Family.C7_PLUS_V: "c7v",
    Family.C7_PLUS_2T: "c7_2t",
    Family.C7_PLUS_2F: "c7_2f",
    Family.E_MINUS_8: "e_minus_8",
    Family.EMERALD_RANDOM: "emerald",
}


# ------------------------------------------------------------------------------
def _random_weights(name: str, params: dict[str, int], rng: np.random.Generator) -> BlowupSpec:
    n = BASES[name].n
    weights = rng.integers(params["w_min"], params["w_max"] + 1, size=n)
    return BlowupSpec.of(name, [int(w) for w in weights])


# ------------------------------------------------------------------------------
def _gx(params: dict[str, int], rng: np.random.Generator) -> BlowupSpec:
    x = params["x"]
    t7 = int(rng.integers(1, x + 2))
    t2 = int(rng.integers(1, x + 3 - t7))
    weights = {label: x for label in ("1", "3", "4", "5", "6")}
    weights |= {"7": x + 2 - t7, "t7": t7, "2": x + 2 - t2, "t2": t2}
    spec = BlowupSpec.of("gx", weights)
    assert not gx_violations(spec.weight_map(), x)
    return spec


# ------------------------------------------------------------------------------
def _part_sizes(params: dict[str, int], rng: np.random.Generator) -> dict[str, int]:
    """Split seven random bag sizes into sub-bags, populating each pair by chance."""
    bags = {i: int(rng.integers(params["bag_min"], params["bag_max"] + 1)) for i in range(1, 8)}
    spare = dict(bags)
    sizes: dict[str, int] = {}
    for left, right in CROSS_RELATIONS.values():
        if rng.integers(100) >= params["pair_chance"]:
            continue
        i, j = int(left[1]), int(right[1])
        if spare[i] < 1 or spare[j] < 1:
            continue
        sizes[left] = int(rng.integers(1, spare[i] + 1))
        spare[i] -= sizes[left]
        sizes[right] = int(rng.integers(1, spare[j] + 1))
        spare[j] -= sizes[right]
    for i, parts in BAG_PARTS.items():
        sizes[parts[0]] = spare[i]
    return sizes


# ------------------------------------------------------------------------------
def _bracelet_candidate(params: dict[str, int], rng: np.random.Generator) -> BraceletSpec:
    sizes = _part_sizes(params, rng)
    parts: dict[str, tuple[int, ...]] = {}
    start = 0
    for parts_of_bag in BAG_PARTS.values():
        for key in parts_of_bag:
            parts[key] = tuple(range(start, start + sizes.get(key, 0)))
            start += sizes.get(key, 0)
    cross: dict[str, frozenset[tuple[int, int]]] = {}
    for name, (left, right) in CROSS_RELATIONS.items():
        if not parts[left]:
            cross[name] = frozenset()
            continue
        pattern = gen_cross_pattern(
            len(parts[left]), len(parts[right]), seed=int(rng.integers(2**63))
        )
        cross[name] = frozenset((parts[left][i], parts[right][j]) for i, j in pattern)
    return BraceletSpec(parts=parts, **cross)


# ------------------------------------------------------------------------------
def _bracelet(params: dict[str, int], rng: np.random.Generator) -> BraceletSpec:
    attempts = params["attempts"]
    for attempt in range(1, attempts + 1):
        spec = _bracelet_candidate(params, rng)
        violations = validate_bracelet(spec)
        if not violations:
            logger.debug("bracelet accepted after %d attempt(s)", attempt)
            return spec
        logger.debug("bracelet attempt %d rejected: %s", attempt, violations[0].message)
    raise GenerationError("bracelet_random", attempts=attempts)


# ------------------------------------------------------------------------------
def _blowup(config: GenConfig, rng: np.random.Generator) -> BlowupSpec:
    p = config.resolved
    match config.family:
        case Family.C7_EQUAL:
            return BlowupSpec.uniform("c7", p["t"])
        case Family.EMERALD_EQUAL:
            return BlowupSpec.uniform("emerald", p["t"])
        case Family.GX:
            return _gx(p, rng)
        case Family.SPECIAL_EMERALD:
            weights = special_emerald_weights(p["x"], p["y"], p["z"], p["r"], p["s"], p["p"])
            return BlowupSpec.of("special_emerald", weights)
        case family:
            return _random_weights(_RANDOM_BASES[family], p, rng)


# ------------------------------------------------------------------------------
def gen(config: GenConfig) -> Spec:
    """Generate one instance of ``config.family``.

    Args:
        config: Family, seed and parameters.

    Returns:
        A validated blowup or bracelet spec; equal configs give equal specs.

    Raises:
        GenerationError: If bracelet sampling runs out of attempts, or a blowup's
            realization is not (P7, C4, C5)-free.
    """
    rng = make_rng(config.seed)
    if config.family is Family.BRACELET_RANDOM:
        return _bracelet(config.resolved, rng)
    spec = _blowup(config, rng)
    if not check_freeness(spec.realize().graph).is_free:
        raise GenerationError(f"{config.family} produced a graph outside the class", attempts=1)
    logger.debug("generated %s with weights %s", config.family, spec.weights)
    return spec

