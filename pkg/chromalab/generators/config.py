from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from chromalab.exp.random import PRNG_ALGORITHM

# ------------------------------------------------------------------------------
MAX_SEED = 2**64 - 1


# ------------------------------------------------------------------------------
class Family(StrEnum):
    C7_EQUAL = "c7_equal"
    C7_PLUS_V = "c7_plus_v"
    C7_PLUS_2T = "c7_plus_2t"
    C7_PLUS_2F = "c7_plus_2f"
    E_MINUS_8 = "e_minus_8"
    GX = "gx"
    SPECIAL_EMERALD = "special_emerald"
    EMERALD_RANDOM = "emerald_random"
    EMERALD_EQUAL = "emerald_equal"
    BRACELET_RANDOM = "bracelet_random"


FAMILY_DEFAULTS: dict[Family, dict[str, int]] = {
    Family.C7_EQUAL: {"t": 3},
    Family.C7_PLUS_V: {"w_min": 1, "w_max": 4},
    Family.C7_PLUS_2T: {"w_min": 1, "w_max": 4},
    Family.C7_PLUS_2F: {"w_min": 1, "w_max": 4},
    Family.E_MINUS_8: {"w_min": 1, "w_max": 4},
    Family.GX: {"x": 4},
    Family.SPECIAL_EMERALD: {"x": 5, "y": 3, "z": 3, "r": 0, "s": 0, "p": 1},
    Family.EMERALD_RANDOM: {"w_min": 1, "w_max": 6},
    Family.EMERALD_EQUAL: {"t": 3},
    Family.BRACELET_RANDOM: {"bag_min": 1, "bag_max": 3, "pair_chance": 50, "attempts": 200},
}
"""Every parameter a family reads, with its default.

``w_min``/``w_max`` bound uniformly drawn bag sizes, ``t`` is a uniform bag size,
``pair_chance`` is the percentage chance that a bracelet uncertain pair is populated
and ``attempts`` caps bracelet rejection sampling.
"""


# ------------------------------------------------------------------------------
def _range_failures(params: Mapping[str, int], low: str, high: str, floor: int) -> list[str]:
    failures: list[str] = []
    if params[low] < floor:
        failures.append(f"{low} = {params[low]} must be >= {floor}")
    if params[high] < params[low]:
        failures.append(f"{high} = {params[high]} must be >= {low} = {params[low]}")
    return failures


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class GenConfig:
    """What to generate: a family, a seed and family parameters over the defaults.

    Args:
        family: Instance family.
        seed: Seed for the PCG64 stream, in ``0 .. 2**64 - 1``.
        params: Overrides of :data:`FAMILY_DEFAULTS` for this family.

    Raises:
        ValueError: On unknown parameters, an out-of-range seed or parameters outside
            the family's preconditions.
    """

    family: Family
    seed: int = 0
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"seed must be in 0..2**64-1, got {self.seed}")
        unknown = sorted(set(self.params) - set(FAMILY_DEFAULTS[self.family]))
        if unknown:
            raise ValueError(f"{self.family} does not take parameters {unknown}")
        object.__setattr__(self, "params", {k: int(v) for k, v in self.params.items()})
        failures = self.failures()
        if failures:
            raise ValueError(f"{self.family}: " + "; ".join(failures))

    # --------------------------------------------------------------------------
    @property
    def resolved(self) -> dict[str, int]:
        """Family defaults with this config's overrides applied."""
        return FAMILY_DEFAULTS[self.family] | dict(self.params)

    def failures(self) -> list[str]:
        p = self.resolved
        match self.family:
            case Family.C7_EQUAL | Family.EMERALD_EQUAL:
                return [] if p["t"] >= 1 else [f"t = {p['t']} must be >= 1"]
            case Family.GX:
                return [] if p["x"] >= 1 else [f"x = {p['x']} must be >= 1"]
            case Family.SPECIAL_EMERALD:
                found = [f"{k} = {p[k]} must be >= 0" for k in ("r", "s") if p[k] < 0]
                if p["y"] + p["z"] != p["x"] + p["p"]:
                    found.append(f"y+z = {p['y'] + p['z']} must equal x+p = {p['x'] + p['p']}")
                if p["p"] not in (1, 2):
                    found.append(f"p = {p['p']} must be 1 or 2")
                return found
            case Family.BRACELET_RANDOM:
                found = _range_failures(p, "bag_min", "bag_max", 1)
                if not 0 <= p["pair_chance"] <= 100:
                    found.append(f"pair_chance = {p['pair_chance']} must be a percentage")
                if p["attempts"] < 1:
                    found.append(f"attempts = {p['attempts']} must be >= 1")
                return found
            case _:
                return _range_failures(p, "w_min", "w_max", 0)

    # --------------------------------------------------------------------------
    def to_dict(self) -> dict[str, Any]:
        """Header form stored in fixtures, with the pinned PRNG name."""
        return {
            "family": str(self.family),
            "seed": self.seed,
            "params": self.resolved,
            "prng": PRNG_ALGORITHM,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> GenConfig:
        """Inverse of :meth:`to_dict`.

        Raises:
            ValueError: If the header names another PRNG or is malformed.
        """
        prng = data.get("prng", PRNG_ALGORITHM)
        if prng != PRNG_ALGORITHM:
            raise ValueError(f"fixture was generated with {prng}, this build uses {PRNG_ALGORITHM}")
        return cls(
            family=Family(data["family"]),
            seed=int(data["seed"]),
            params={str(k): int(v) for k, v in dict(data.get("params", {})).items()},
        )
