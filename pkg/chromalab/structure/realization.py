"""Realized graphs with the bag layout that maps them back to their structure spec."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from chromalab.graphs.core import Graph


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Realization:
    """A concrete graph built from a structure spec, with the way back to the spec.

    Args:
        graph: The realized graph.
        bags: Realized vertices of each named bag, in declaration order.
        bag_names: Name of each bag (base label or bracelet sub-bag key).
        ids: ``ids[v]`` is the spec-level vertex id of realized vertex ``v``.
    """

    graph: Graph
    bags: tuple[tuple[int, ...], ...]
    bag_names: tuple[str, ...]
    ids: tuple[int, ...]

    def bag(self, name: str) -> tuple[int, ...]:
        return self.bags[self.bag_names.index(name)]

    def index_of_id(self) -> dict[int, int]:
        """Map spec-level vertex ids to realized vertices."""
        return {vid: v for v, vid in enumerate(self.ids)}


# ------------------------------------------------------------------------------
class Realizable(Protocol):
    def realize(self) -> Realization: ...


# ------------------------------------------------------------------------------
def realize(spec: Realizable) -> Realization:
    """Realize a blowup or bracelet spec; numbering follows bag declaration order."""
    return spec.realize()
