"""Vertex colorings and their verification."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from chromalab.graphs.core import Edge, Graph


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Coloring:
    """A total vertex coloring with colors ``1..k``, each used at least once.

    Args:
        assignment: ``assignment[v]`` is the color of vertex ``v``.
    """

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.assignment)
        if used and used != set(range(1, len(used) + 1)):
            raise ValueError("colors must be exactly 1..k with every color used")

    # --------------------------------------------------------------------------
    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> Coloring:
        """Compact arbitrary integer colors onto ``1..k`` preserving their order."""
        rank = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(assignment=tuple(rank[c] for c in colors))

    @classmethod
    def from_mapping(cls, n: int, colors: Mapping[int, int]) -> Coloring:
        """Compact a vertex -> color mapping that must cover ``0..n-1``."""
        missing = [v for v in range(n) if v not in colors]
        if missing:
            raise ValueError(f"coloring is not total; uncolored vertices {missing[:5]}")
        return cls.from_colors([colors[v] for v in range(n)])

    @property
    def k(self) -> int:
        """Number of colors used."""
        return len(set(self.assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def color_of(self, v: int) -> int:
        return self.assignment[v]

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Color classes, indexed by color minus one."""
        buckets: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            buckets[c - 1].append(v)
        return tuple(tuple(b) for b in buckets)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class ColoringCheck:
    """Result of :func:`verify_coloring`."""

    is_proper: bool
    violating_edge: Edge | None = None
    reason: str = ""


# ------------------------------------------------------------------------------
def verify_coloring(g: Graph, coloring: Coloring) -> ColoringCheck:
    """Check that ``coloring`` is total on ``g`` and proper.

    Returns:
        The check; on failure the first monochromatic edge in edge order.
    """
    if coloring.n != g.n:
        return ColoringCheck(
            is_proper=False, reason=f"coloring covers {coloring.n} of {g.n} vertices"
        )
    for u, v in g.edges():
        if coloring.assignment[u] == coloring.assignment[v]:
            return ColoringCheck(
                is_proper=False, violating_edge=(u, v), reason=f"edge ({u}, {v}) monochromatic"
            )
    return ColoringCheck(is_proper=True)
