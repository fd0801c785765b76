"""Colorings of blowups expressed bag by bag.

A :class:`BagColoring` gives every base vertex ``u`` a tuple of ``weights[u]`` distinct
colors. A blowup coloring is proper iff adjacent bags use disjoint colors, so every
peel, split and stacking step of the colorers is a small operation on these tuples.
Colors are arbitrary nonnegative integers until :meth:`BagColoring.to_coloring`
compacts them onto ``1..k``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass

from chromalab.colorers.budget import ColorBudget
from chromalab.config import OracleConfig
from chromalab.errors import ColoringDefectError
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring
from chromalab.graphs.core import Graph
from chromalab.oracle.covering import blowup_chromatic_exact, cover_to_bag_colors, cover_within
from chromalab.oracle.strong import find_strong_stable_set_weighted
from chromalab.structure.blowup import BlowupSpec

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type BagColorer = Callable[[BlowupSpec], BagColoring]


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class BagColoring:
    """Per-bag color tuples of a blowup coloring.

    Args:
        bags: ``bags[u]`` are the colors of the clique substituted for base vertex ``u``.
    """

    bags: tuple[tuple[int, ...], ...]

    # --------------------------------------------------------------------------
    @classmethod
    def empty(cls, n: int) -> BagColoring:
        return cls(bags=tuple(() for _ in range(n)))

    @classmethod
    def from_labels(cls, base: Graph, colors: Mapping[str, Sequence[int]]) -> BagColoring:
        """Build from a label -> colors mapping; missing labels get empty bags."""
        unknown = set(colors) - set(base.labels)
        if unknown:
            raise ValueError(f"labels {sorted(unknown)} not in base")
        return cls(bags=tuple(tuple(colors.get(label, ())) for label in base.labels))

    # --------------------------------------------------------------------------
    @property
    def palette(self) -> frozenset[int]:
        return frozenset(c for bag in self.bags for c in bag)

    @property
    def k(self) -> int:
        """Number of distinct colors used."""
        return len(self.palette)

    def colors_of(self, base: Graph, label: str) -> tuple[int, ...]:
        return self.bags[base.index_of(label)]

    # --------------------------------------------------------------------------
    def shifted(self, offset: int) -> BagColoring:
        return BagColoring(bags=tuple(tuple(c + offset for c in bag) for bag in self.bags))

    def stacked(self, other: BagColoring) -> BagColoring:
        """Union with ``other`` moved onto colors above this palette, bag by bag."""
        if len(other.bags) != len(self.bags):
            raise ValueError("stacked colorings must live on the same base")
        offset = max(self.palette, default=-1) + 1
        moved = other.shifted(offset)
        return BagColoring(
            bags=tuple(a + b for a, b in zip(self.bags, moved.bags, strict=True))
        )

    def with_new_color(self, vertices: Iterable[int]) -> BagColoring:
        """Add one fresh color to every bag in ``vertices`` (a stable set of the base)."""
        fresh = max(self.palette, default=-1) + 1
        chosen = frozenset(vertices)
        return BagColoring(
            bags=tuple(
                bag + (fresh,) if u in chosen else bag for u, bag in enumerate(self.bags)
            )
        )

    def pullback(self, base: Graph, sigma: Mapping[str, str]) -> BagColoring:
        """Coloring of ``spec`` from a coloring of ``spec.permuted(sigma)``."""
        return BagColoring(
            bags=tuple(self.bags[base.index_of(sigma[label])] for label in base.labels)
        )

    def compacted(self) -> BagColoring:
        rank = {c: i for i, c in enumerate(sorted(self.palette))}
        return BagColoring(bags=tuple(tuple(rank[c] for c in bag) for bag in self.bags))

    # --------------------------------------------------------------------------
    def problems(self, spec: BlowupSpec) -> list[str]:
        """Every reason this is not a proper coloring of ``spec``'s blowup."""
        found: list[str] = []
        labels = spec.base.labels
        if len(self.bags) != spec.base.n:
            return [f"{len(self.bags)} bags for {spec.base.n} base vertices"]
        for u, (bag, w) in enumerate(zip(self.bags, spec.weights, strict=True)):
            if len(bag) != w:
                found.append(f"bag {labels[u]} has {len(bag)} colors, needs {w}")
            if len(set(bag)) != len(bag):
                found.append(f"bag {labels[u]} repeats a color")
        for u, v in spec.base.edges():
            shared = set(self.bags[u]) & set(self.bags[v])
            if shared:
                found.append(f"adjacent bags {labels[u]}, {labels[v]} share {sorted(shared)}")
        return found

    def to_coloring(self) -> Coloring:
        """Realized-vertex coloring; bags are numbered in base order as in ``blowup``."""
        return Coloring.from_colors([c for bag in self.bags for c in bag])


# ------------------------------------------------------------------------------
def certify(spec: BlowupSpec, coloring: BagColoring, budget: ColorBudget, *, what: str) -> None:
    """Raise unless ``coloring`` is proper for ``spec`` and within ``budget``.

    Raises:
        ColoringDefectError: On any violation.
    """
    failures = coloring.problems(spec)
    if not budget.allows(coloring.k):
        failures.append(
            f"{coloring.k} colors exceed the {budget.bound_kind} budget {budget.budget}"
        )
    if failures:
        raise ColoringDefectError(f"{what}: " + "; ".join(failures))


# ------------------------------------------------------------------------------
def finish(
    spec: BlowupSpec, coloring: BagColoring, budget: ColorBudget, *, what: str
) -> Coloring:
    """Certify a bag coloring and turn it into a coloring of ``spec.realize().graph``."""
    certify(spec, coloring, budget, what=what)
    logger.debug(
        "%s: %d colors, budget %d (omega %d)", what, coloring.k, budget.budget, budget.omega
    )
    return coloring.to_coloring()


# ------------------------------------------------------------------------------
def exact_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    """Optimal bag coloring by exact stable-set covering."""
    _, cover = blowup_chromatic_exact(spec, config=config)
    return BagColoring(bags=cover_to_bag_colors(cover))


# ------------------------------------------------------------------------------
def bags_within(
    spec: BlowupSpec, k: int, *, what: str, config: OracleConfig | None = None
) -> BagColoring:
    """A bag coloring with at most ``k`` colors found by covering.

    Raises:
        ColoringDefectError: If no such coloring exists.
    """
    cover = cover_within(spec.base, spec.weights, k, config=config)
    if cover is None:
        raise ColoringDefectError(f"{what}: no cover with {k} colors")
    return BagColoring(bags=cover_to_bag_colors(cover))


# ------------------------------------------------------------------------------
def strong_stable_step(
    spec: BlowupSpec, recurse: BagColorer, *, config: OracleConfig | None = None
) -> BagColoring | None:
    """Remove a strong stable set (one vertex per chosen bag), recurse, add one color.

    Returns:
        The coloring, or None when the blowup has no strong stable set.
    """
    found = find_strong_stable_set_weighted(spec.base, spec.weights, config=config)
    if found is None:
        return None
    labels = [spec.base.labels[u] for u in found]
    logger.debug("strong stable set %s on %s", labels, spec.name)
    return recurse(spec.minus(labels)).with_new_color(found)


# ------------------------------------------------------------------------------
def cycle_order(base: Graph, labels: Iterable[str]) -> tuple[str, ...]:
    """Walk the induced cycle on ``labels``, starting at the smallest base index.

    Raises:
        ValueError: If the labels do not induce a cycle.
    """
    members = sorted(base.index_of(label) for label in labels)
    chosen = frozenset(members)
    for v in members:
        if len(base.adjacency[v] & chosen) != 2:
            raise ValueError(f"{sorted(labels)} do not induce a cycle")
    order = [members[0]]
    previous = -1
    while len(order) < len(members):
        step = min(u for u in base.adjacency[order[-1]] & chosen if u != previous)
        previous = order[-1]
        order.append(step)
    if order[0] not in base.adjacency[order[-1]] or len(set(order)) != len(order):
        raise ValueError(f"{sorted(labels)} do not induce a single cycle")
    return tuple(base.labels[v] for v in order)
