"""Exact chromatic number of blowups by stable-set covering.

A coloring of a blowup is a multiset of stable sets of the base that hits every base
vertex at least as often as its weight. The search below finds a minimum such
multiset by iterative deepening over the cover size ``k``:

* lower bound ``max(max-weight clique, ceil(total demand / alpha))``;
* branch on the vertex with the largest remaining demand (lowest index on ties),
  trying each maximal stable set through it in order of demand covered;
* demands are floored at zero, so maximal stable sets are enough;
* a memo keeps, per demand vector, the largest ``k`` already proven infeasible.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Protocol

import networkx as nx

from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import BudgetExceededError, SizeGuardError
from chromalab.exp.logging import get_logger
from chromalab.graphs.core import Graph

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type Demand = tuple[int, ...]


# ------------------------------------------------------------------------------
class WeightedBase(Protocol):
    """Anything that names a base graph and one clique size per base vertex."""

    @property
    def base(self) -> Graph: ...

    @property
    def weights(self) -> tuple[int, ...]: ...


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class StableSetCover:
    """A multiset of stable sets of ``base`` covering ``demands``.

    Args:
        base: The base graph.
        demands: Required coverage per base vertex.
        sets: ``(stable set, multiplicity)`` pairs in the order they were chosen.
    """

    base: Graph
    demands: tuple[int, ...]
    sets: tuple[tuple[frozenset[int], int], ...]

    @property
    def size(self) -> int:
        """Total multiplicity, i.e. the number of colors."""
        return sum(mult for _, mult in self.sets)

    def is_valid(self) -> bool:
        """True iff every set is stable and every demand is met."""
        if not all(self.base.is_stable(sorted(s)) and m > 0 for s, m in self.sets):
            return False
        coverage = [0] * self.base.n
        for s, m in self.sets:
            for v in s:
                coverage[v] += m
        return all(c >= d for c, d in zip(coverage, self.demands, strict=True))


# ------------------------------------------------------------------------------
class _CoverSearch:
    def __init__(self, base: Graph, demands: Sequence[int], *, budget: int) -> None:
        self._support = [v for v in range(base.n) if demands[v] > 0]
        sub = base.induced(self._support)
        self._n = sub.n
        self._budget = budget
        self.nodes = 0
        self.demand: Demand = tuple(demands[v] for v in self._support)
        stables = nx.find_cliques(sub.complement().to_networkx()) if sub.n else []
        self._stables = sorted(tuple(sorted(int(v) for v in s)) for s in stables)
        self._alpha = max((len(s) for s in self._stables), default=1)
        cliques = nx.find_cliques(sub.to_networkx()) if sub.n else []
        self._cliques = [tuple(int(v) for v in c) for c in cliques]
        self._through: list[list[tuple[int, ...]]] = [
            [s for s in self._stables if v in s] for v in range(sub.n)
        ]
        self._infeasible: dict[Demand, int] = {}

    # --------------------------------------------------------------------------
    def lower_bound(self, d: Demand) -> int:
        total = sum(d)
        if total == 0:
            return 0
        clique = max(sum(d[v] for v in c) for c in self._cliques)
        return max(clique, math.ceil(total / self._alpha))

    def greedy(self) -> list[tuple[int, ...]]:
        d = list(self.demand)
        chosen: list[tuple[int, ...]] = []
        while any(d):
            best = max(self._stables, key=lambda s: sum(1 for v in s if d[v] > 0))
            for v in best:
                d[v] = max(0, d[v] - 1)
            chosen.append(best)
        return chosen

    def feasible(self, d: Demand, k: int, trail: list[tuple[int, ...]]) -> bool:
        if not any(d):
            return True
        if k <= self._infeasible.get(d, -1) or self.lower_bound(d) > k:
            return False
        self.nodes += 1
        if self.nodes > self._budget:
            raise BudgetExceededError("stable-set cover search", budget=self._budget)
        top = max(d)
        v = d.index(top)
        children: dict[Demand, tuple[int, ...]] = {}
        for s in sorted(self._through[v], key=lambda s: -sum(1 for u in s if d[u] > 0)):
            child = tuple(max(0, x - 1) if i in s else x for i, x in enumerate(d))
            children.setdefault(child, s)
        for child, s in children.items():
            trail.append(s)
            if self.feasible(child, k - 1, trail):
                return True
            trail.pop()
        self._infeasible[d] = max(k, self._infeasible.get(d, -1))
        return False

    def to_cover(
        self, base: Graph, demands: Sequence[int], chosen: Sequence[tuple[int, ...]]
    ) -> StableSetCover:
        counts: dict[frozenset[int], int] = {}
        for s in chosen:
            key = frozenset(self._support[i] for i in s)
            counts[key] = counts.get(key, 0) + 1
        return StableSetCover(base=base, demands=tuple(demands), sets=tuple(counts.items()))


# ------------------------------------------------------------------------------
def _check_base(base: Graph, weights: Sequence[int], cfg: OracleConfig) -> None:
    if base.n > cfg.blowup_base_limit:
        raise SizeGuardError("blowup cover", size=base.n, limit=cfg.blowup_base_limit)
    if len(weights) != base.n or any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative, one per base vertex")


# ------------------------------------------------------------------------------
def blowup_chromatic_exact(
    spec: WeightedBase, *, config: OracleConfig | None = None
) -> tuple[int, StableSetCover]:
    """Exact chromatic number of the blowup ``spec.base[spec.weights]``.

    Args:
        spec: Base graph with at most ``blowup_base_limit`` vertices and weights.
        config: Oracle limits.

    Returns:
        ``(chi, cover)`` with ``cover.size == chi``.

    Raises:
        SizeGuardError: If the base is too large.
        BudgetExceededError: If the search exceeds the node budget.
    """
    cfg = resolve_config(config)
    base, weights = spec.base, spec.weights
    _check_base(base, weights, cfg)
    search = _CoverSearch(base, weights, budget=cfg.node_budget)
    if not any(search.demand):
        return 0, StableSetCover(base=base, demands=tuple(weights), sets=())
    best = search.greedy()
    lower = search.lower_bound(search.demand)
    for k in range(lower, len(best)):
        trail: list[tuple[int, ...]] = []
        if search.feasible(search.demand, k, trail):
            best = trail
            break
    logger.debug(
        "blowup_chromatic_exact: base n=%d lower=%d chi=%d nodes=%d",
        base.n,
        lower,
        len(best),
        search.nodes,
    )
    return len(best), search.to_cover(base, weights, best)


# ------------------------------------------------------------------------------
def cover_within(
    base: Graph, weights: Sequence[int], k: int, *, config: OracleConfig | None = None
) -> StableSetCover | None:
    """A cover of ``weights`` by at most ``k`` stable sets of ``base``, or None."""
    cfg = resolve_config(config)
    _check_base(base, weights, cfg)
    search = _CoverSearch(base, weights, budget=cfg.node_budget)
    trail: list[tuple[int, ...]] = []
    if not search.feasible(search.demand, k, trail):
        return None
    return search.to_cover(base, weights, trail)


# ------------------------------------------------------------------------------
def cover_to_bag_colors(cover: StableSetCover, *, start: int = 0) -> tuple[tuple[int, ...], ...]:
    """Turn a cover into per-bag color lists.

    Color ``start + j`` is the ``j``-th unit of multiplicity in cover order. A bag takes
    the colors of the sets through it until its demand is met.

    Returns:
        For each base vertex, exactly ``demands[v]`` distinct colors.
    """
    bags: list[list[int]] = [[] for _ in range(cover.base.n)]
    color = start
    for members, mult in cover.sets:
        for _ in range(mult):
            for v in members:
                if len(bags[v]) < cover.demands[v]:
                    bags[v].append(color)
            color += 1
    return tuple(tuple(b) for b in bags)
