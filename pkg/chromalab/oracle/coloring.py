"""Exact and budgeted coloring by DSATUR backtracking.

The search colors the most saturated vertex first (ties: most uncolored neighbors,
then lowest index) and only opens a new color one above the highest used so far,
which removes color-permutation symmetry. Both entry points seed the search with a
maximum clique. The list variant has no such rule since each list names actual colors.
"""

from __future__ import annotations

from collections.abc import Sequence

import networkx as nx

from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import BudgetExceededError, SizeGuardError
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring
from chromalab.graphs.core import Graph
from chromalab.oracle.cliques import clique_number

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
class _DsaturSearch:
    """One fixed-k backtracking search; state is local to the instance."""

    def __init__(self, g: Graph, k: int, *, seed: tuple[int, ...], budget: int) -> None:
        self._g = g
        self._k = k
        self._budget = budget
        self.nodes = 0
        self.colors = [-1] * g.n
        for c, v in enumerate(seed):
            self.colors[v] = c
        self._seeded = len(seed)

    def run(self) -> bool:
        if self._seeded > self._k:
            return False
        return self._extend(self._seeded, self._seeded - 1)

    def _pick(self) -> int:
        best, best_key = -1, (-1, -1)
        for v in range(self._g.n):
            if self.colors[v] >= 0:
                continue
            seen = {self.colors[u] for u in self._g.adjacency[v] if self.colors[u] >= 0}
            free = sum(1 for u in self._g.adjacency[v] if self.colors[u] < 0)
            key = (len(seen), free)
            if key > best_key:
                best, best_key = v, key
        return best

    def _extend(self, colored: int, max_used: int) -> bool:
        if colored == self._g.n:
            return True
        self.nodes += 1
        if self.nodes > self._budget:
            raise BudgetExceededError("dsatur search", budget=self._budget)
        v = self._pick()
        forbidden = {self.colors[u] for u in self._g.adjacency[v] if self.colors[u] >= 0}
        for c in range(min(max_used + 2, self._k)):
            if c in forbidden:
                continue
            self.colors[v] = c
            if self._extend(colored + 1, max(max_used, c)):
                return True
        self.colors[v] = -1
        return False


# ------------------------------------------------------------------------------
def color_within(g: Graph, k: int, *, config: OracleConfig | None = None) -> Coloring | None:
    """Find a proper coloring of ``g`` with at most ``k`` colors.

    There is no size guard; the node budget bounds the work instead.

    Args:
        g: Graph to color.
        k: Number of available colors.
        config: Oracle limits.

    Returns:
        A coloring with at most ``k`` colors, or None if none exists.

    Raises:
        BudgetExceededError: If the search exceeds the node budget.
    """
    if g.n == 0:
        return Coloring(assignment=())
    cfg = resolve_config(config)
    seed = clique_number(g, config=cfg).witness
    search = _DsaturSearch(g, k, seed=seed, budget=cfg.node_budget)
    found = search.run()
    logger.debug("color_within: n=%d k=%d found=%s nodes=%d", g.n, k, found, search.nodes)
    if not found:
        return None
    return Coloring.from_colors(search.colors)


# ------------------------------------------------------------------------------
def greedy_coloring(g: Graph) -> Coloring:
    """networkx DSATUR greedy coloring; an upper bound, not optimal."""
    if g.n == 0:
        return Coloring(assignment=())
    colors = nx.greedy_color(g.to_networkx(), strategy="DSATUR")
    return Coloring.from_colors([colors[v] for v in range(g.n)])


# ------------------------------------------------------------------------------
def chromatic_number_exact(
    g: Graph, *, config: OracleConfig | None = None
) -> tuple[int, Coloring]:
    """Chromatic number with an optimal witness coloring.

    Tries ``k = ω, ω+1, ...`` below the greedy DSATUR bound until a coloring exists.

    Args:
        g: Graph with at most ``exact_vertex_limit`` vertices.
        config: Oracle limits.

    Returns:
        ``(chi, coloring)`` with ``coloring.k == chi``.

    Raises:
        SizeGuardError: If ``g`` is above the size guard.
        BudgetExceededError: If a search exceeds the node budget.
    """
    cfg = resolve_config(config)
    if g.n > cfg.exact_vertex_limit:
        raise SizeGuardError("chromatic_number_exact", size=g.n, limit=cfg.exact_vertex_limit)
    if g.n == 0:
        return 0, Coloring(assignment=())
    upper = greedy_coloring(g)
    omega = clique_number(g, config=cfg).omega
    for k in range(omega, upper.k):
        found = color_within(g, k, config=cfg)
        if found is not None:
            return found.k, found
    return upper.k, upper


# ------------------------------------------------------------------------------
class _ListSearch:
    """Backtracking over per-vertex color lists, fewest remaining choices first."""

    def __init__(self, g: Graph, lists: Sequence[Sequence[int]], *, budget: int) -> None:
        self._g = g
        self._lists = [tuple(sorted(set(options))) for options in lists]
        self._budget = budget
        self.nodes = 0
        self.colors = [-1] * g.n

    def run(self) -> bool:
        return self._extend(0)

    def _options(self, v: int) -> list[int]:
        taken = {self.colors[u] for u in self._g.adjacency[v]}
        return [c for c in self._lists[v] if c not in taken]

    def _extend(self, colored: int) -> bool:
        if colored == self._g.n:
            return True
        self.nodes += 1
        if self.nodes > self._budget:
            raise BudgetExceededError("list coloring search", budget=self._budget)
        uncolored = [v for v in range(self._g.n) if self.colors[v] < 0]
        v = min(uncolored, key=lambda u: (len(self._options(u)), u))
        for c in self._options(v):
            self.colors[v] = c
            if self._extend(colored + 1):
                return True
        self.colors[v] = -1
        return False


# ------------------------------------------------------------------------------
def color_from_lists(
    g: Graph, lists: Sequence[Sequence[int]], *, config: OracleConfig | None = None
) -> dict[int, int] | None:
    """Proper coloring with every vertex ``v`` colored from ``lists[v]``.

    Colors are returned as given in the lists, not compacted.

    Returns:
        Vertex -> color, or None when no list coloring exists.

    Raises:
        ValueError: If ``lists`` does not have one entry per vertex.
        BudgetExceededError: If the search exceeds the node budget.
    """
    if len(lists) != g.n:
        raise ValueError(f"{len(lists)} color lists for {g.n} vertices")
    cfg = resolve_config(config)
    search = _ListSearch(g, lists, budget=cfg.node_budget)
    found = search.run()
    logger.debug("color_from_lists: n=%d found=%s nodes=%d", g.n, found, search.nodes)
    if not found:
        return None
    return dict(enumerate(search.colors))
