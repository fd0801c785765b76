"""Strong stable sets: stable sets meeting every maximum clique.

Removing a strong stable set lowers the clique number by exactly one. For a blowup
the search runs on the base: a stable set of the support that meets every
maximum-weight base clique becomes strong once one vertex per bag is taken.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence

from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import BudgetExceededError, SizeGuardError
from chromalab.graphs.core import Graph
from chromalab.oracle.cliques import clique_number, maximum_weight_cliques
from chromalab.oracle.covering import WeightedBase

type StableSetFilter = Callable[[tuple[int, ...]], bool]


# ------------------------------------------------------------------------------
def _iter_hitting_stable_sets(
    g: Graph,
    candidates: Sequence[int],
    cliques: Sequence[tuple[int, ...]],
    *,
    accept: StableSetFilter | None,
    budget: int,
) -> Iterator[tuple[int, ...]]:
    """Stable subsets of ``candidates`` meeting all ``cliques``, by size then lexicographically."""
    order = sorted(candidates)
    clique_sets = [frozenset(c) for c in cliques]
    nodes = 0

    def grow(size: int, chosen: list[int], start: int) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError("strong stable set search", budget=budget)
        picked = set(chosen)
        unhit = next((c for c in clique_sets if not c & picked), None)
        if len(chosen) == size:
            if unhit is None and (accept is None or accept(tuple(chosen))):
                yield tuple(chosen)
            return
        if unhit is not None and chosen and max(unhit) <= chosen[-1]:
            return
        for i in range(start, len(order)):
            v = order[i]
            if any(g.has_edge(v, u) for u in chosen):
                continue
            chosen.append(v)
            yield from grow(size, chosen, i + 1)
            chosen.pop()

    found = False
    for size in range(1, len(order) + 1):
        if not found and size > len(clique_sets):
            # a minimal hitting set has at most one vertex per clique
            return
        for stable in grow(size, [], 0):
            found = True
            yield stable


# ------------------------------------------------------------------------------
def iter_strong_stable_sets(
    g: Graph,
    *,
    accept: StableSetFilter | None = None,
    config: OracleConfig | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield strong stable sets of ``g`` by increasing size, lexicographic within a size.

    Args:
        g: Graph within the clique enumeration limit.
        accept: Optional filter, closed under taking subsets; rejected sets are skipped.
        config: Oracle limits.

    Raises:
        SizeGuardError: If ``g`` is above the clique enumeration limit.
        BudgetExceededError: If the search exceeds the node budget.
    """
    cfg = resolve_config(config)
    if g.n > cfg.clique_enumeration_limit:
        raise SizeGuardError(
            "strong stable set search", size=g.n, limit=cfg.clique_enumeration_limit
        )
    if g.n == 0:
        return
    report = clique_number(g, config=cfg)
    yield from _iter_hitting_stable_sets(
        g, range(g.n), report.all_maximum_cliques, accept=accept, budget=cfg.node_budget
    )


# ------------------------------------------------------------------------------
def iter_strong_stable_sets_weighted(
    base: Graph,
    weights: Sequence[int],
    *,
    accept: StableSetFilter | None = None,
    config: OracleConfig | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield base stable sets (on positive weights) meeting every maximum-weight clique."""
    cfg = resolve_config(config)
    support = [v for v in range(base.n) if weights[v] > 0]
    if not support:
        return
    _, cliques = maximum_weight_cliques(base, weights, config=cfg)
    yield from _iter_hitting_stable_sets(
        base, support, cliques, accept=accept, budget=cfg.node_budget
    )


# ------------------------------------------------------------------------------
def find_strong_stable_set_weighted(
    base: Graph, weights: Sequence[int], *, config: OracleConfig | None = None
) -> tuple[int, ...] | None:
    """First strong stable set of the blowup, as base vertices, or None."""
    return next(iter_strong_stable_sets_weighted(base, weights, config=config), None)


# ------------------------------------------------------------------------------
def find_strong_stable_set(
    target: Graph | WeightedBase, *, config: OracleConfig | None = None
) -> tuple[int, ...] | None:
    """Find a stable set that meets every maximum clique.

    Args:
        target: A graph, or a weighted base (blowup spec or twin quotient). For a
            weighted base the answer is a set of base vertices.
        config: Oracle limits.

    Returns:
        The first strong stable set in size-then-lexicographic order, or None.
    """
    if isinstance(target, Graph):
        return next(iter_strong_stable_sets(target, config=config), None)
    return find_strong_stable_set_weighted(target.base, target.weights, config=config)
