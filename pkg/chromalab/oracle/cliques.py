"""Clique number, maximum cliques and maximum-weight cliques.

Maximal cliques come from networkx's Bron-Kerbosch enumeration (``nx.find_cliques``);
every maximum clique is maximal, so the clique number and the full list of maximum
cliques fall out of a single pass.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import BudgetExceededError
from chromalab.exp.logging import get_logger
from chromalab.graphs.core import Graph

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class CliqueReport:
    """Outcome of :func:`clique_number`.

    Args:
        omega: Clique number (0 for the empty graph).
        witness: Lexicographically smallest maximum clique, ascending.
        all_maximum_cliques: Every maximum clique (ascending tuples, sorted) when the
            graph is within the enumeration limit; empty otherwise.
    """

    omega: int
    witness: tuple[int, ...]
    all_maximum_cliques: tuple[tuple[int, ...], ...] = ()


# ------------------------------------------------------------------------------
def maximal_cliques(g: Graph, *, config: OracleConfig | None = None) -> list[tuple[int, ...]]:
    """All maximal cliques of ``g`` as sorted tuples, in sorted order.

    Raises:
        BudgetExceededError: If more cliques than the node budget are produced.
    """
    budget = resolve_config(config).node_budget
    found: list[tuple[int, ...]] = []
    for clique in nx.find_cliques(g.to_networkx()):
        found.append(tuple(sorted(int(v) for v in clique)))
        if len(found) > budget:
            logger.warning("maximal clique enumeration hit budget %d on n=%d", budget, g.n)
            raise BudgetExceededError("maximal_cliques", budget=budget)
    return sorted(found)


# ------------------------------------------------------------------------------
def clique_number(g: Graph, *, config: OracleConfig | None = None) -> CliqueReport:
    """Exact clique number with a witness.

    Args:
        g: Any graph.
        config: Oracle limits; ``clique_enumeration_limit`` decides whether all maximum
            cliques are reported.

    Returns:
        The CliqueReport.

    Raises:
        BudgetExceededError: If the enumeration exceeds the node budget.
    """
    cfg = resolve_config(config)
    if g.n == 0:
        return CliqueReport(omega=0, witness=())
    cliques = maximal_cliques(g, config=cfg)
    omega = max(len(c) for c in cliques)
    maximum = [c for c in cliques if len(c) == omega]
    logger.debug("clique_number: n=%d omega=%d maximum cliques=%d", g.n, omega, len(maximum))
    return CliqueReport(
        omega=omega,
        witness=maximum[0],
        all_maximum_cliques=tuple(maximum) if g.n <= cfg.clique_enumeration_limit else (),
    )


# ------------------------------------------------------------------------------
def max_weight_clique(
    base: Graph, weights: Sequence[int], *, config: OracleConfig | None = None
) -> tuple[int, tuple[int, ...]]:
    """Maximum total weight of a clique of ``base``; the clique number of its blowup.

    Args:
        base: Base graph.
        weights: Nonnegative weight per base vertex.
        config: Oracle limits.

    Returns:
        ``(weight, clique)``; the clique is the lexicographically smallest maximal clique
        attaining the weight, or ``()`` when the base is empty.
    """
    if base.n == 0:
        return 0, ()
    best_weight = -1
    best: tuple[int, ...] = ()
    for clique in maximal_cliques(base, config=config):
        weight = sum(weights[v] for v in clique)
        if weight > best_weight:
            best_weight, best = weight, clique
    return best_weight, best


# ------------------------------------------------------------------------------
def maximum_weight_cliques(
    base: Graph, weights: Sequence[int], *, config: OracleConfig | None = None
) -> tuple[int, list[tuple[int, ...]]]:
    """All cliques of maximum weight among the positive-weight vertices.

    With positive weights a maximum-weight clique is maximal, so only the maximal
    cliques of the support are inspected. The returned cliques are in base indices.
    """
    support = [v for v in range(base.n) if weights[v] > 0]
    if not support:
        return 0, []
    sub = base.induced(support)
    cliques = [tuple(support[i] for i in c) for c in maximal_cliques(sub, config=config)]
    omega = max(sum(weights[v] for v in c) for c in cliques)
    return omega, [c for c in cliques if sum(weights[v] for v in c) == omega]
