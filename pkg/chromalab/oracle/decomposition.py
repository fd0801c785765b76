"""Clique cutsets and universal vertices.

Minimal separators are generated by neighborhood-component closure: start from the
neighborhoods of the components of ``G - N[v]`` and close under
``S -> N(C)`` for components ``C`` of ``G - (S + N(x))``, ``x`` in ``S``. A graph has
a clique cutset iff one of its minimal separators is a clique.

True twins are never split by a minimal separator, so the search runs on the twin
quotient and separators are expanded back to whole classes.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import BudgetExceededError
from chromalab.exp.logging import get_logger
from chromalab.graphs.core import Graph
from chromalab.graphs.twins import quotient_by_true_twins

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class CliqueCutset:
    """A clique ``clique`` whose removal leaves ``components`` (more than before)."""

    clique: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


# ------------------------------------------------------------------------------
def _components_avoiding(g: Graph, removed: frozenset[int]) -> list[frozenset[int]]:
    seen = set(removed)
    comps: list[frozenset[int]] = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def _boundary(g: Graph, comp: Iterable[int]) -> frozenset[int]:
    members = frozenset(comp)
    return frozenset(u for v in members for u in g.adjacency[v]) - members


# ------------------------------------------------------------------------------
def _first_clique_separator(g: Graph, *, budget: int) -> frozenset[int] | None:
    """First clique minimal separator of a connected graph, in generation order."""
    found: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    queue: deque[frozenset[int]] = deque()

    def offer(sep: frozenset[int]) -> bool:
        if sep and sep not in seen:
            seen.add(sep)
            if len(seen) > budget:
                raise BudgetExceededError("minimal separator closure", budget=budget)
            queue.append(sep)
            if g.is_clique(sorted(sep)):
                found.append(sep)
                return True
        return False

    for v in range(g.n):
        for comp in _components_avoiding(g, g.closed_neighborhood(v)):
            if offer(_boundary(g, comp)):
                return found[0]
    while queue:
        sep = queue.popleft()
        for x in sorted(sep):
            for comp in _components_avoiding(g, sep | g.adjacency[x]):
                if offer(_boundary(g, comp)):
                    return found[0]
    return None


# ------------------------------------------------------------------------------
def find_clique_cutset(g: Graph, *, config: OracleConfig | None = None) -> CliqueCutset | None:
    """Find a clique whose removal increases the number of components.

    Args:
        g: Any graph.
        config: Oracle limits; the node budget caps the number of separators generated.

    Returns:
        The cutset with every component of ``g - clique``, or None.
    """
    cfg = resolve_config(config)
    quotient = quotient_by_true_twins(g)
    q = quotient.base
    for comp in q.connected_components():
        if len(comp) < 3:
            continue
        sub = q.induced(list(comp))
        sep = _first_clique_separator(sub, budget=cfg.node_budget)
        if sep is None:
            continue
        clique = tuple(sorted(v for c in sep for v in quotient.classes[comp[c]]))
        rest = g.without(clique)
        kept = [v for v in range(g.n) if v not in set(clique)]
        components = tuple(
            tuple(kept[i] for i in part) for part in rest.connected_components()
        )
        logger.debug("clique cutset %s splits into %d components", clique, len(components))
        return CliqueCutset(clique=clique, components=components)
    return None


# ------------------------------------------------------------------------------
def find_universal_vertex(g: Graph) -> int | None:
    """Lowest vertex adjacent to all others, or None."""
    return next((v for v in range(g.n) if g.degree(v) == g.n - 1), None)
