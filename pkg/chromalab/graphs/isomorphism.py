"""Small-graph isomorphism, automorphisms, hashing and perfectness checks via networkx."""

from __future__ import annotations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import SizeGuardError
from chromalab.graphs.core import Graph
from chromalab.graphs.freeness import find_induced_cycle

PERFECTNESS_LIMIT = 16


# ------------------------------------------------------------------------------
def is_isomorphic_small(
    g1: Graph, g2: Graph, *, config: OracleConfig | None = None
) -> dict[int, int] | None:
    """Find an isomorphism between two small graphs.

    Args:
        g1: First graph.
        g2: Second graph.
        config: Supplies the vertex limit (12 by default).

    Returns:
        A bijection ``g1 -> g2`` preserving adjacency and non-adjacency, or None.

    Raises:
        SizeGuardError: If either graph exceeds the limit.
    """
    limit = resolve_config(config).isomorphism_limit
    for g in (g1, g2):
        if g.n > limit:
            raise SizeGuardError("is_isomorphic_small", size=g.n, limit=limit)
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None
    matcher = GraphMatcher(g1.to_networkx(), g2.to_networkx())
    for mapping in matcher.isomorphisms_iter():
        return {int(u): int(v) for u, v in sorted(mapping.items())}
    return None


# ------------------------------------------------------------------------------
def automorphisms(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of ``g`` as permutation tuples, sorted lexicographically."""
    nxg = g.to_networkx()
    perms = {
        tuple(mapping[v] for v in range(g.n))
        for mapping in GraphMatcher(nxg, nxg).isomorphisms_iter()
    }
    return tuple(sorted(perms))


# ------------------------------------------------------------------------------
def canonical_hash(g: Graph, *, iterations: int = 4) -> str:
    """Weisfeiler-Lehman hash; equal for isomorphic graphs."""
    return str(nx.weisfeiler_lehman_graph_hash(g.to_networkx(), iterations=iterations))


# ------------------------------------------------------------------------------
def is_perfect_small(g: Graph) -> bool:
    """Perfectness test by searching odd holes and odd antiholes.

    Raises:
        SizeGuardError: If ``g`` has more than 16 vertices.
    """
    if g.n > PERFECTNESS_LIMIT:
        raise SizeGuardError("is_perfect_small", size=g.n, limit=PERFECTNESS_LIMIT)
    complement = g.complement()
    for length in range(5, g.n + 1, 2):
        if find_induced_cycle(g, length) is not None:
            return False
        if find_induced_cycle(complement, length) is not None:
            return False
    return True
