"""Maximum bipartite matching with a Koenig vertex-cover certificate."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from chromalab.graphs.core import Edge


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class MatchingCertificate:
    """A maximum matching and a minimum vertex cover of the same size.

    Args:
        matching: Matched ``(left, right)`` pairs, sorted.
        cover: Vertices covering every edge.
        left: Left side.
        right: Right side.
    """

    matching: tuple[Edge, ...]
    cover: frozenset[int]
    left: frozenset[int]
    right: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.matching)

    def partner(self, v: int) -> int | None:
        """Matched partner of ``v``, or None."""
        for a, b in self.matching:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def is_valid_for(self, edges: Iterable[Edge]) -> bool:
        """Check disjointness, cover validity and ``|matching| == |cover|``."""
        edge_set = {frozenset(e) for e in edges}
        ends = [v for pair in self.matching for v in pair]
        if len(ends) != len(set(ends)):
            return False
        if any(frozenset(pair) not in edge_set for pair in self.matching):
            return False
        if any(not (e & self.cover) for e in edge_set):
            return False
        return len(self.matching) == len(self.cover)


# ------------------------------------------------------------------------------
def max_bipartite_matching(
    left: Iterable[int], right: Iterable[int], edges: Iterable[Edge]
) -> MatchingCertificate:
    """Hopcroft-Karp matching plus the alternating-path vertex cover.

    Args:
        left: Left vertices.
        right: Right vertices, disjoint from ``left``.
        edges: Pairs with one endpoint on each side, in either orientation.

    Returns:
        The certificate; ``|matching| == |cover|`` by Koenig's theorem.

    Raises:
        ValueError: If the sides overlap or an edge does not run between them.
    """
    lhs, rhs = frozenset(left), frozenset(right)
    if lhs & rhs:
        raise ValueError(f"sides overlap on {sorted(lhs & rhs)}")
    oriented: list[Edge] = []
    for u, v in edges:
        if u in lhs and v in rhs:
            oriented.append((u, v))
        elif v in lhs and u in rhs:
            oriented.append((v, u))
        else:
            raise ValueError(f"edge ({u}, {v}) does not run between the two sides")
    g = nx.Graph()
    g.add_nodes_from(lhs)
    g.add_nodes_from(rhs)
    g.add_edges_from(oriented)
    mate = nx.bipartite.hopcroft_karp_matching(g, top_nodes=lhs)
    cover = nx.bipartite.to_vertex_cover(g, mate, top_nodes=lhs)
    matching = tuple(sorted((u, mate[u]) for u in lhs if u in mate))
    return MatchingCertificate(
        matching=matching, cover=frozenset(int(v) for v in cover), left=lhs, right=rhs
    )
