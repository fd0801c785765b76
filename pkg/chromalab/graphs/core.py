"""Immutable simple graphs on vertices ``0..n-1``.

The representation is deliberately small: a tuple of neighbor sets plus optional text
labels that survive induced subgraphs, quotients and realizations. Heavy lifting
(components, cliques, matchings, isomorphism) is delegated to networkx through
:meth:`Graph.to_networkx`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

# ------------------------------------------------------------------------------
type Edge = tuple[int, int]


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Graph:
    """A simple undirected graph.

    Args:
        n: Number of vertices.
        adjacency: ``adjacency[v]`` is the open neighborhood of ``v``.
        labels: One text label per vertex, used for provenance and diagnostics.

    Raises:
        ValueError: If the adjacency relation is not symmetric and irreflexive.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if len(self.adjacency) != self.n or len(self.labels) != self.n:
            raise ValueError("adjacency and labels must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"adjacency not symmetric for edge ({v}, {u})")

    # --------------------------------------------------------------------------
    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Edge], *, labels: Sequence[str] | None = None
    ) -> Graph:
        """Build a graph from an edge list.

        Args:
            n: Number of vertices.
            edges: Pairs of distinct vertices; duplicates are ignored.
            labels: Optional labels; defaults to ``"0".."n-1"``.

        Returns:
            The graph.
        """
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        names = tuple(str(v) for v in range(n)) if labels is None else tuple(labels)
        return cls(n=n, adjacency=tuple(frozenset(s) for s in nbrs), labels=names)

    @classmethod
    def from_labeled_edges(cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
        """Build a graph whose vertices are given by label, in the given order."""
        index = {name: i for i, name in enumerate(labels)}
        return cls.from_edges(
            len(labels), ((index[a], index[b]) for a, b in edges), labels=labels
        )

    @classmethod
    def cycle(cls, n: int) -> Graph:
        """The cycle ``C_n`` (``n >= 3``) labeled ``1..n``."""
        return cls.from_edges(
            n, ((i, (i + 1) % n) for i in range(n)), labels=[str(i + 1) for i in range(n)]
        )

    @classmethod
    def path(cls, n: int) -> Graph:
        """The path ``P_n`` on ``n`` vertices."""
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        """The complete graph ``K_n``."""
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    # --------------------------------------------------------------------------
    def vertices(self) -> range:
        """All vertices."""
        return range(self.n)

    def edges(self) -> Iterator[Edge]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def index_of(self, label: str) -> int:
        """Return the vertex carrying ``label``.

        Raises:
            KeyError: If no vertex has this label.
        """
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labeled {label!r}") from None

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(vs[j] in self.adjacency[vs[i]] for i in range(len(vs)) for j in range(i))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(
            vs[j] in self.adjacency[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs))
        )

    # --------------------------------------------------------------------------
    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; vertex ``i`` of the result is ``vertices[i]`` of ``self``."""
        position = {v: i for i, v in enumerate(vertices)}
        if len(position) != len(vertices):
            raise ValueError("induced() needs distinct vertices")
        adjacency = tuple(
            frozenset(position[u] for u in self.adjacency[v] if u in position) for v in vertices
        )
        return Graph(
            n=len(vertices), adjacency=adjacency, labels=tuple(self.labels[v] for v in vertices)
        )

    def without(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on the remaining vertices, in ascending order."""
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def complement(self) -> Graph:
        everything = frozenset(range(self.n))
        adjacency = tuple(everything - nbrs - {v} for v, nbrs in enumerate(self.adjacency))
        return Graph(n=self.n, adjacency=adjacency, labels=self.labels)

    def relabeled(self, labels: Sequence[str]) -> Graph:
        return Graph(n=self.n, adjacency=self.adjacency, labels=tuple(labels))

    # --------------------------------------------------------------------------
    def to_networkx(self) -> nx.Graph:
        """Return an equivalent networkx graph with nodes ``0..n-1`` inserted in order."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (``int8``)."""
        matrix = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            matrix[u, v] = 1
            matrix[v, u] = 1
        return matrix

    def connected_components(self) -> list[tuple[int, ...]]:
        """Components as sorted vertex tuples, ordered by their smallest vertex."""
        comps = [tuple(sorted(c)) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps)


# ------------------------------------------------------------------------------
def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Disjoint union; vertices of ``second`` are shifted by ``first.n``."""
    shift = first.n
    edges = list(first.edges()) + [(u + shift, v + shift) for u, v in second.edges()]
    return Graph.from_edges(first.n + second.n, edges, labels=first.labels + second.labels)


# ------------------------------------------------------------------------------
def blowup(base: Graph, weights: Sequence[int]) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Substitute a clique of size ``weights[u]`` for every base vertex ``u``.

    Cliques of size 0 are allowed. Bags are numbered consecutively in base order.

    Args:
        base: The base graph.
        weights: Nonnegative clique sizes, one per base vertex.

    Returns:
        The realized graph and, for each base vertex, the tuple of its bag vertices.
    """
    if len(weights) != base.n:
        raise ValueError("one weight per base vertex is required")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    bags: list[tuple[int, ...]] = []
    labels: list[str] = []
    start = 0
    for u, w in enumerate(weights):
        bags.append(tuple(range(start, start + w)))
        labels.extend(f"{base.labels[u]}.{j + 1}" for j in range(w))
        start += w
    edges: list[Edge] = []
    for u in range(base.n):
        bag = bags[u]
        edges.extend((bag[i], bag[j]) for i in range(len(bag)) for j in range(i + 1, len(bag)))
    for u, v in base.edges():
        edges.extend((a, b) for a in bags[u] for b in bags[v])
    return Graph.from_edges(start, edges, labels=labels), tuple(bags)


# ------------------------------------------------------------------------------
def embed_induced(small: Graph, big: Graph) -> tuple[int, ...] | None:
    """Find an embedding of ``small`` as an induced subgraph of ``big``.

    The search assigns ``small``'s vertices in order, trying ``big``'s vertices in
    ascending order, so the first embedding in lexicographic order is returned.

    Args:
        small: Pattern graph.
        big: Host graph.

    Returns:
        ``mapping`` with ``mapping[v]`` the host vertex of ``v``, or None.
    """
    if small.n > big.n:
        return None
    mapping: list[int] = []
    used: set[int] = set()

    def extend(v: int) -> bool:
        if v == small.n:
            return True
        for h in range(big.n):
            if h in used or big.degree(h) < small.degree(v):
                continue
            if all(
                (mapping[u] in big.adjacency[h]) == (u in small.adjacency[v]) for u in range(v)
            ):
                mapping.append(h)
                used.add(h)
                if extend(v + 1):
                    return True
                mapping.pop()
                used.discard(h)
        return False

    return tuple(mapping) if extend(0) else None
