"""True-twin classes: contract a graph to its twin-free base with class sizes as weights."""

from __future__ import annotations

from dataclasses import dataclass

from chromalab.graphs.core import Graph, blowup


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class TwinQuotient:
    """A graph contracted along its true-twin classes.

    Args:
        base: Twin-free graph on the classes, ordered by smallest member.
        weights: Class sizes.
        class_of: ``class_of[v]`` is the base vertex containing original vertex ``v``.
        classes: Members of each class, ascending.
    """

    base: Graph
    weights: tuple[int, ...]
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def realize(self) -> Graph:
        """Blow the base back up; isomorphic to the original graph."""
        graph, _ = blowup(self.base, self.weights)
        return graph


# ------------------------------------------------------------------------------
def quotient_by_true_twins(g: Graph) -> TwinQuotient:
    """Partition ``g`` into maximal classes with equal closed neighborhoods.

    Args:
        g: Any graph.

    Returns:
        The quotient; base labels are the comma-joined labels of each class.
    """
    by_neighborhood: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        by_neighborhood.setdefault(g.closed_neighborhood(v), []).append(v)
    classes = sorted(tuple(members) for members in by_neighborhood.values())
    class_of = [0] * g.n
    for c, members in enumerate(classes):
        for v in members:
            class_of[v] = c
    edges = {
        (min(class_of[u], class_of[v]), max(class_of[u], class_of[v]))
        for u, v in g.edges()
        if class_of[u] != class_of[v]
    }
    labels = [",".join(g.labels[v] for v in members) for members in classes]
    base = Graph.from_edges(len(classes), sorted(edges), labels=labels)
    return TwinQuotient(
        base=base,
        weights=tuple(len(members) for members in classes),
        class_of=tuple(class_of),
        classes=tuple(classes),
    )
