"""Induced P7 / C4 / C5 detection with re-checkable witnesses."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from chromalab.exp.logging import get_logger
from chromalab.graphs.core import Graph
from chromalab.graphs.twins import quotient_by_true_twins

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
class ForbiddenKind(StrEnum):
    """The three forbidden induced subgraphs, in scan order."""

    C4 = "C4"
    C5 = "C5"
    P7 = "P7"


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class FreenessReport:
    """Outcome of :func:`check_freeness`.

    Args:
        is_free: True iff no induced P7, C4 or C5 exists.
        witness: Vertices of the forbidden subgraph in cycle/path order, or None.
        forbidden_kind: Which subgraph the witness induces, or None.
    """

    is_free: bool
    witness: tuple[int, ...] | None = None
    forbidden_kind: ForbiddenKind | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "is_free": self.is_free,
            "witness": None if self.witness is None else list(self.witness),
            "forbidden_kind": None if self.forbidden_kind is None else str(self.forbidden_kind),
        }


# ------------------------------------------------------------------------------
def find_induced_c4(g: Graph) -> tuple[int, ...] | None:
    """First induced C4 by nonadjacent-pair common-neighbor scan."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = sorted(g.adjacency[u] & g.adjacency[v])
            for i, a in enumerate(common):
                for b in common[i + 1 :]:
                    if not g.has_edge(a, b):
                        return (u, a, v, b)
    return None


# ------------------------------------------------------------------------------
def find_induced_cycle(g: Graph, length: int) -> tuple[int, ...] | None:
    """First induced cycle of the given length (``>= 4``).

    Cycles are grown from their smallest vertex, so each cycle is met from one start.
    """
    if length < 4:
        raise ValueError("length must be >= 4")
    path: list[int] = []

    def grow(start: int) -> bool:
        last = path[-1]
        position = len(path)
        for w in sorted(g.adjacency[last]):
            if w <= start or w in path:
                continue
            if any(g.has_edge(w, p) for p in path[1:-1]):
                continue
            closes = position >= 2 and g.has_edge(w, start)
            if position == length - 1:
                if not closes:
                    continue
                path.append(w)
                return True
            if closes:
                continue
            path.append(w)
            if grow(start):
                return True
            path.pop()
        return False

    for start in range(g.n):
        path[:] = [start]
        if grow(start):
            return tuple(path)
    return None


# ------------------------------------------------------------------------------
def find_induced_path(g: Graph, length: int) -> tuple[int, ...] | None:
    """First induced path on ``length`` vertices, by depth-first extension."""
    if length < 1:
        raise ValueError("length must be >= 1")
    path: list[int] = []

    def grow() -> bool:
        if len(path) == length:
            return True
        last = path[-1]
        for w in sorted(g.adjacency[last]):
            if w in path or any(g.has_edge(w, p) for p in path[:-1]):
                continue
            path.append(w)
            if grow():
                return True
            path.pop()
        return False

    for start in range(g.n):
        path[:] = [start]
        if grow():
            return tuple(path)
    return None


# ------------------------------------------------------------------------------
def _scan(g: Graph) -> FreenessReport:
    c4 = find_induced_c4(g)
    if c4 is not None:
        return FreenessReport(is_free=False, witness=c4, forbidden_kind=ForbiddenKind.C4)
    c5 = find_induced_cycle(g, 5)
    if c5 is not None:
        return FreenessReport(is_free=False, witness=c5, forbidden_kind=ForbiddenKind.C5)
    p7 = find_induced_path(g, 7)
    if p7 is not None:
        return FreenessReport(is_free=False, witness=p7, forbidden_kind=ForbiddenKind.P7)
    return FreenessReport(is_free=True)


# ------------------------------------------------------------------------------
def check_freeness(g: Graph) -> FreenessReport:
    """Decide whether ``g`` is (P7, C4, C5)-free.

    None of the three forbidden graphs has a pair of true twins, so an induced copy in
    ``g`` uses at most one vertex per twin class and the scan can run on the twin
    quotient. The witness is reported on the smallest member of each class.

    Args:
        g: Graph to check.

    Returns:
        A FreenessReport; the witness is found in scan order C4, then C5, then P7.
    """
    quotient = quotient_by_true_twins(g)
    report = _scan(quotient.base)
    logger.debug(
        "freeness scan on %d-vertex quotient of %d-vertex graph: %s",
        quotient.base.n,
        g.n,
        "free" if report.is_free else report.forbidden_kind,
    )
    if report.is_free or report.witness is None:
        return report
    witness = tuple(quotient.classes[c][0] for c in report.witness)
    return FreenessReport(is_free=False, witness=witness, forbidden_kind=report.forbidden_kind)


# ------------------------------------------------------------------------------
def induces(g: Graph, sequence: Sequence[int], kind: ForbiddenKind) -> bool:
    """True iff ``sequence`` induces the cycle or path ``kind`` in the given order."""
    size = {ForbiddenKind.C4: 4, ForbiddenKind.C5: 5, ForbiddenKind.P7: 7}[kind]
    if len(sequence) != size or len(set(sequence)) != size:
        return False
    cyclic = kind is not ForbiddenKind.P7
    for i in range(size):
        for j in range(i + 1, size):
            consecutive = j == i + 1 or (cyclic and i == 0 and j == size - 1)
            if g.has_edge(sequence[i], sequence[j]) != consecutive:
                return False
    return True


# ------------------------------------------------------------------------------
def verify_witness(g: Graph, report: FreenessReport) -> bool:
    """Re-check a negative report against ``g``; positive reports verify trivially."""
    if report.is_free:
        return report.witness is None
    if report.witness is None or report.forbidden_kind is None:
        return False
    return induces(g, report.witness, report.forbidden_kind)
