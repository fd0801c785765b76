"""Fixed base graphs: the emerald and its distinguished induced subgraphs.

Vertices carry the labels used throughout the colorers (``"1".."11"`` for the
emerald, ``"t7"``/``"t2"`` and ``"f2"``/``"f7"`` for the extra vertices of the two
seven-cycle extensions), so procedures address roles by label, never by index.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from functools import cache

from chromalab.graphs.core import Graph
from chromalab.graphs.isomorphism import automorphisms

# ------------------------------------------------------------------------------
EMERALD_LABELS: tuple[str, ...] = tuple(str(i) for i in range(1, 12))

_EMERALD_EDGES: tuple[tuple[str, str], ...] = (
    ("1", "2"),
    ("2", "3"),
    ("3", "4"),
    ("4", "5"),
    ("5", "6"),
    ("6", "1"),
    ("7", "1"),
    ("7", "6"),
    ("7", "8"),
    ("7", "11"),
    ("8", "1"),
    ("8", "2"),
    ("8", "9"),
    ("9", "2"),
    ("9", "3"),
    ("9", "10"),
    ("10", "3"),
    ("10", "4"),
    ("10", "5"),
    ("11", "4"),
    ("11", "5"),
    ("11", "6"),
)

EMERALD = Graph.from_labeled_edges(EMERALD_LABELS, _EMERALD_EDGES)
"""The emerald: 11 vertices, 22 edges, 4-regular, clique number 3, stability number 3."""

C7 = Graph.cycle(7)

C7_PLUS_V = Graph.from_labeled_edges(
    (*C7.labels, "v"),
    [(C7.labels[u], C7.labels[v]) for u, v in C7.edges()]
    + [("v", "3"), ("v", "4"), ("v", "5"), ("v", "6")],
)
"""Seven-cycle plus a vertex complete to four consecutive cycle vertices."""

C7_PLUS_2T = Graph.from_labeled_edges(
    (*C7.labels, "t7", "t2"),
    [(C7.labels[u], C7.labels[v]) for u, v in C7.edges()]
    + [("t7", "7"), ("t7", "6"), ("t7", "1"), ("t2", "3"), ("t2", "2"), ("t2", "1")]
    + [("t7", "t2")],
)
"""Seven-cycle plus two adjacent vertices, each complete to three consecutive vertices."""

C7_PLUS_2F = Graph.from_labeled_edges(
    (*C7.labels, "f2", "f7"),
    [(C7.labels[u], C7.labels[v]) for u, v in C7.edges()]
    + [("f2", "4"), ("f2", "5"), ("f2", "6"), ("f2", "7")]
    + [("f7", "2"), ("f7", "3"), ("f7", "4"), ("f7", "5")],
)
"""Seven-cycle plus two nonadjacent vertices, each complete to four consecutive vertices."""

E_MINUS_8 = EMERALD.without([EMERALD.index_of("8")])

GX = C7_PLUS_2T
"""Same graph as ``C7_PLUS_2T``; weights obey :func:`gx_violations`."""

G9 = C7_PLUS_2T
"""Same graph as ``C7_PLUS_2T``; weights obey :func:`g9_violations`."""

SPECIAL_EMERALD = EMERALD

BASES: dict[str, Graph] = {
    "emerald": EMERALD,
    "c7": C7,
    "c7v": C7_PLUS_V,
    "c7_2t": C7_PLUS_2T,
    "c7_2f": C7_PLUS_2F,
    "e_minus_8": E_MINUS_8,
    "gx": GX,
    "special_emerald": SPECIAL_EMERALD,
    "g9": G9,
}

# ------------------------------------------------------------------------------
EMERALD_TRIANGLES: tuple[tuple[str, str, str], ...] = (
    ("1", "2", "8"),
    ("2", "8", "9"),
    ("2", "3", "9"),
    ("3", "9", "10"),
    ("3", "4", "10"),
    ("4", "5", "10"),
    ("4", "5", "11"),
    ("5", "6", "11"),
    ("6", "7", "11"),
    ("1", "6", "7"),
    ("1", "7", "8"),
)
"""All triangles of the emerald in cyclic order; consecutive ones share an edge."""

_EK3_SYSTEM: tuple[tuple[str, str, str], ...] = (
    ("1", "3", "5"),
    ("2", "5", "7"),
    ("4", "7", "9"),
    ("1", "3", "11"),
    ("3", "6", "8"),
    ("6", "8", "10"),
    ("2", "4", "6"),
    ("4", "7", "9"),
    ("1", "5", "9"),
    ("2", "10", "11"),
    ("8", "10", "11"),
)

REFLECTION_FIXING_8: dict[str, str] = {
    "1": "2",
    "2": "1",
    "3": "6",
    "6": "3",
    "4": "5",
    "5": "4",
    "7": "9",
    "9": "7",
    "10": "11",
    "11": "10",
    "8": "8",
}


# ------------------------------------------------------------------------------
def ek3_stable_system() -> list[frozenset[str]]:
    """The 11 stable triples of the emerald covering every vertex exactly three times.

    Used once each, they color ``E[K3]`` with 11 colors.
    """
    return [frozenset(t) for t in _EK3_SYSTEM]


# ------------------------------------------------------------------------------
def triangles_of(label: str) -> tuple[tuple[str, str, str], ...]:
    """The three emerald triangles through ``label``, in cyclic order."""
    idx = [i for i, t in enumerate(EMERALD_TRIANGLES) if label in t]
    if len(idx) != 3:
        raise KeyError(f"{label!r} is not an emerald vertex")
    # the three indices are consecutive modulo 11; rotate so the run is contiguous
    start = next(i for i in idx if (i - 1) % 11 not in idx)
    return tuple(EMERALD_TRIANGLES[(start + j) % 11] for j in range(3))


# ------------------------------------------------------------------------------
def middle_triangle(label: str) -> tuple[str, str, str]:
    """The middle one of the three triangles through ``label``."""
    return triangles_of(label)[1]


# ------------------------------------------------------------------------------
def end_triangles(label: str) -> tuple[tuple[str, str, str], tuple[str, str, str]]:
    """The two outer triangles through ``label``."""
    run = triangles_of(label)
    return run[0], run[2]


# ------------------------------------------------------------------------------
@cache
def emerald_automorphisms() -> tuple[dict[str, str], ...]:
    """The 22 automorphisms of the emerald as label maps, identity first."""
    return tuple(
        {EMERALD.labels[v]: EMERALD.labels[perm[v]] for v in range(EMERALD.n)}
        for perm in automorphisms(EMERALD)
    )


# ------------------------------------------------------------------------------
def automorphisms_sending(source: str, target: str) -> list[dict[str, str]]:
    """Emerald automorphisms mapping vertex ``source`` to ``target``."""
    return [sigma for sigma in emerald_automorphisms() if sigma[source] == target]


# ------------------------------------------------------------------------------
def special_emerald_weights(
    x: int, y: int, z: int, r: int, s: int, p: int
) -> tuple[int, ...]:
    """Bag sizes of the special emerald with parameters ``x, y, z, r, s`` and ``|L8| = p``.

    Raises:
        ValueError: If ``y + z != x + p`` or a bag size is negative.
    """
    if y + z != x + p:
        raise ValueError(f"special emerald needs y+z = x+p, got {y}+{z} != {x}+{p}")
    weights = (x, x, z - s, y, z, y - r, z + r, p, y + s, x, x)
    if any(w < 0 for w in weights):
        raise ValueError(f"negative bag size in {weights}")
    return weights


# ------------------------------------------------------------------------------
def special_emerald_parameters(weights: Mapping[str, int]) -> tuple[int, int, int, int, int, int]:
    """Read ``(x, y, z, r, s, p)`` off emerald weights, assuming the special pattern."""
    x, y, z, p = weights["1"], weights["4"], weights["5"], weights["8"]
    return x, y, z, weights["7"] - z, weights["9"] - y, p


# ------------------------------------------------------------------------------
def special_emerald_violations(weights: Mapping[str, int]) -> list[str]:
    """Every way ``weights`` (by emerald label) fails the special-emerald pattern."""
    x, y, z, r, s, p = special_emerald_parameters(weights)
    failures: list[str] = []
    for label in ("2", "10", "11"):
        if weights[label] != x:
            failures.append(f"|L{label}| = {weights[label]} != |L1| = {x}")
    if y + z != x + p:
        failures.append(f"y+z = {y + z} != x+p = {x + p}")
    if weights["3"] != z - s:
        failures.append(f"|L3| = {weights['3']} != z-s = {z - s}")
    if weights["6"] != y - r:
        failures.append(f"|L6| = {weights['6']} != y-r = {y - r}")
    if r < 0 or s < 0:
        failures.append(f"r = {r} and s = {s} must be nonnegative")
    return failures


# ------------------------------------------------------------------------------
def gx_violations(weights: Mapping[str, int], x: int, *, slack: int = 2) -> list[str]:
    """Every way ``weights`` (by ``GX`` label) fails the constraints with parameter ``x``.

    The constraints are ``|L1| = |L3| = |L4| = |L5| = |L6| = x``,
    ``|L7| + |Lt7| = |L2| + |Lt2| = x + slack`` and ``|Lt7| + |Lt2| <= x + slack``.
    """
    failures: list[str] = []
    if x < 1:
        failures.append(f"x = {x} must be >= 1")
    for label in ("1", "3", "4", "5", "6"):
        if weights[label] != x:
            failures.append(f"|L{label}| = {weights[label]} != x = {x}")
    if weights["7"] + weights["t7"] != x + slack:
        failures.append(f"|L7|+|Lt7| = {weights['7'] + weights['t7']} != {x + slack}")
    if weights["2"] + weights["t2"] != x + slack:
        failures.append(f"|L2|+|Lt2| = {weights['2'] + weights['t2']} != {x + slack}")
    if weights["t7"] + weights["t2"] > x + slack:
        failures.append(f"|Lt7|+|Lt2| = {weights['t7'] + weights['t2']} > {x + slack}")
    return failures


# ------------------------------------------------------------------------------
def g9_violations(weights: Mapping[str, int], x: int) -> list[str]:
    """Like :func:`gx_violations` with ``x + 1`` in place of ``x + 2``."""
    return gx_violations(weights, x, slack=1)


# ------------------------------------------------------------------------------
def labels_to_indices(g: Graph, labels: Sequence[str]) -> tuple[int, ...]:
    return tuple(g.index_of(label) for label in labels)
