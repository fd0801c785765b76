"""7-bracelets: seven cliques around a cycle with three uncertain pairs.

Bags ``A1..A7`` are cliques; ``A_i`` is complete to ``A_{i+1}``. The only edges
between bags at distance two are the cross relations of the three uncertain pairs:

* ``e72`` between ``A7^+`` and ``A2^-``,
* ``e13`` between ``A1^+`` and ``A3^-``,
* ``e61`` between ``A6^+`` and ``A1^-``.

Vertex ids are arbitrary distinct integers; realization numbers them in sub-bag
declaration order (:data:`PART_KEYS`), ascending inside each sub-bag.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from chromalab.errors import InvalidSpecError
from chromalab.graphs.core import Edge, Graph
from chromalab.graphs.freeness import check_freeness
from chromalab.structure.realization import Realization

# ------------------------------------------------------------------------------
PART_KEYS: tuple[str, ...] = (
    "A1^0",
    "A1^+",
    "A1^-",
    "A2^0",
    "A2^-",
    "A3^0",
    "A3^-",
    "A4",
    "A5",
    "A6^0",
    "A6^+",
    "A7^0",
    "A7^+",
)

BAG_PARTS: dict[int, tuple[str, ...]] = {
    i: tuple(key for key in PART_KEYS if key.split("^")[0] == f"A{i}") for i in range(1, 8)
}

CROSS_RELATIONS: dict[str, tuple[str, str]] = {
    "e72": ("A7^+", "A2^-"),
    "e13": ("A1^+", "A3^-"),
    "e61": ("A6^+", "A1^-"),
}

_MIRROR_PARTS: dict[str, str] = {
    "A1^0": "A1^0",
    "A1^+": "A1^-",
    "A1^-": "A1^+",
    "A2^0": "A7^0",
    "A2^-": "A7^+",
    "A3^0": "A6^0",
    "A3^-": "A6^+",
    "A4": "A5",
    "A5": "A4",
    "A6^0": "A3^0",
    "A6^+": "A3^-",
    "A7^0": "A2^0",
    "A7^+": "A2^-",
}

_MIRROR_CROSS: dict[str, str] = {"e72": "e72", "e13": "e61", "e61": "e13"}


# ------------------------------------------------------------------------------
def zero_part(part: str) -> str:
    """The unsigned sub-bag of the bag that ``part`` belongs to."""
    return part.split("^")[0] + "^0"


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Violation:
    """One broken bracelet rule.

    Args:
        rule: Short rule name (``disjoint``, ``nonempty``, ``cross-endpoints``,
            ``pair-nonempty``, ``cross-cover``, ``freeness``).
        message: Human-readable description.
        witness: Offending vertex ids.
    """

    rule: str
    message: str
    witness: tuple[int, ...] = ()


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class BraceletSpec:
    """Sub-bags and cross relations of a 7-bracelet.

    Args:
        parts: Vertex ids per sub-bag key; missing keys are empty.
        e72: Pairs ``(a7, a2)`` with ``a7`` in ``A7^+`` and ``a2`` in ``A2^-``.
        e13: Pairs ``(a1, a3)`` with ``a1`` in ``A1^+`` and ``a3`` in ``A3^-``.
        e61: Pairs ``(a6, a1)`` with ``a6`` in ``A6^+`` and ``a1`` in ``A1^-``.
    """

    parts: Mapping[str, tuple[int, ...]]
    e72: frozenset[Edge] = field(default_factory=frozenset)
    e13: frozenset[Edge] = field(default_factory=frozenset)
    e61: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        unknown = sorted(set(self.parts) - set(PART_KEYS))
        if unknown:
            raise InvalidSpecError(f"unknown bracelet parts {unknown}")
        parts = {key: tuple(sorted(self.parts.get(key, ()))) for key in PART_KEYS}
        object.__setattr__(self, "parts", parts)
        for name in CROSS_RELATIONS:
            pairs = frozenset((int(a), int(b)) for a, b in getattr(self, name))
            object.__setattr__(self, name, pairs)

    # --------------------------------------------------------------------------
    @classmethod
    def sized(cls, sizes: Sequence[int]) -> BraceletSpec:
        """Bracelet with unsigned bags of the given sizes and consecutive ids."""
        if len(sizes) != 7:
            raise InvalidSpecError("a bracelet needs seven bag sizes")
        parts: dict[str, tuple[int, ...]] = {}
        start = 0
        for i, size in enumerate(sizes, start=1):
            key = BAG_PARTS[i][0]
            parts[key] = tuple(range(start, start + size))
            start += size
        return cls(parts=parts)

    # --------------------------------------------------------------------------
    def bag(self, i: int) -> tuple[int, ...]:
        """All vertices of ``A_i`` (``1 <= i <= 7``) in declaration order."""
        return tuple(v for key in BAG_PARTS[i] for v in self.parts[key])

    def bag_sizes(self) -> tuple[int, ...]:
        return tuple(len(self.bag(i)) for i in range(1, 8))

    def vertices(self) -> tuple[int, ...]:
        """All vertex ids in declaration order."""
        return tuple(v for key in PART_KEYS for v in self.parts[key])

    def part_of(self) -> dict[int, str]:
        return {v: key for key in PART_KEYS for v in self.parts[key]}

    def bag_of(self) -> dict[int, int]:
        """Map each vertex id to its bag number ``1..7``."""
        return {v: i for i in range(1, 8) for v in self.bag(i)}

    def cross(self, name: str) -> frozenset[Edge]:
        return frozenset(getattr(self, name))

    def cross_neighbors(self, name: str, v: int) -> frozenset[int]:
        """Neighbors of ``v`` across relation ``name`` (either side)."""
        pairs = self.cross(name)
        return frozenset(b for a, b in pairs if a == v) | frozenset(a for a, b in pairs if b == v)

    def has_one_uncertain_pair(self) -> bool:
        """True iff only the ``A7^+``/``A2^-`` pair can carry cross edges."""
        return not self.parts["A6^+"] and not self.parts["A3^-"]

    # --------------------------------------------------------------------------
    def mirror(self) -> BraceletSpec:
        """Reflect ``i -> 2 - i (mod 7)``, swapping ``+`` and ``-`` sub-bags."""
        parts = {_MIRROR_PARTS[key]: members for key, members in self.parts.items()}
        cross = {
            _MIRROR_CROSS[name]: frozenset((b, a) for a, b in self.cross(name))
            for name in CROSS_RELATIONS
        }
        return BraceletSpec(parts=parts, **cross)

    def normalized(self) -> BraceletSpec:
        """Move signed vertices without cross neighbors into their bag's ``^0`` part."""
        parts = {key: list(members) for key, members in self.parts.items()}
        for name, (left, right) in CROSS_RELATIONS.items():
            pairs = self.cross(name)
            touched_left = {a for a, _ in pairs}
            touched_right = {b for _, b in pairs}
            for side, touched in ((left, touched_left), (right, touched_right)):
                idle = [v for v in parts[side] if v not in touched]
                parts[side] = [v for v in parts[side] if v in touched]
                parts[zero_part(side)].extend(idle)
        return BraceletSpec(
            parts={key: tuple(members) for key, members in parts.items()},
            e72=self.e72,
            e13=self.e13,
            e61=self.e61,
        )

    def without(self, vertices: Iterable[int]) -> BraceletSpec:
        """Delete vertices, then :meth:`normalized`."""
        drop = frozenset(vertices)
        parts = {
            key: tuple(v for v in members if v not in drop) for key, members in self.parts.items()
        }
        cross = {
            name: frozenset((a, b) for a, b in self.cross(name) if a not in drop and b not in drop)
            for name in CROSS_RELATIONS
        }
        return BraceletSpec(parts=parts, **cross).normalized()

    # --------------------------------------------------------------------------
    def realize(self) -> Realization:
        """Flatten into a graph; realized vertex ``i`` is ``vertices()[i]``."""
        ids = self.vertices()
        if len(set(ids)) != len(ids):
            raise InvalidSpecError("bracelet vertex ids are not distinct")
        index = {vid: i for i, vid in enumerate(ids)}
        bags = [[index[v] for v in self.bag(i)] for i in range(1, 8)]
        edges: list[Edge] = []
        for i in range(7):
            bag, nxt = bags[i], bags[(i + 1) % 7]
            edges.extend((bag[a], bag[b]) for a in range(len(bag)) for b in range(a + 1, len(bag)))
            edges.extend((u, v) for u in bag for v in nxt)
        for name in CROSS_RELATIONS:
            edges.extend((index[a], index[b]) for a, b in self.cross(name))
        part_of = self.part_of()
        labels = [f"{part_of[vid]}:{vid}" for vid in ids]
        graph = Graph.from_edges(len(ids), edges, labels=labels)
        return Realization(
            graph=graph,
            bags=tuple(tuple(index[v] for v in self.parts[key]) for key in PART_KEYS),
            bag_names=PART_KEYS,
            ids=ids,
        )


# ------------------------------------------------------------------------------
def _structural_violations(spec: BraceletSpec) -> list[Violation]:
    found: list[Violation] = []
    ids = spec.vertices()
    repeated = sorted({v for v in ids if ids.count(v) > 1})
    if repeated:
        found.append(
            Violation(
                "disjoint", f"vertex ids used in several sub-bags: {repeated}", tuple(repeated)
            )
        )
        return found
    for i in range(1, 8):
        if not spec.bag(i):
            found.append(Violation("nonempty", f"A{i} is empty"))
    for name, (left, right) in CROSS_RELATIONS.items():
        lhs, rhs = set(spec.parts[left]), set(spec.parts[right])
        stray = sorted((a, b) for a, b in spec.cross(name) if a not in lhs or b not in rhs)
        for a, b in stray:
            found.append(
                Violation(
                    "cross-endpoints",
                    f"{name} pair ({a}, {b}) is not in {left} x {right}",
                    (a, b),
                )
            )
        for this, other in ((left, right), (right, left)):
            if spec.parts[this] and not spec.parts[other]:
                found.append(
                    Violation("pair-nonempty", f"{this} nonempty requires {other} nonempty")
                )
        touched = {v for pair in spec.cross(name) for v in pair}
        for part in (left, right):
            for v in spec.parts[part]:
                if v not in touched:
                    found.append(
                        Violation("cross-cover", f"{part} vertex {v} has no {name} neighbor", (v,))
                    )
    return found


# ------------------------------------------------------------------------------
def validate_bracelet(spec: BraceletSpec) -> list[Violation]:
    """Every broken bracelet rule, including freeness of the realization.

    Args:
        spec: Candidate bracelet.

    Returns:
        The violations; empty iff the spec is a valid 7-bracelet.
    """
    found = _structural_violations(spec)
    if found:
        return found
    realization = spec.realize()
    report = check_freeness(realization.graph)
    if not report.is_free and report.witness is not None:
        witness = tuple(realization.ids[v] for v in report.witness)
        found.append(
            Violation(
                "freeness",
                f"realization contains an induced {report.forbidden_kind} on {list(witness)}",
                witness,
            )
        )
    return found


# ------------------------------------------------------------------------------
def by_cross_degree(spec: BraceletSpec, name: str, vertices: Iterable[int]) -> list[int]:
    """Order ``vertices`` by cross-neighborhood size, largest first, ties by ascending id.

    In a valid bracelet cross neighborhoods are nested, so this is the inclusion order.
    """
    return sorted(vertices, key=lambda v: (-len(spec.cross_neighbors(name, v)), v))
