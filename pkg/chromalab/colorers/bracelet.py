"""7-bracelets within ``ceil(7ω/6)`` colors.

All three procedures start from the layout of :func:`palettes_for`: bag ``A_i``
receives a run of ``x`` consecutive colors modulo ``ceil(7x/3)``, the ``C7[K_x]`` layout
when ``3 | x``. That layout is proper except possibly on the cross edges, so the work is
to decide which vertex of a bag gets which color of its block:

* one uncertain pair: colors shared by ``A7`` and ``A2`` go first onto ``A7^0 ∪ A2^0``,
  then onto disjoint non-edges between ``A7^+`` and ``A2^-`` from a maximum matching;
* three pairs: the block partition :class:`ColorBlocks` steers ``A1`` so that the
  ``A6``/``A1`` and ``A1``/``A3`` pairs can both be settled, with a list-coloring
  search when a non-neighbor exchange runs dry;
* unequal bags: strong stable sets are removed until the bags are equal.

Assignments map vertex ids to colors; they become a :class:`Coloring` of
``spec.realize().graph`` only at the end.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from chromalab.colorers.budget import BoundKind, ColorBudget, seven_sixths
from chromalab.colorers.c7 import c7_palette
from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import ColoringDefectError, InvalidSpecError, PreconditionError
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring, verify_coloring
from chromalab.oracle.cliques import CliqueReport, clique_number
from chromalab.oracle.coloring import color_from_lists, color_within
from chromalab.oracle.matching import max_bipartite_matching
from chromalab.oracle.strong import find_strong_stable_set, iter_strong_stable_sets
from chromalab.structure.bracelet import (
    CROSS_RELATIONS,
    BraceletSpec,
    by_cross_degree,
    validate_bracelet,
)
from chromalab.structure.realization import Realization

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type Assignment = dict[int, int]
type Palettes = Mapping[int, tuple[int, ...]]

_RELATION_OF: dict[str, str] = {
    part: name for name, pair in CROSS_RELATIONS.items() for part in pair
}

# bag pair (i, i+1) that is not a maximum clique -> roles of a strong stable set
_STRONG_ROLES: dict[int, tuple[str, str, str]] = {
    4: ("A1", "A6^+", "A3^-"),
    5: ("A4", "A2^-", "A7^+"),
    3: ("A5", "A7^+", "A2^-"),
    6: ("A5", "A3^-", "A1^-"),
    2: ("A4", "A6^+", "A1^+"),
    7: ("A4", "A2^-", "A6^+"),
    1: ("A5", "A7^+", "A3^-"),
}


# ------------------------------------------------------------------------------
def _bag_number(part: str) -> int:
    return int(part.split("^")[0][1:])


# ------------------------------------------------------------------------------
def palettes_for(x: int) -> dict[int, tuple[int, ...]]:
    """Color block of each bag ``1..7``, 0-based, within ``ceil(7x/3)`` colors.

    ``A1``, ``A3`` and ``A6`` are placed so that the five parts of :class:`ColorBlocks`
    have ``s = floor((x+1)/3)`` colors each, except ``C613`` with ``x - 2s``. For
    ``x = 3k`` this is the ``C7[K_x]`` layout with every part of size ``k``.

    Raises:
        ValueError: If ``x < 1``.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    m, side = c7_palette(x), (x + 1) // 3
    starts = (0, x, m - side, x - side, 2 * x - side, side, m - x)
    return {i: tuple((s + j) % m for j in range(x)) for i, s in enumerate(starts, start=1)}


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class ColorBlocks:
    """Partition of ``φ(A1) ∪ φ(A3) ∪ φ(A6)`` by which of the three blocks hold a color.

    Under :func:`palettes_for` the parts differ in size by at most one and
    ``|C613| <= |C13| + 1``, which is what the non-neighbor exchange needs.
    """

    only_6: tuple[int, ...]
    six_one: tuple[int, ...]
    six_one_three: tuple[int, ...]
    one_three: tuple[int, ...]
    only_3: tuple[int, ...]

    @classmethod
    def of(cls, palettes: Palettes) -> ColorBlocks:
        p1, p3, p6 = (frozenset(palettes[i]) for i in (1, 3, 6))
        return cls(
            only_6=tuple(sorted(p6 - p1 - p3)),
            six_one=tuple(sorted((p1 & p6) - p3)),
            six_one_three=tuple(sorted(p1 & p6 & p3)),
            one_three=tuple(sorted((p1 & p3) - p6)),
            only_3=tuple(sorted(p3 - p1 - p6)),
        )


# ------------------------------------------------------------------------------
def cross_omega(spec: BraceletSpec, name: str, *, config: OracleConfig | None = None) -> int:
    """Clique number of the subgraph on the two sub-bags of cross relation ``name``."""
    realization = spec.realize()
    left, right = CROSS_RELATIONS[name]
    members = [*realization.bag(left), *realization.bag(right)]
    return clique_number(realization.graph.induced(members), config=config).omega


# ------------------------------------------------------------------------------
def _match_colors(
    vertices: Sequence[int],
    colors: Sequence[int],
    forbidden: Mapping[int, frozenset[int]],
    *,
    what: str,
) -> Assignment:
    """Give every color to one vertex, never color ``c`` to a vertex in ``forbidden[c]``."""
    if len(vertices) != len(colors):
        raise ColoringDefectError(f"{what}: {len(vertices)} vertices for {len(colors)} colors")
    offset = len(colors)
    edges = [
        (i, offset + j)
        for i, c in enumerate(colors)
        for j, v in enumerate(vertices)
        if v not in forbidden.get(c, frozenset())
    ]
    found = max_bipartite_matching(
        range(offset), range(offset, offset + len(vertices)), edges
    )
    if found.size < len(colors):
        raise ColoringDefectError(f"{what}: colors cannot avoid their cross neighbors")
    return {vertices[j - offset]: colors[i] for i, j in found.matching}


# ------------------------------------------------------------------------------
def _complete_bag(
    spec: BraceletSpec, bag: int, palettes: Palettes, done: Assignment
) -> Assignment:
    """Place the unused colors of ``bag``'s block on its uncolored vertices.

    A color already held by a cross vertex of another bag avoids that vertex's cross
    neighbors here.
    """
    vertices = [v for v in spec.bag(bag) if v not in done]
    if not vertices:
        return done
    used = {done[v] for v in spec.bag(bag) if v in done}
    colors = [c for c in palettes[bag] if c not in used]
    forbidden: dict[int, frozenset[int]] = {c: frozenset() for c in colors}
    for name, (left, right) in CROSS_RELATIONS.items():
        for mine, other in ((left, right), (right, left)):
            if _bag_number(mine) != bag:
                continue
            for holder in spec.parts[other]:
                c = done.get(holder)
                if c is not None and c in forbidden:
                    forbidden[c] |= spec.cross_neighbors(name, holder)
    return done | _match_colors(vertices, colors, forbidden, what=f"A{bag}")


# ------------------------------------------------------------------------------
def _resolve_pair(
    spec: BraceletSpec, name: str, palettes: Palettes, fixed: Assignment
) -> Assignment:
    """Color both bags of cross relation ``name`` around the colors already in ``fixed``.

    Shared colors that are still free go onto uncolored vertices without cross edges,
    then onto disjoint non-adjacent cross pairs; everything else is completed bag by bag.

    Raises:
        ColoringDefectError: If there are fewer non-adjacent pairs than shared colors.
    """
    left, right = CROSS_RELATIONS[name]
    bags = (_bag_number(left), _bag_number(right))
    done = dict(fixed)
    held = {c for b in bags for v in spec.bag(b) if (c := done.get(v)) is not None}
    shared = sorted(set(palettes[bags[0]]) & set(palettes[bags[1]]))
    pending = [c for c in shared if c not in held]
    crossing = set(spec.parts[left]) | set(spec.parts[right])
    quiet = [v for b in bags for v in spec.bag(b) if v not in done and v not in crossing]
    for v, c in zip(quiet, pending, strict=False):
        done[v] = c
    pending = pending[len(quiet) :]
    if pending:
        lhs = [v for v in spec.parts[left] if v not in done]
        rhs = [v for v in spec.parts[right] if v not in done]
        pairs = spec.cross(name)
        non_edges = [(a, b) for a in lhs for b in rhs if (a, b) not in pairs]
        matching = max_bipartite_matching(lhs, rhs, non_edges).matching if lhs and rhs else ()
        if len(matching) < len(pending):
            raise ColoringDefectError(
                f"{name}: {len(pending)} shared colors, {len(matching)} disjoint non-edges"
            )
        logger.debug("%s: %d shared colors on matched non-edges", name, len(pending))
        for c, (a, b) in zip(pending, matching, strict=False):
            done[a] = c
            done[b] = c
    for b in bags:
        done = _complete_bag(spec, b, palettes, done)
    return done


# ------------------------------------------------------------------------------
def _complete_all(spec: BraceletSpec, palettes: Palettes, done: Assignment) -> Assignment:
    for b in range(1, 8):
        done = _complete_bag(spec, b, palettes, done)
    return done


# ------------------------------------------------------------------------------
def non_neighbor_map(
    spec: BraceletSpec, name: str, sources: Sequence[int], targets: Sequence[int]
) -> dict[int, int]:
    """Injective map sending each source to a cross non-neighbor among ``targets``.

    ``sources`` must be in decreasing cross-neighborhood order.

    Raises:
        ColoringDefectError: If some source runs out of unused non-neighbors.
    """
    chosen: dict[int, int] = {}
    for r in sources:
        blocked = spec.cross_neighbors(name, r) | set(chosen.values())
        options = [s for s in sorted(targets) if s not in blocked]
        if not options:
            raise ColoringDefectError(f"{name}: {r} has no unused non-neighbor")
        chosen[r] = options[0]
    if len(set(chosen.values())) != len(chosen) or any(
        s in spec.cross_neighbors(name, r) for r, s in chosen.items()
    ):
        raise ColoringDefectError(f"{name}: non-neighbor map is not injective")
    return chosen


# ------------------------------------------------------------------------------
def _list_assignment(
    spec: BraceletSpec, x: int, palettes: Palettes, *, config: OracleConfig
) -> Assignment:
    """Search for an assignment from the bag blocks directly, then from all colors."""
    realization = spec.realize()
    bag_of = spec.bag_of()
    lists = [palettes[bag_of[vid]] for vid in realization.ids]
    found = color_from_lists(realization.graph, lists, config=config)
    if found is not None:
        return {realization.ids[i]: c for i, c in found.items()}
    logger.warning("x=%d: no coloring from the blocks; searching all %d colors", x, c7_palette(x))
    free = color_within(realization.graph, c7_palette(x), config=config)
    if free is None:
        raise ColoringDefectError(f"equal bracelet x={x}: no coloring with {c7_palette(x)} colors")
    return {realization.ids[i]: c for i, c in enumerate(free.assignment)}


# ------------------------------------------------------------------------------
def _block_assignment(
    spec: BraceletSpec, x: int, palettes: Palettes, *, mirrored: bool = False
) -> Assignment:
    """Settle the ``A6``/``A1`` and ``A1``/``A3`` pairs through :class:`ColorBlocks`.

    Raises:
        ColoringDefectError: If a block count or a non-neighbor exchange does not work out.
    """
    blocks = ColorBlocks.of(palettes)
    parts = spec.parts
    lead_minus, lead_plus = len(blocks.one_three), len(blocks.six_one)
    if len(parts["A1^+"]) > lead_plus and len(parts["A1^-"]) <= lead_plus and not mirrored:
        logger.debug("equal bracelet x=%d: mirrored so that A1^+ is the short side", x)
        return _block_assignment(spec.mirror(), x, palettes, mirrored=True)
    if len(parts["A1^+"]) <= lead_plus:
        logger.debug("equal bracelet x=%d: A1^+ takes colors from C61", x)
        fixed = dict(zip(parts["A1^+"], blocks.six_one, strict=False))
        done = _resolve_pair(spec, "e61", palettes, fixed)
        done = _complete_bag(spec, 3, palettes, done)
    else:
        minus = by_cross_degree(spec, "e61", parts["A1^-"])
        plus = by_cross_degree(spec, "e13", parts["A1^+"])
        r_minus, r_plus = minus[lead_minus:], plus[lead_plus:]
        rest = [*r_minus, *r_plus, *parts["A1^0"]]
        triple = blocks.six_one_three
        if len(minus) < lead_minus or len(rest) != len(triple):
            raise ColoringDefectError(
                f"|R1^-|+|R1^+|+|A1^0| = {len(rest)} != |C613| = {len(triple)}"
            )
        done = dict(zip(minus[:lead_minus], blocks.one_three, strict=True))
        done |= dict(zip(plus[:lead_plus], blocks.six_one, strict=True))
        if len(r_minus) <= len(parts["A6^0"]):
            logger.debug("equal bracelet x=%d: R1^- fits on A6^0", x)
            for r, c, w in zip(r_minus, triple, parts["A6^0"], strict=False):
                done[r] = c
                done[w] = c
            done |= dict(zip(rest[len(r_minus) :], triple[len(r_minus) :], strict=True))
        elif len(r_plus) <= len(parts["A3^0"]) and not mirrored:
            logger.debug("equal bracelet x=%d: mirrored so that R1^- fits on A6^0", x)
            return _block_assignment(spec.mirror(), x, palettes, mirrored=True)
        else:
            logger.debug("equal bracelet x=%d: injective non-neighbor maps", x)
            done |= dict(zip(rest, triple, strict=True))
            f = non_neighbor_map(spec, "e61", r_minus, parts["A6^+"])
            g = non_neighbor_map(spec, "e13", r_plus, parts["A3^-"])
            done |= {s: done[r] for r, s in (f | g).items()}
        done = _complete_bag(spec, 6, palettes, done)
        done = _complete_bag(spec, 3, palettes, done)
    done = _resolve_pair(spec, "e72", palettes, done)
    return _complete_all(spec, palettes, done)


# ------------------------------------------------------------------------------
def _equal_assignment(spec: BraceletSpec, x: int, *, config: OracleConfig) -> Assignment:
    palettes = palettes_for(x)
    try:
        return _block_assignment(spec, x, palettes)
    except ColoringDefectError as err:
        logger.warning("equal bracelet x=%d: %s; searching the block lists", x, err)
        return _list_assignment(spec, x, palettes, config=config)


# ------------------------------------------------------------------------------
def _one_pair_assignment(spec: BraceletSpec, x: int) -> Assignment:
    palettes = palettes_for(x)
    return _complete_all(spec, palettes, _resolve_pair(spec, "e72", palettes, {}))


# ------------------------------------------------------------------------------
def _to_coloring(
    spec: BraceletSpec, done: Assignment, budget: ColorBudget, *, what: str
) -> Coloring:
    """Coloring of ``spec.realize().graph``; raises unless proper and within budget."""
    realization = spec.realize()
    coloring = Coloring.from_colors([done[vid] for vid in realization.ids])
    check = verify_coloring(realization.graph, coloring)
    failures = [] if check.is_proper else [check.reason]
    if not budget.allows(coloring.k):
        failures.append(
            f"{coloring.k} colors exceed the {budget.bound_kind} budget {budget.budget}"
        )
    if failures:
        raise ColoringDefectError(f"{what}: " + "; ".join(failures))
    logger.debug("%s: %d colors, budget %d", what, coloring.k, budget.budget)
    return coloring


# ------------------------------------------------------------------------------
def _equal_failures(
    spec: BraceletSpec, x: int, relations: Sequence[str], config: OracleConfig
) -> list[str]:
    failures: list[str] = []
    if x < 1:
        failures.append(f"x = {x} must be >= 1")
    for i, size in enumerate(spec.bag_sizes(), start=1):
        if size != x:
            failures.append(f"|A{i}| = {size} != x = {x}")
    for name in relations:
        omega = cross_omega(spec, name, config=config)
        if omega > x:
            failures.append(f"clique number {omega} across {name} exceeds x = {x}")
    return failures


# ------------------------------------------------------------------------------
def color_bracelet_one_pair(
    spec: BraceletSpec, x: int, *, config: OracleConfig | None = None
) -> Coloring:
    """Color an equal-size bracelet whose only cross edges run between ``A7^+`` and ``A2^-``.

    Args:
        spec: Bracelet with every bag of size ``x`` and ``A6^+ = A3^- = ∅``.
        x: Common bag size.
        config: Oracle limits.

    Returns:
        A coloring of ``spec.realize().graph`` with at most ``ceil(7x/3)`` colors.

    Raises:
        PreconditionError: Listing every failed precondition.
    """
    cfg = resolve_config(config)
    failures = _equal_failures(spec, x, ("e72",), cfg)
    for part in ("A6^+", "A3^-"):
        if spec.parts[part]:
            failures.append(f"{part} must be empty")
    if failures:
        raise PreconditionError("bracelet with one uncertain pair", failures=failures)
    budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, 2 * x)
    done = _one_pair_assignment(spec, x)
    return _to_coloring(spec, done, budget, what=f"one-pair bracelet x={x}")


# ------------------------------------------------------------------------------
def color_bracelet_equal(
    spec: BraceletSpec, x: int, *, config: OracleConfig | None = None
) -> Coloring:
    """Color an equal-size bracelet whose three cross clique numbers are at most ``x``.

    Raises:
        PreconditionError: Listing every failed precondition.
    """
    cfg = resolve_config(config)
    failures = _equal_failures(spec, x, tuple(CROSS_RELATIONS), cfg)
    if failures:
        raise PreconditionError("equal-size bracelet", failures=failures)
    budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, 2 * x)
    done = _equal_assignment(spec.normalized(), x, config=cfg)
    return _to_coloring(spec, done, budget, what=f"equal bracelet x={x}")


# ------------------------------------------------------------------------------
def _designated(spec: BraceletSpec, role: str) -> int | None:
    """Vertex for a role: a bag vertex (``^0`` first) or a cross vertex of largest degree."""
    if "^" not in role:
        bag = spec.bag(int(role[1:]))
        return bag[0] if bag else None
    if spec.parts[role]:
        return by_cross_degree(spec, _RELATION_OF[role], spec.parts[role])[0]
    bag = spec.bag(_bag_number(role))
    return bag[0] if bag else None


# ------------------------------------------------------------------------------
def _strong_stable_set(
    spec: BraceletSpec, realization: Realization, report: CliqueReport, *, config: OracleConfig
) -> tuple[int, ...] | None:
    """Realized vertices of a strong stable set, preferring ones that keep every bag."""
    graph = realization.graph
    index = realization.index_of_id()
    bag_of = spec.bag_of()
    sizes = spec.bag_sizes()

    def keeps_bags(chosen: tuple[int, ...]) -> bool:
        hit = [bag_of[realization.ids[v]] for v in chosen]
        return all(hit.count(i) < sizes[i - 1] for i in set(hit))

    def is_strong(chosen: tuple[int, ...]) -> bool:
        picked = set(chosen)
        return graph.is_stable(chosen) and all(picked & set(c) for c in report.all_maximum_cliques)

    if report.all_maximum_cliques:
        for i in range(1, 8):
            if sizes[i - 1] + sizes[i % 7] == report.omega:
                continue
            roles = [_designated(spec, role) for role in _STRONG_ROLES[i]]
            chosen = tuple(sorted({index[v] for v in roles if v is not None}))
            if is_strong(chosen) and keeps_bags(chosen):
                logger.debug("A%d ∪ A%d not maximum: designated set %s", i, i % 7 + 1, chosen)
                return chosen
    found = next(iter_strong_stable_sets(graph, accept=keeps_bags, config=config), None)
    if found is not None:
        return found
    return find_strong_stable_set(graph, config=config)


# ------------------------------------------------------------------------------
def _bracelet_assignment(spec: BraceletSpec, *, config: OracleConfig) -> Assignment:
    realization = spec.realize()
    report = clique_number(realization.graph, config=config)
    sizes = spec.bag_sizes()
    if all(sizes[i] + sizes[(i + 1) % 7] == report.omega for i in range(7)):
        x = sizes[0]
        if spec.has_one_uncertain_pair():
            return _one_pair_assignment(spec, x)
        return _equal_assignment(spec, x, config=config)
    removed = _strong_stable_set(spec, realization, report, config=config)
    if removed is None:
        raise ColoringDefectError(f"bracelet with bags {sizes}: unequal and no strong stable set")
    ids = [realization.ids[v] for v in removed]
    rest_spec = spec.without(ids)
    if all(rest_spec.bag_sizes()):
        rest = _bracelet_assignment(rest_spec, config=config)
    else:
        # a bag ran empty: what is left is no longer a bracelet
        rest_realization = rest_spec.realize()
        k = seven_sixths(report.omega - 1)
        colored = color_within(rest_realization.graph, k, config=config)
        if colored is None:
            raise ColoringDefectError(f"bracelet remainder needs more than {k} colors")
        rest = {rest_realization.ids[i]: c for i, c in enumerate(colored.assignment)}
    fresh = max(rest.values(), default=-1) + 1
    return rest | dict.fromkeys(ids, fresh)


# ------------------------------------------------------------------------------
def color_bracelet(spec: BraceletSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color a 7-bracelet with at most ``ceil(7ω/6)`` colors.

    Strong stable sets are removed one color at a time until every ``A_i ∪ A_{i+1}`` is
    a maximum clique; the equal-size procedures color what is left.

    Args:
        spec: A bracelet passing :func:`validate_bracelet`.
        config: Oracle limits.

    Returns:
        A coloring of ``spec.realize().graph``.

    Raises:
        InvalidSpecError: If the spec is not a valid 7-bracelet.
        ColoringDefectError: If a construction comes out improper or over budget.
    """
    cfg = resolve_config(config)
    violations = validate_bracelet(spec)
    if violations:
        raise InvalidSpecError(
            f"invalid bracelet: {violations[0].message}", violations=violations
        )
    omega = clique_number(spec.realize().graph, config=cfg).omega
    done = _bracelet_assignment(spec.normalized(), config=cfg)
    budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, omega)
    return _to_coloring(spec, done, budget, what="bracelet")
