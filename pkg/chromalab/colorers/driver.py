"""Entry points: color an arbitrary class member, or any structure spec.

:func:`color_graph` follows the decomposition of a (P7, C4, C5)-free graph. Components
and clique cutsets are colored side by side, universal vertices and strong stable sets
cost one color each, and what is left must be a blowup of an induced subgraph of the
emerald. Bracelets cannot be recognized from a bare graph; they go through
:func:`color_spec`.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from chromalab.colorers.bracelet import color_bracelet
from chromalab.colorers.budget import BoundKind, ColorBudget
from chromalab.colorers.c7 import color_c7_equal
from chromalab.colorers.emerald import color_emerald_blowup
from chromalab.colorers.gx import color_g9, color_gx, g9_budget, gx_budget
from chromalab.colorers.layers import exact_bags
from chromalab.colorers.subemerald import (
    color_c7_plus_2f,
    color_c7_plus_2t,
    color_c7_plus_v,
    color_e_minus_8,
    color_subemerald_blowup,
)
from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import (
    BudgetExceededError,
    ColoringDefectError,
    NotInClassError,
    PreconditionError,
    StructureUnavailableError,
)
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring, verify_coloring
from chromalab.graphs.core import Graph
from chromalab.graphs.freeness import check_freeness
from chromalab.oracle.cliques import clique_number
from chromalab.oracle.coloring import chromatic_number_exact
from chromalab.oracle.decomposition import CliqueCutset, find_clique_cutset, find_universal_vertex
from chromalab.oracle.strong import find_strong_stable_set
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.bracelet import BraceletSpec
from chromalab.structure.realization import Realization
from chromalab.structure.recognize import embed_emerald_blowup

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type Spec = BlowupSpec | BraceletSpec


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class ColoredSpec:
    """A realized spec with its coloring and the budget it was checked against.

    Args:
        realization: The realized graph and bag layout.
        coloring: A proper coloring of ``realization.graph``.
        budget: The bound the coloring meets.
    """

    realization: Realization
    coloring: Coloring
    budget: ColorBudget


# ------------------------------------------------------------------------------
def _merge_at_cutset(
    cut: CliqueCutset, sides: Sequence[tuple[tuple[int, ...], Sequence[int]]]
) -> dict[int, int]:
    """Glue side colorings after permuting each so the clique gets the first side's colors.

    Args:
        cut: The clique cutset.
        sides: ``(vertices, colors)`` per side; ``colors[i]`` colors ``vertices[i]``.
    """
    (first_vertices, first_colors), *others = sides
    merged = dict(zip(first_vertices, first_colors, strict=True))
    on_clique = {merged[v] for v in cut.clique}
    for vertices, colors in others:
        local = dict(zip(vertices, colors, strict=True))
        perm = {local[v]: merged[v] for v in cut.clique}
        spare = (c for c in range(1, len(vertices) + len(on_clique) + 1) if c not in on_clique)
        for c in sorted(set(colors) - set(perm)):
            perm[c] = next(spare)
        assert len(set(perm.values())) == len(perm), "cutset merge must permute colors"
        merged |= {v: perm[c] for v, c in local.items()}
    return merged


# ------------------------------------------------------------------------------
def _strong_set_or_none(g: Graph, cfg: OracleConfig) -> tuple[int, ...] | None:
    if g.n > cfg.clique_enumeration_limit:
        return None
    try:
        return find_strong_stable_set(g, config=cfg)
    except BudgetExceededError:
        logger.warning("strong stable set search on %d vertices ran out of budget", g.n)
        return None


# ------------------------------------------------------------------------------
def _decompose(g: Graph, cfg: OracleConfig) -> list[int]:
    """Colors (arbitrary nonnegative integers) for every vertex of ``g``."""
    if g.n == 0:
        return []

    components = g.connected_components()
    if len(components) > 1:
        colors = [0] * g.n
        for comp in components:
            for v, c in zip(comp, _decompose(g.induced(list(comp)), cfg), strict=True):
                colors[v] = c
        return colors

    cut = find_clique_cutset(g, config=cfg)
    if cut is not None:
        logger.debug("clique cutset %s on %d vertices", cut.clique, g.n)
        sides: list[tuple[tuple[int, ...], Sequence[int]]] = []
        for comp in cut.components:
            vertices = tuple(sorted((*comp, *cut.clique)))
            colored = Coloring.from_colors(_decompose(g.induced(list(vertices)), cfg))
            sides.append((vertices, colored.assignment))
        merged = _merge_at_cutset(cut, sides)
        return [merged[v] for v in range(g.n)]

    u = find_universal_vertex(g)
    if u is not None:
        logger.debug("universal vertex %d", u)
        rest = _decompose(g.without([u]), cfg)
        return [*rest[:u], max(rest, default=-1) + 1, *rest[u:]]

    stable = _strong_set_or_none(g, cfg)
    if stable is not None:
        logger.debug("strong stable set %s", stable)
        rest = _decompose(g.without(stable), cfg)
        fresh = max(rest, default=-1) + 1
        kept = [v for v in range(g.n) if v not in set(stable)]
        colors = [fresh] * g.n
        for v, c in zip(kept, rest, strict=True):
            colors[v] = c
        return colors

    embedding = embed_emerald_blowup(g)
    if embedding is None:
        raise StructureUnavailableError(
            f"no cutset, universal vertex, strong stable set or emerald blowup "
            f"on a {g.n}-vertex piece; color bracelets from their spec"
        )
    logger.debug("emerald blowup with weights %s", embedding.spec.weights)
    colored = color_emerald_blowup(embedding.spec, config=cfg)
    realized = embedding.spec.realize()
    colors = [0] * g.n
    for local, mine in zip(realized.bags, embedding.bags, strict=True):
        for r, v in zip(local, mine, strict=True):
            colors[v] = colored.assignment[r]
    return colors


# ------------------------------------------------------------------------------
def color_graph(g: Graph, *, config: OracleConfig | None = None) -> Coloring:
    """Color a (P7, C4, C5)-free graph with at most ``ceil(11ω/9)`` colors.

    Args:
        g: Any graph of the class.
        config: Oracle limits for the searches along the way.

    Returns:
        A proper coloring of ``g``.

    Raises:
        NotInClassError: If ``g`` contains an induced C4, C5 or P7.
        StructureUnavailableError: If a piece of the decomposition is not recognized.
        ColoringDefectError: If the result is improper or over budget.
    """
    cfg = resolve_config(config)
    report = check_freeness(g)
    if not report.is_free:
        raise NotInClassError(report)
    coloring = Coloring.from_colors(_decompose(g, cfg))
    budget = ColorBudget.for_bound(BoundKind.ELEVEN_NINTHS, clique_number(g, config=cfg).omega)
    check = verify_coloring(g, coloring)
    if not check.is_proper or not budget.allows(coloring.k):
        raise ColoringDefectError(
            f"decomposition coloring: {check.reason or 'proper'}, "
            f"{coloring.k} colors against budget {budget.budget}"
        )
    logger.info("colored %d vertices with %d colors (omega %d)", g.n, coloring.k, budget.omega)
    return coloring


# ------------------------------------------------------------------------------
def _blowup_coloring(spec: BlowupSpec, cfg: OracleConfig) -> tuple[Coloring, ColorBudget]:
    omega = spec.omega
    match spec.name:
        case "gx":
            x = spec.weight("1")
            budget = ColorBudget(
                omega=omega, bound_kind=BoundKind.SEVEN_SIXTHS, budget=gx_budget(x)
            )
            return color_gx(spec, x, config=cfg), budget
        case "g9":
            x = spec.weight("1")
            budget = ColorBudget(
                omega=omega, bound_kind=BoundKind.ELEVEN_NINTHS, budget=g9_budget(x)
            )
            return color_g9(spec, x, config=cfg), budget
        case "c7" if len(set(spec.weights)) == 1:
            coloring = color_c7_equal(spec.weights[0])
        case "c7":
            coloring = color_subemerald_blowup(spec, config=cfg)
        case "c7v":
            coloring = color_c7_plus_v(spec, config=cfg)
        case "c7_2t":
            coloring = color_c7_plus_2t(spec, config=cfg)
        case "c7_2f":
            coloring = color_c7_plus_2f(spec, config=cfg)
        case "e_minus_8":
            coloring = color_e_minus_8(spec, config=cfg)
        case "emerald" | "special_emerald":
            budget = ColorBudget.for_bound(BoundKind.ELEVEN_NINTHS, omega)
            return color_emerald_blowup(spec, config=cfg), budget
        case _:
            raise PreconditionError(
                f"blowup {spec.name!r}", failures=["no constructive colorer for this base"]
            )
    return coloring, ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, omega)


# ------------------------------------------------------------------------------
def _kind(spec: Spec) -> str:
    return spec.name if isinstance(spec, BlowupSpec) else "bracelet"


# ------------------------------------------------------------------------------
def _exact(spec: Spec, realization: Realization, cfg: OracleConfig) -> Coloring:
    if isinstance(spec, BlowupSpec):
        return exact_bags(spec, config=cfg).to_coloring()
    _, coloring = chromatic_number_exact(realization.graph, config=cfg)
    return coloring


# ------------------------------------------------------------------------------
def color_spec(
    spec: Spec, *, bound: BoundKind | None = None, config: OracleConfig | None = None
) -> ColoredSpec:
    """Realize a spec and color it with the colorer its base (or bracelet shape) calls for.

    Args:
        spec: A blowup of a catalog base, or a 7-bracelet.
        bound: ``None`` for the spec's own bound, :attr:`BoundKind.EXACT` for an optimal
            coloring, or a constructive bound the spec's colorer must promise.
        config: Oracle limits.

    Returns:
        The realization, a verified coloring and the budget it meets.

    Raises:
        PreconditionError: If the requested bound is not one the colorer promises.
        SizeGuardError: If an exact coloring is asked for on a large target.
    """
    cfg = resolve_config(config)
    realization = spec.realize()
    if bound is BoundKind.EXACT:
        coloring = _exact(spec, realization, cfg)
        omega = clique_number(realization.graph, config=cfg).omega
        budget = ColorBudget.for_bound(BoundKind.EXACT, omega, exact=coloring.k)
    elif isinstance(spec, BraceletSpec):
        coloring = color_bracelet(spec, config=cfg)
        omega = clique_number(realization.graph, config=cfg).omega
        budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, omega)
    else:
        coloring, budget = _blowup_coloring(spec, cfg)
    if bound is not None and bound is not BoundKind.EXACT:
        requested = ColorBudget.for_bound(bound, budget.omega)
        if requested.budget < budget.budget:
            raise PreconditionError(
                f"{bound} bound",
                failures=[
                    f"the {_kind(spec)} colorer promises {budget.budget} colors "
                    f"({budget.bound_kind}), more than {requested.budget}"
                ],
            )
        budget = requested
    check = verify_coloring(realization.graph, coloring)
    if not check.is_proper or not budget.allows(coloring.k):
        raise ColoringDefectError(
            f"{_kind(spec)} coloring: {check.reason or 'proper'}, "
            f"{coloring.k} colors against budget {budget.budget}"
        )
    return ColoredSpec(realization=realization, coloring=coloring, budget=budget)
