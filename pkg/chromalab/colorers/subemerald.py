"""Blowups of induced subgraphs of the emerald, within ``ceil(7ω/6)`` colors.

Three bases carry explicit constructions: ``C7 + v`` (peel an equal seven-cycle
blowup, color the perfect rest exactly), ``C7 + 2t`` and ``E - 8`` (strong stable
sets until every maximal clique is maximum, then a split into two equal seven-cycle
layers) and ``C7 + 2f`` (peel the stable set ``{1, f2, f7}``). A ``C7 + 2t`` or ``E - 8``
residual that has no strong stable set, or misses the layer pattern, is covered within
the budget with a warning. Everything else is reduced to one of these by
:func:`subemerald_bags`: drop empty bags, merge true twins, recognize the quotient,
color it and split merged colors back among the twins.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Protocol

from chromalab.colorers.budget import BoundKind, ColorBudget, seven_sixths
from chromalab.colorers.c7 import c7_layer, c7_palette, peel_c7
from chromalab.colorers.layers import (
    BagColorer,
    BagColoring,
    bags_within,
    exact_bags,
    finish,
    strong_stable_step,
)
from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import PreconditionError
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring
from chromalab.graphs.core import Graph
from chromalab.graphs.isomorphism import PERFECTNESS_LIMIT, is_isomorphic_small, is_perfect_small
from chromalab.graphs.twins import quotient_by_true_twins
from chromalab.oracle.cliques import maximal_cliques
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import BASES, C7, C7_PLUS_2F, C7_PLUS_2T, C7_PLUS_V, E_MINUS_8

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

C7_CYCLE: tuple[str, ...] = C7.labels
C7_2T_LAYERS: tuple[tuple[str, ...], tuple[str, ...]] = (
    ("1", "t2", "3", "4", "5", "6", "7"),
    ("1", "2", "3", "4", "5", "6", "t7"),
)
E_MINUS_8_LAYERS: tuple[tuple[str, ...], tuple[str, ...]] = (
    ("1", "2", "9", "10", "4", "11", "6"),
    ("1", "2", "3", "10", "5", "11", "7"),
)
C7_2F_PEEL: tuple[str, ...] = ("1", "f2", "f7")


# ------------------------------------------------------------------------------
def _require_base(spec: BlowupSpec, base: Graph, what: str) -> None:
    if spec.base != base:
        raise PreconditionError(what, failures=[f"base {spec.name!r} is not the {what} base"])


# ------------------------------------------------------------------------------
def all_maximal_cliques_maximum(spec: BlowupSpec, *, config: OracleConfig | None = None) -> bool:
    """True iff every maximal clique of the (fully supported) base has weight ω."""
    weights = [sum(spec.weights[v] for v in c) for c in maximal_cliques(spec.base, config=config)]
    return min(weights) == max(weights)


# ------------------------------------------------------------------------------
def _two_layers(
    spec: BlowupSpec,
    layers: tuple[Sequence[str], Sequence[str]],
    sizes: tuple[int, int],
    recurse: BagColorer,
    *,
    config: OracleConfig,
) -> BagColoring:
    """Color a blowup that is the union of two equal seven-cycle layers.

    The split costs ``c7_palette(a) + c7_palette(b)``, which overshoots the budget for
    some residues of ``a`` and ``b`` mod 3. Then a ``C7[K3]`` is peeled from the thicker
    layer, or, when both layers are thin, the blowup is colored exactly.
    """
    (cycle_a, cycle_b), (a, b) = layers, sizes
    budget = seven_sixths(spec.omega)
    if c7_palette(a) + c7_palette(b) <= budget:
        return c7_layer(spec.base, cycle_a, a).stacked(c7_layer(spec.base, cycle_b, b))
    if max(a, b) >= 4:
        cycle = cycle_a if a >= b else cycle_b
        logger.debug("peeling C7[K3] along %s (layers %d, %d)", "-".join(cycle), a, b)
        return peel_c7(spec, cycle, 3, recurse(spec.minus(cycle, 3)))
    return exact_bags(spec, config=config)


# ------------------------------------------------------------------------------
def _covered(spec: BlowupSpec, why: str, *, config: OracleConfig) -> BagColoring:
    """Discharge a blowup the layer construction does not reach by covering within budget."""
    logger.warning("%s blowup %s %s; covering", spec.name, spec.weight_map(), why)
    return bags_within(spec, seven_sixths(spec.omega), what=f"{spec.name} cover", config=config)


# ------------------------------------------------------------------------------
def c7_plus_v_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    """Peel ``C7[K_t]`` at the minimum cycle weight ``t``; the rest is perfect."""
    cfg = resolve_config(config)
    t = min(spec.weight(label) for label in C7_CYCLE)
    if t == 0:
        return exact_bags(spec, config=cfg)
    return peel_c7(spec, C7_CYCLE, t, exact_bags(spec.minus(C7_CYCLE, t), config=cfg))


# ------------------------------------------------------------------------------
def c7_plus_2t_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    cfg = resolve_config(config)
    if 0 in spec.weights:
        return subemerald_bags(spec, config=cfg)

    def recurse(residual: BlowupSpec) -> BagColoring:
        return c7_plus_2t_bags(residual, config=cfg)

    if not all_maximal_cliques_maximum(spec, config=cfg):
        found = strong_stable_step(spec, recurse, config=cfg)
        if found is None:
            return _covered(spec, "has no strong stable set", config=cfg)
        return found
    w = spec.weight_map()
    x2, x3 = w["7"], w["2"]
    expected = {"t2": x2, "t7": x3} | {label: x2 + x3 for label in ("1", "3", "4", "5", "6")}
    mismatched = {label: w[label] for label, want in expected.items() if w[label] != want}
    if mismatched:
        return _covered(spec, f"breaks the layer pattern at {mismatched}", config=cfg)
    return _two_layers(spec, C7_2T_LAYERS, (x2, x3), recurse, config=cfg)


# ------------------------------------------------------------------------------
def c7_plus_2f_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    """Peel ``t = min(|L1|, |Lf2|, |Lf7|)`` copies of the stable set ``{1, f2, f7}``.

    That set meets every maximal clique, so the clique number drops by ``t`` while
    ``t`` colors are spent; the residual has an empty bag and goes to the dispatcher.
    """
    cfg = resolve_config(config)
    t = min(spec.weight(label) for label in C7_2F_PEEL)
    if t == 0:
        return subemerald_bags(spec, config=cfg)
    layer = BagColoring.from_labels(spec.base, {label: range(t) for label in C7_2F_PEEL})
    return layer.stacked(subemerald_bags(spec.minus(C7_2F_PEEL, t), config=cfg))


# ------------------------------------------------------------------------------
def e_minus_8_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    cfg = resolve_config(config)
    if 0 in spec.weights:
        return subemerald_bags(spec, config=cfg)

    def recurse(residual: BlowupSpec) -> BagColoring:
        return e_minus_8_bags(residual, config=cfg)

    if not all_maximal_cliques_maximum(spec, config=cfg):
        found = strong_stable_step(spec, recurse, config=cfg)
        if found is None:
            return _covered(spec, "has no strong stable set", config=cfg)
        return found
    w = spec.weight_map()
    x2, x3 = w["4"], w["3"]
    expected = (
        {label: x2 + x3 for label in ("1", "2", "10", "11")}
        | {label: x2 for label in ("6", "9")}
        | {label: x3 for label in ("5", "7")}
    )
    mismatched = {label: w[label] for label, want in expected.items() if w[label] != want}
    if mismatched:
        return _covered(spec, f"breaks the layer pattern at {mismatched}", config=cfg)
    return _two_layers(spec, E_MINUS_8_LAYERS, (x2, x3), recurse, config=cfg)


# ------------------------------------------------------------------------------
class _BaseColorer(Protocol):
    def __call__(
        self, spec: BlowupSpec, *, config: OracleConfig | None = None
    ) -> BagColoring: ...


# twin-free support size -> (pattern, catalog base to color, colorer); the catalog base
# lists the pattern's vertices first and in the same order
_CATALOG: dict[int, tuple[tuple[Graph, str, _BaseColorer], ...]] = {
    7: ((C7, "c7v", c7_plus_v_bags),),
    8: ((C7_PLUS_V, "c7v", c7_plus_v_bags),),
    9: ((C7_PLUS_2T, "c7_2t", c7_plus_2t_bags), (C7_PLUS_2F, "c7_2f", c7_plus_2f_bags)),
    10: ((E_MINUS_8, "e_minus_8", e_minus_8_bags),),
}


# ------------------------------------------------------------------------------
def subemerald_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    """Color a blowup of a proper induced subgraph of the emerald (any base, any zeros).

    Args:
        spec: Blowup whose support, after merging true twins, is perfect or one of
            ``C7``, ``C7+v``, ``C7+2t``, ``C7+2f``, ``E-8``.
        config: Oracle limits.

    Returns:
        A bag coloring of ``spec``.

    Raises:
        PreconditionError: If the twin-free support has more than 10 vertices.
    """
    cfg = resolve_config(config)
    support = spec.support()
    if not support:
        return BagColoring.empty(spec.base.n)
    quotient = quotient_by_true_twins(spec.base.induced(support))
    merged = tuple(sum(spec.weights[support[m]] for m in members) for members in quotient.classes)
    q = quotient.base
    if q.n <= PERFECTNESS_LIMIT and is_perfect_small(q):
        return exact_bags(spec, config=cfg)
    if q.n > 10:
        raise PreconditionError(
            "subemerald dispatch",
            failures=[f"twin-free support has {q.n} vertices, more than E-8"],
        )
    for pattern, name, colorer in _CATALOG.get(q.n, ()):
        mapping = is_isomorphic_small(q, pattern, config=cfg)
        if mapping is None:
            continue
        weights = [0] * BASES[name].n
        for c, w in enumerate(merged):
            weights[mapping[c]] = w
        target_spec = BlowupSpec.of(name, weights)
        logger.debug("support of %s recognized as %s blowup %s", spec.name, name, weights)
        colored = colorer(target_spec, config=cfg)
        bags: list[tuple[int, ...]] = [() for _ in range(spec.base.n)]
        for c, members in enumerate(quotient.classes):
            colors = colored.bags[mapping[c]]
            start = 0
            for m in members:
                w = spec.weights[support[m]]
                bags[support[m]] = colors[start : start + w]
                start += w
        return BagColoring(bags=tuple(bags))
    logger.warning(
        "twin-free support of %s (%d vertices) is not in the catalog; coloring exactly",
        spec.name,
        q.n,
    )
    return exact_bags(spec, config=cfg)


# ------------------------------------------------------------------------------
def _seven_sixths(spec: BlowupSpec, bags: BagColoring, what: str) -> Coloring:
    budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, spec.omega)
    return finish(spec, bags, budget, what=what)


# ------------------------------------------------------------------------------
def color_c7_plus_v(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color a ``C7 + v`` blowup with at most ``ceil(7ω/6)`` colors.

    Raises:
        PreconditionError: If the base is not ``C7 + v``.
    """
    _require_base(spec, C7_PLUS_V, "C7+v")
    return _seven_sixths(spec, c7_plus_v_bags(spec, config=config), "C7+v blowup")


# ------------------------------------------------------------------------------
def color_c7_plus_2t(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color a ``C7 + 2t`` blowup with at most ``ceil(7ω/6)`` colors.

    Raises:
        PreconditionError: If the base is not ``C7 + 2t``.
    """
    _require_base(spec, C7_PLUS_2T, "C7+2t")
    return _seven_sixths(spec, c7_plus_2t_bags(spec, config=config), "C7+2t blowup")


# ------------------------------------------------------------------------------
def color_c7_plus_2f(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color a ``C7 + 2f`` blowup with at most ``ceil(7ω/6)`` colors.

    Raises:
        PreconditionError: If the base is not ``C7 + 2f``.
    """
    _require_base(spec, C7_PLUS_2F, "C7+2f")
    return _seven_sixths(spec, c7_plus_2f_bags(spec, config=config), "C7+2f blowup")


# ------------------------------------------------------------------------------
def color_e_minus_8(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color an ``E - 8`` blowup (empty bags allowed) with at most ``ceil(7ω/6)`` colors.

    Raises:
        PreconditionError: If the base is not ``E - 8``.
    """
    _require_base(spec, E_MINUS_8, "E-8")
    return _seven_sixths(spec, e_minus_8_bags(spec, config=config), "E-8 blowup")


# ------------------------------------------------------------------------------
def color_subemerald_blowup(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color any blowup whose twin-free support is a proper induced subgraph of the emerald."""
    return _seven_sixths(spec, subemerald_bags(spec, config=config), f"{spec.name} blowup")
