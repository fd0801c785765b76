"""Emerald blowups within ``ceil(11ω/9)`` colors.

Routing for a blowup ``G`` of the emerald ``E`` with minimum bag size ``p``:

* an empty bag makes ``G`` a blowup of a proper induced subgraph of ``E``, colored by
  :func:`~chromalab.colorers.subemerald.subemerald_bags` within ``ceil(7ω/6)``;
* ``p >= 3``: peel ``E[K3]`` with the 11 stable triples of :func:`ek3_stable_system`
  (clique number drops by 9) and recurse;
* ``p <= 2``: the bespoke small clique numbers 3, 4, 7, 8, 9 and 13 are handled
  directly, every other clique number by the ``ceil(7ω/6) + 1`` procedure, which is
  within ``ceil(11ω/9)`` there.

The ``ceil(7ω/6) + 1`` procedure removes strong stable sets while it can, then moves a
minimum bag onto vertex 8 and looks at the end triangles ``{1, 7, 8}`` and
``{2, 8, 9}``. Both not maximum makes ``G`` a special emerald; exactly one not maximum
leads, after reflection and deleting ``L6 ∪ L8``, to a ``Gx`` blowup.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping

from chromalab.colorers.budget import BoundKind, ColorBudget, eleven_ninths, seven_sixths
from chromalab.colorers.c7 import peel_c7
from chromalab.colorers.gx import EMERALD_TO_GX, g9_bags, gx_bags
from chromalab.colorers.layers import (
    BagColoring,
    bags_within,
    exact_bags,
    finish,
    strong_stable_step,
)
from chromalab.colorers.subemerald import subemerald_bags
from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import ColoringDefectError, PreconditionError
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import (
    EMERALD,
    REFLECTION_FIXING_8,
    automorphisms_sending,
    ek3_stable_system,
    g9_violations,
    gx_violations,
    special_emerald_parameters,
    special_emerald_violations,
)

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type Sigma = Mapping[str, str]
type Attempt = Callable[[BlowupSpec], BagColoring | None]

END_A = ("1", "7", "8")
END_B = ("2", "8", "9")
NEIGHBORS_OF_8 = ("1", "2", "7", "9")
SMALL_OMEGAS = frozenset({3, 4, 7, 8, 9, 13})

# special-emerald peels: (which parameter test, cycle); each peel lowers x by 3
_SPECIAL_PEELS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("r", ("1", "2", "9", "10", "4", "11", "7")),
    ("s", ("2", "1", "7", "11", "5", "10", "9")),
    ("y+s", ("1", "2", "3", "10", "5", "11", "7")),
    ("z+r", ("2", "1", "6", "11", "4", "10", "9")),
)


# ------------------------------------------------------------------------------
def _require_emerald(spec: BlowupSpec, what: str, failures: Iterable[str] = ()) -> None:
    found = list(failures)
    if spec.base != EMERALD:
        found.insert(0, f"base {spec.name!r} is not the emerald")
    if found:
        raise PreconditionError(what, failures=found)


# ------------------------------------------------------------------------------
def _is_maximum(spec: BlowupSpec, triangle: Iterable[str], omega: int) -> bool:
    return sum(spec.weight(label) for label in triangle) == omega


# ------------------------------------------------------------------------------
def _compose(sigma: Sigma, then: Sigma) -> dict[str, str]:
    return {label: then[sigma[label]] for label in sigma}


# ------------------------------------------------------------------------------
def _via(spec: BlowupSpec, sigma: Sigma, attempt: Attempt) -> BagColoring | None:
    """Run ``attempt`` on ``spec.permuted(sigma)`` and pull the result back."""
    colored = attempt(spec.permuted(sigma))
    return None if colored is None else colored.pullback(spec.base, sigma)


# ------------------------------------------------------------------------------
def _oriented_at_8(label: str) -> list[dict[str, str]]:
    """Automorphisms moving ``label`` to 8, followed by their reflections."""
    sigma = automorphisms_sending(label, "8")[0]
    return [dict(sigma), _compose(sigma, REFLECTION_FIXING_8)]


# ------------------------------------------------------------------------------
def _minimum_labels(spec: BlowupSpec) -> list[str]:
    p = min(spec.weights)
    return [label for label, w in spec.weight_map().items() if w == p]


# ------------------------------------------------------------------------------
def _with_bags(
    coloring: BagColoring, spec: BlowupSpec, extra: Mapping[str, Iterable[int]]
) -> BagColoring:
    """Append ``extra[label]`` colors to the named bags."""
    bags = list(coloring.bags)
    for label, colors in extra.items():
        u = spec.base.index_of(label)
        bags[u] = bags[u] + tuple(colors)
    return BagColoring(bags=tuple(bags))


# ------------------------------------------------------------------------------
def _extend_bag_8(
    coloring: BagColoring, spec: BlowupSpec, palette: int
) -> BagColoring | None:
    """Give bag 8 the smallest colors below ``palette`` unused on its neighbor bags.

    ``coloring`` leaves bag 8 empty. Returns None when too few colors are free.
    """
    taken = {c for label in NEIGHBORS_OF_8 for c in coloring.colors_of(spec.base, label)}
    free = [c for c in range(palette) if c not in taken]
    need = spec.weight("8")
    if len(free) < need:
        return None
    return _with_bags(coloring, spec, {"8": free[:need]})


# ------------------------------------------------------------------------------
def _without_8(spec: BlowupSpec) -> BlowupSpec:
    return spec.minus(["8"], spec.weight("8"))


# ------------------------------------------------------------------------------
def _fresh(coloring: BagColoring, count: int) -> range:
    start = max(coloring.palette, default=-1) + 1
    return range(start, start + count)


# ------------------------------------------------------------------------------
def _to_gx(spec: BlowupSpec, name: str) -> BlowupSpec:
    weights = {target: spec.weight(label) for label, target in EMERALD_TO_GX.items()}
    return BlowupSpec.of(name, weights)


# ------------------------------------------------------------------------------
def _through_gx(spec: BlowupSpec, gx_spec: BlowupSpec, colored: BagColoring) -> BagColoring:
    """Emerald coloring from a coloring of ``G - (L6 ∪ L8)``; 6 and 8 share fresh colors."""
    carried = BagColoring.from_labels(
        spec.base,
        {label: colored.colors_of(gx_spec.base, target) for label, target in EMERALD_TO_GX.items()},
    )
    w6, w8 = spec.weight("6"), spec.weight("8")
    fresh = _fresh(carried, max(w6, w8))
    return _with_bags(carried, spec, {"6": fresh[:w6], "8": fresh[:w8]})


# ------------------------------------------------------------------------------
def _special_odd(spec: BlowupSpec, x: int, *, config: OracleConfig) -> BagColoring:
    """Special emerald with odd ``x``: color ``N[v]`` for one ``v`` in ``L8`` explicitly.

    ``H`` holds ``t = (x+1)/2`` vertices of each of ``L1``, ``L2``, one vertex of ``L8``
    and all of ``L3..L7, L9``; it gets ``x + 2 + t`` colors. The rest of ``G`` is a
    disjoint union of cliques needing ``x`` further colors.
    """
    _, y, z, r, s, _ = special_emerald_parameters(spec.weight_map())
    t = (x + 1) // 2
    top = x + 2 + t
    w7, w9 = z + r, y + s
    if w9 <= t and w7 <= t:
        l1, l2 = range(0, t), range(t, 2 * t)
        v = 2 * t
        l7, l9 = l2[:w7], l1[:w9]
    elif w9 <= t:
        l1, l7 = range(0, t), range(t, t + w7)
        v = t + w7
        l2, l9 = l7[:t], l1[:w9]
    elif w7 <= t:
        l2, l9 = range(0, t), range(t, t + w9)
        v = t + w9
        l1, l7 = l9[:t], l2[:w7]
    else:
        l7, l9 = range(0, w7), range(w7, w7 + w9)
        v = w7 + w9
        l1, l2 = l9[:t], l7[:t]
    if v >= top:
        raise ColoringDefectError(f"special emerald x={x}: N[v] needs color {v} of {top}")
    l6 = [c for c in range(top) if c not in l1 and c not in l7]
    l3 = [c for c in range(top) if c not in l2 and c not in l9]
    h = BagColoring.from_labels(
        spec.base,
        {
            "1": l1,
            "2": l2,
            "3": l3[: spec.weight("3")],
            "4": l9[:y],
            "5": l7[:z],
            "6": l6[: spec.weight("6")],
            "7": l7,
            "8": (v,),
            "9": l9,
        },
    )
    rest = BlowupSpec.of(
        "emerald", {"1": x - t, "2": x - t, "8": spec.weight("8") - 1, "10": x, "11": x}
    )
    return h.stacked(exact_bags(rest, config=config))


# ------------------------------------------------------------------------------
def _special_even(spec: BlowupSpec, x: int, *, config: OracleConfig) -> BagColoring:
    """Special emerald with even ``x``: ``H`` takes ``t`` vertices of ``L1`` and ``L2``.

    For ``x <= 6`` ``t = x/2 + 1`` and ``H`` leaves out ``L8``, so ``H`` is colored
    exactly; for larger ``x`` ``t = x/2`` and ``H`` keeps ``L8``, colored within
    ``x + 2 + t``. The rest needs ``x`` colors.
    """
    w = spec.weight_map()
    keep_8 = x > 6
    t = x // 2 if keep_8 else x // 2 + 1
    h_weights = {label: w[label] for label in ("3", "4", "5", "6", "7", "9")} | {"1": t, "2": t}
    if keep_8:
        h_weights["8"] = w["8"]
    h_spec = BlowupSpec.of("emerald", h_weights)
    if keep_8:
        h = bags_within(h_spec, x + 2 + t, what=f"special emerald x={x}", config=config)
    else:
        h = exact_bags(h_spec, config=config)
    rest = BlowupSpec.of(
        "emerald", {"1": x - t, "2": x - t, "8": 0 if keep_8 else w["8"], "10": x, "11": x}
    )
    return h.stacked(exact_bags(rest, config=config))


# ------------------------------------------------------------------------------
def _special_emerald_bags(spec: BlowupSpec, *, config: OracleConfig) -> BagColoring:
    """Color a special emerald within ``ceil(7ω/6) + 1``.

    Raises:
        ColoringDefectError: If ``spec`` does not follow the special pattern.
    """
    failures = special_emerald_violations(spec.weight_map())
    if failures:
        raise ColoringDefectError("not a special emerald: " + "; ".join(failures))
    x, y, z, r, s, _ = special_emerald_parameters(spec.weight_map())
    tests = {"r": r >= 3, "s": s >= 3, "y+s": y + s < x - 2, "z+r": z + r < x - 2}
    for key, cycle in _SPECIAL_PEELS:
        if tests[key]:
            logger.debug("special emerald x=%d: peeling C7[K3] along %s", x, "-".join(cycle))
            residual = spec.minus(cycle, 3)
            return peel_c7(spec, cycle, 3, _plus_one_bags(residual, config=config))
    if x % 2 == 1:
        return _special_odd(spec, x, config=config)
    return _special_even(spec, x, config=config)


# ------------------------------------------------------------------------------
def _one_end_route(spec: BlowupSpec, *, name: str, config: OracleConfig) -> BagColoring | None:
    """``{2, 8, 9}`` not maximum, ``{3, 9, 10}`` maximum: color ``G - (L6 ∪ L8)`` as Gx/G9.

    Returns None when the weights miss the ``Gx`` (``name="gx"``) or ``G9`` constraints.
    """
    x = spec.weight("1")
    gx_spec = _to_gx(spec, name)
    if name == "gx":
        if gx_violations(gx_spec.weight_map(), x):
            return None
        colored = gx_bags(gx_spec, x, config=config)
    else:
        if g9_violations(gx_spec.weight_map(), x):
            return None
        colored = g9_bags(gx_spec, x, config=config)
    return _through_gx(spec, gx_spec, colored)


# ------------------------------------------------------------------------------
def _plus_one_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    cfg = resolve_config(config)
    if 0 in spec.weights:
        return subemerald_bags(spec, config=cfg)
    p = min(spec.weights)
    if p >= 3:
        raise PreconditionError("7/6+1 procedure", failures=[f"p = {p} is above 2"])
    if p == 1:
        sigma = automorphisms_sending(_minimum_labels(spec)[0], "8")[0]
        perm = spec.permuted(sigma)
        rest = subemerald_bags(_without_8(perm), config=cfg)
        return rest.with_new_color([perm.base.index_of("8")]).pullback(spec.base, sigma)
    if all(w == 2 for w in spec.weights):
        return exact_bags(spec, config=cfg)

    def recurse(residual: BlowupSpec) -> BagColoring:
        return _plus_one_bags(residual, config=cfg)

    found = strong_stable_step(spec, recurse, config=cfg)
    if found is not None:
        return found
    omega = spec.omega
    budget = seven_sixths(omega) + 1
    for label in _minimum_labels(spec):
        sigma = automorphisms_sending(label, "8")[0]
        perm = spec.permuted(sigma)
        a_max, b_max = _is_maximum(perm, END_A, omega), _is_maximum(perm, END_B, omega)
        if not a_max and not b_max:
            logger.debug("minimum bag %s: special emerald", label)
            return _special_emerald_bags(perm, config=cfg).pullback(spec.base, sigma)
        if a_max and b_max:
            continue
        if not a_max:
            sigma = _compose(sigma, REFLECTION_FIXING_8)
            perm = spec.permuted(sigma)
        if _is_maximum(perm, ("3", "9", "10"), omega):
            routed = _one_end_route(perm, name="gx", config=cfg)
            if routed is not None and routed.k <= budget:
                logger.debug("minimum bag %s: Gx route", label)
                return routed.pullback(spec.base, sigma)
    logger.warning("no case applies to emerald blowup %s; covering", spec.weight_map())
    return bags_within(spec, budget, what="7/6+1 fallback", config=cfg)


# ------------------------------------------------------------------------------
def _omega_four(spec: BlowupSpec, *, config: OracleConfig) -> BagColoring:
    """Bags of size 2 form a stable set; one color for them, 4 for the emerald left."""
    doubled = [u for u, w in enumerate(spec.weights) if w == 2]
    rest = spec.minus([spec.base.labels[u] for u in doubled])
    return exact_bags(rest, config=config).with_new_color(doubled)


# ------------------------------------------------------------------------------
def _large_vertex_at_8(
    spec: BlowupSpec, omega: int, *, config: OracleConfig
) -> BagColoring | None:
    """Color when ``|L8|`` is ``ω - 4``, ``ω - 3`` or ``ω - 2`` (clique number 7 or 8).

    Returns None when none of the three removals fits.
    """
    w = spec.weight_map()
    if w["1"] == 1:
        # {u1, u9} and {u2, u7} are stable; L8 goes last within ω
        removed = spec.minus(NEIGHBORS_OF_8)
        rest = exact_bags(_without_8(removed), config=config).compacted()
        extended = _extend_bag_8(rest, removed, omega)
        if extended is None:
            return None
        a, b = _fresh(extended, 2)
        return _with_bags(extended, spec, {"1": (a,), "9": (a,), "2": (b,), "7": (b,)})
    if w["7"] == 1 and w["9"] == 1:
        rest = subemerald_bags(_without_8(spec), config=config).compacted()
        return _extend_bag_8(rest, spec, omega + 2)
    if w["2"] == 2 and w["7"] >= 2:
        # all of L2 and two vertices of L7 as two stable pairs
        removed = spec.minus(["2", "7"], 2)
        rest = exact_bags(_without_8(removed), config=config).compacted()
        extended = _extend_bag_8(rest, removed, omega)
        if extended is None:
            return None
        pair = tuple(_fresh(extended, 2))
        return _with_bags(extended, spec, {"2": pair, "7": pair})
    return None


# ------------------------------------------------------------------------------
def _omega_seven_eight(spec: BlowupSpec, *, config: OracleConfig) -> BagColoring:
    omega = spec.omega
    budget = omega + 2

    def at_8(perm: BlowupSpec) -> BagColoring | None:
        return _large_vertex_at_8(perm, omega, config=config)

    for label, weight in spec.weight_map().items():
        if omega - 4 <= weight <= omega - 2:
            for sigma in _oriented_at_8(label):
                colored = _via(spec, sigma, at_8)
                if colored is not None and colored.k <= budget:
                    logger.debug("large bag %s moved to 8", label)
                    return colored
    if omega == 8:
        for label, weight in spec.weight_map().items():
            if weight != 3:
                continue
            sigma = automorphisms_sending(label, "8")[0]
            perm = spec.permuted(sigma)
            if sum(perm.weight(u) for u in (*NEIGHBORS_OF_8, "8")) > budget:
                continue
            rest = subemerald_bags(_without_8(perm), config=config).compacted()
            extended = _extend_bag_8(rest, perm, budget)
            if extended is not None and extended.k <= budget:
                logger.debug("bag %s of size 3 moved to 8", label)
                return extended.pullback(spec.base, sigma)
    return bags_within(spec, budget, what=f"emerald blowup with omega {omega}", config=config)


# ------------------------------------------------------------------------------
def _omega_nine_thirteen(spec: BlowupSpec, *, config: OracleConfig) -> BagColoring:
    omega = spec.omega
    budget = eleven_ninths(omega)
    for label in _minimum_labels(spec):
        sigma = automorphisms_sending(label, "8")[0]
        perm = spec.permuted(sigma)
        a_max, b_max = _is_maximum(perm, END_A, omega), _is_maximum(perm, END_B, omega)
        if a_max and b_max:
            continue
        if not a_max and not b_max:
            colored = bags_within(perm, budget, what="special emerald", config=config)
            return colored.pullback(spec.base, sigma)
        if not a_max:
            sigma = _compose(sigma, REFLECTION_FIXING_8)
            perm = spec.permuted(sigma)
        if _is_maximum(perm, ("3", "9", "10"), omega):
            routed = _one_end_route(perm, name="g9", config=config)
            if routed is not None and routed.k <= budget:
                logger.debug("minimum bag %s: G9 route", label)
                return routed.pullback(spec.base, sigma)
    return bags_within(spec, budget, what=f"emerald blowup with omega {omega}", config=config)


# ------------------------------------------------------------------------------
def _eleven_ninths_bags(spec: BlowupSpec, *, config: OracleConfig) -> BagColoring:
    """All bags nonempty, ``p <= 2``."""
    omega = spec.omega
    if omega not in SMALL_OMEGAS:
        return _plus_one_bags(spec, config=config)
    if omega == 3:
        return exact_bags(spec, config=config)
    if omega == 4:
        return _omega_four(spec, config=config)

    def recurse(residual: BlowupSpec) -> BagColoring:
        return emerald_blowup_bags(residual, config=config)

    found = strong_stable_step(spec, recurse, config=config)
    if found is not None:
        return found
    if omega in (7, 8):
        return _omega_seven_eight(spec, config=config)
    return _omega_nine_thirteen(spec, config=config)


# ------------------------------------------------------------------------------
def _ek3_layer() -> BagColoring:
    system = ek3_stable_system()
    members = {
        label: [j for j, triple in enumerate(system) if label in triple]
        for label in EMERALD.labels
    }
    return BagColoring.from_labels(EMERALD, members)


# ------------------------------------------------------------------------------
def _p_check(
    spec: BlowupSpec, *, at_most: int | None = None, at_least: int | None = None
) -> list[str]:
    p = min(spec.weights)
    if at_most is not None and p > at_most:
        return [f"p = {p} > {at_most}"]
    if at_least is not None and p < at_least:
        return [f"p = {p} < {at_least}"]
    return []


# ------------------------------------------------------------------------------
def emerald_blowup_bags(spec: BlowupSpec, *, config: OracleConfig | None = None) -> BagColoring:
    """Bag coloring of any emerald blowup within ``ceil(11ω/9)``.

    Raises:
        PreconditionError: If the base is not the emerald.
    """
    cfg = resolve_config(config)
    _require_emerald(spec, "emerald blowup")
    if 0 in spec.weights:
        return subemerald_bags(spec, config=cfg)
    if min(spec.weights) >= 3:
        rest = emerald_blowup_bags(spec.minus(EMERALD.labels, 3), config=cfg)
        return _ek3_layer().stacked(rest)
    return _eleven_ninths_bags(spec, config=cfg)


# ------------------------------------------------------------------------------
def _eleven_ninths(spec: BlowupSpec, bags: BagColoring, what: str) -> Coloring:
    budget = ColorBudget.for_bound(BoundKind.ELEVEN_NINTHS, spec.omega)
    return finish(spec, bags, budget, what=what)


# ------------------------------------------------------------------------------
def color_emerald_blowup(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color an emerald blowup (empty bags allowed) with at most ``ceil(11ω/9)`` colors.

    Args:
        spec: Bag sizes over the emerald base.
        config: Oracle limits for the covering searches.

    Returns:
        A coloring of ``spec.realize().graph``.

    Raises:
        PreconditionError: If the base is not the emerald.
        ColoringDefectError: If a construction comes out improper or over budget.
    """
    return _eleven_ninths(spec, emerald_blowup_bags(spec, config=config), "emerald blowup")


# ------------------------------------------------------------------------------
def color_emerald_p_le_2(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Color an emerald blowup whose smallest bag has at most 2 vertices.

    Empty bags are routed to the sub-emerald dispatcher, whose bound is lower.

    Raises:
        PreconditionError: If the base is not the emerald or every bag has 3 or more.
    """
    what = "emerald blowup with p <= 2"
    _require_emerald(spec, what, _p_check(spec, at_most=2))
    cfg = resolve_config(config)
    if 0 in spec.weights:
        bags = subemerald_bags(spec, config=cfg)
    else:
        bags = _eleven_ninths_bags(spec, config=cfg)
    return _eleven_ninths(spec, bags, what)


# ------------------------------------------------------------------------------
def color_emerald_p_ge_3(spec: BlowupSpec, *, config: OracleConfig | None = None) -> Coloring:
    """Peel ``E[K3]`` layers until a bag drops below 3, then finish with the p <= 2 colorer.

    Raises:
        PreconditionError: If the base is not the emerald or some bag has fewer than 3.
    """
    what = "emerald blowup with p >= 3"
    _require_emerald(spec, what, _p_check(spec, at_least=3))
    return _eleven_ninths(spec, emerald_blowup_bags(spec, config=config), what)


# ------------------------------------------------------------------------------
def color_emerald_seven_sixths_plus_one(
    spec: BlowupSpec, *, config: OracleConfig | None = None
) -> Coloring:
    """Color an emerald blowup with ``p <= 2`` within ``ceil(7ω/6) + 1``.

    Raises:
        PreconditionError: If the base is not the emerald or ``p > 2``.
    """
    _require_emerald(spec, "7/6+1 procedure", _p_check(spec, at_most=2))
    budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS_PLUS_ONE, spec.omega)
    return finish(spec, _plus_one_bags(spec, config=config), budget, what="7/6+1 procedure")
