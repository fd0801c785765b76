"""Blowups of the ``C7 + 2t`` base under the ``Gx`` and ``G9`` weight constraints.

Both come out of the emerald case analysis: after reflecting so one end triangle of
vertex 8 is not maximum, deleting ``L6 ∪ L8`` leaves a blowup of ``E - {6, 8}``, and
:data:`EMERALD_TO_GX` carries it onto the ``C7 + 2t`` labels.
"""

from __future__ import annotations

from chromalab.colorers.budget import BoundKind, ColorBudget, eleven_ninths, seven_sixths
from chromalab.colorers.c7 import peel_c7
from chromalab.colorers.layers import BagColoring, bags_within, finish
from chromalab.config import OracleConfig, resolve_config
from chromalab.errors import PreconditionError
from chromalab.exp.logging import get_logger
from chromalab.graphs.coloring import Coloring
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import GX, g9_violations, gx_violations

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

EMERALD_TO_GX: dict[str, str] = {
    "10": "1",
    "9": "2",
    "2": "3",
    "1": "4",
    "7": "5",
    "11": "6",
    "5": "7",
    "4": "t7",
    "3": "t2",
}
"""Isomorphism from the emerald minus vertices 6 and 8 onto the ``C7 + 2t`` base."""

# exact covering is used up to this x; above it C7[K3] layers are peeled
GX_EXACT_LIMIT = 6


# ------------------------------------------------------------------------------
def _require_gx_base(spec: BlowupSpec, what: str) -> None:
    if spec.base != GX:
        raise PreconditionError(what, failures=[f"base {spec.name!r} is not the C7+2t base"])


# ------------------------------------------------------------------------------
def gx_budget(x: int) -> int:
    """``ceil(7(2x+1)/6)``."""
    return seven_sixths(2 * x + 1)


# ------------------------------------------------------------------------------
def g9_budget(x: int) -> int:
    """``ceil(11(2x+1)/9) - 1``."""
    return eleven_ninths(2 * x + 1) - 1


# ------------------------------------------------------------------------------
def gx_bags(spec: BlowupSpec, x: int, *, config: OracleConfig | None = None) -> BagColoring:
    """Bag coloring of a ``Gx`` blowup within :func:`gx_budget`.

    For ``x <= 6`` the blowup is colored by covering. Otherwise a ``C7[K3]`` is peeled
    along a seven-cycle chosen by which of ``L7, Lt2`` or ``Lt7, L2`` are thick, which
    leaves a ``G(x-3)`` blowup and costs 7 colors.

    Raises:
        PreconditionError: If the weights break the ``Gx`` constraints.
    """
    cfg = resolve_config(config)
    failures = gx_violations(spec.weight_map(), x)
    if failures:
        raise PreconditionError(f"Gx blowup with x={x}", failures=failures)
    if x <= GX_EXACT_LIMIT:
        return bags_within(spec, gx_budget(x), what=f"G{x} base case", config=cfg)
    w = spec.weight_map()
    if w["7"] >= 4 and w["t2"] >= 4:
        cycle: tuple[str, ...] = ("1", "t2", "3", "4", "5", "6", "7")
    elif w["t7"] >= 4 and w["2"] >= 4:
        cycle = ("1", "2", "3", "4", "5", "6", "t7")
    else:
        cycle = ("1", "2", "3", "4", "5", "6", "7")
    logger.debug("G%d: peeling C7[K3] along %s", x, "-".join(cycle))
    return peel_c7(spec, cycle, 3, gx_bags(spec.minus(cycle, 3), x - 3, config=cfg))


# ------------------------------------------------------------------------------
def g9_bags(spec: BlowupSpec, x: int, *, config: OracleConfig | None = None) -> BagColoring:
    """Bag coloring of a ``G9`` blowup within :func:`g9_budget`, found by covering.

    Raises:
        PreconditionError: If the weights break the ``G9`` constraints.
    """
    failures = g9_violations(spec.weight_map(), x)
    if failures:
        raise PreconditionError(f"G9 blowup with x={x}", failures=failures)
    return bags_within(spec, g9_budget(x), what=f"G9 blowup with x={x}", config=config)


# ------------------------------------------------------------------------------
def color_gx(spec: BlowupSpec, x: int, *, config: OracleConfig | None = None) -> Coloring:
    """Color a ``Gx`` blowup with at most ``ceil(7(2x+1)/6)`` colors.

    Args:
        spec: Blowup of the ``C7 + 2t`` base with ``|L1| = |L3| = ... = |L6| = x``,
            ``|L7| + |Lt7| = |L2| + |Lt2| = x + 2`` and ``|Lt7| + |Lt2| <= x + 2``.
        x: The parameter, at least 1.
        config: Oracle limits.

    Returns:
        A coloring of ``spec.realize().graph``.

    Raises:
        PreconditionError: If the base or the weights do not fit.
    """
    _require_gx_base(spec, "Gx blowup")
    budget = ColorBudget(omega=spec.omega, bound_kind=BoundKind.SEVEN_SIXTHS, budget=gx_budget(x))
    return finish(spec, gx_bags(spec, x, config=config), budget, what=f"G{x} blowup")


# ------------------------------------------------------------------------------
def color_g9(spec: BlowupSpec, x: int, *, config: OracleConfig | None = None) -> Coloring:
    """Color a ``G9`` blowup (``Gx`` with ``x + 1`` in place of ``x + 2``).

    Raises:
        PreconditionError: If the base or the weights do not fit.
    """
    _require_gx_base(spec, "G9 blowup")
    budget = ColorBudget(omega=spec.omega, bound_kind=BoundKind.ELEVEN_NINTHS, budget=g9_budget(x))
    return finish(spec, g9_bags(spec, x, config=config), budget, what=f"G9 blowup with x={x}")
