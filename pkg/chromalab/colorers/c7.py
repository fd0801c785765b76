"""Equal blowups of the seven-cycle and the layer built from them.

Bag ``i`` of ``C7[K_t]`` takes the ``t`` consecutive colors starting at ``i * t``,
read modulo ``M = ceil(7t/3)``. Bags two apart may share colors, adjacent bags never
do. For ``t = 1`` the modulus 3 would give bags 7 and 1 the same color, so that case
uses the 2-2-2-3 alternation instead.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import cache

from chromalab.colorers.budget import BoundKind, ColorBudget
from chromalab.colorers.layers import BagColoring, finish
from chromalab.graphs.coloring import Coloring
from chromalab.graphs.core import Graph
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import C7


# ------------------------------------------------------------------------------
def c7_palette(t: int) -> int:
    """``ceil(7t/3)``, the chromatic number of ``C7[K_t]``."""
    return (7 * t + 2) // 3


# ------------------------------------------------------------------------------
@cache
def c7_layout(t: int) -> tuple[tuple[int, ...], ...]:
    """Colors of the seven bags of ``C7[K_t]``, 0-based, using ``c7_palette(t)`` colors.

    Raises:
        ValueError: If ``t < 0``.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if t == 1:
        return ((0,), (1,), (0,), (1,), (0,), (1,), (2,))
    m = c7_palette(t)
    return tuple(tuple((i * t + j) % m for j in range(t)) for i in range(7))


# ------------------------------------------------------------------------------
def c7_layer(base: Graph, cycle: Sequence[str], t: int) -> BagColoring:
    """``C7[K_t]`` laid along an induced 7-cycle of ``base``; other bags stay empty.

    Args:
        base: Graph containing the cycle.
        cycle: The seven labels in cycle order.
        t: Bag size of the layer.

    Raises:
        ValueError: If ``cycle`` does not list seven labels.
    """
    if len(cycle) != 7:
        raise ValueError(f"a seven-cycle needs 7 labels, got {len(cycle)}")
    layout = c7_layout(t)
    return BagColoring.from_labels(base, dict(zip(cycle, layout, strict=True)))


# ------------------------------------------------------------------------------
def peel_c7(
    spec: BlowupSpec, cycle: Sequence[str], t: int, rest: BagColoring
) -> BagColoring:
    """Stack a ``C7[K_t]`` layer on ``cycle`` with a coloring of ``spec.minus(cycle, t)``."""
    return c7_layer(spec.base, cycle, t).stacked(rest)


# ------------------------------------------------------------------------------
def color_c7_equal(t: int) -> Coloring:
    """Color ``C7[K_t]`` with exactly ``ceil(7t/3)`` colors.

    Realized vertices are numbered bag by bag, as in ``BlowupSpec.uniform("c7", t)``.

    Raises:
        ValueError: If ``t < 1``.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    spec = BlowupSpec.uniform("c7", t)
    bags = c7_layer(C7, C7.labels, t)
    budget = ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, 2 * t)
    return finish(spec, bags, budget, what=f"C7[K{t}]")
