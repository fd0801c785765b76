"""Nested cross patterns between the two sides of a bracelet uncertain pair.

In a C4-free bracelet the cross neighborhoods of one side form a chain, so a pattern
is a staircase: left vertex ``i`` sees the first ``k_i`` right vertices with
``b = k_0 >= k_1 >= ... >= k_{a-1} >= 1``. The union of both cliques then has clique
number ``max(a, b, max_i(i + 1 + k_i))``.
"""

from __future__ import annotations

from collections.abc import Sequence

from chromalab.exp.random import make_rng
from chromalab.graphs.core import Edge


# ------------------------------------------------------------------------------
def staircase_omega(a: int, b: int, prefixes: Sequence[int]) -> int:
    """Clique number of two cliques of sizes ``a``, ``b`` joined by a staircase."""
    return max(a, b, *(i + 1 + k for i, k in enumerate(prefixes)))


# ------------------------------------------------------------------------------
def gen_cross_pattern(
    a_side: int, b_side: int, target_cross_omega: int | None = None, *, seed: int = 0
) -> frozenset[Edge]:
    """Draw a staircase relation with every vertex on both sides covered.

    Args:
        a_side: Number of left vertices, indexed ``0..a_side-1``.
        b_side: Number of right vertices, indexed ``0..b_side-1``.
        target_cross_omega: Upper bound on the clique number of the union of both
            cliques; ``None`` for no bound.
        seed: PCG64 seed.

    Returns:
        Pairs ``(i, j)``: left ``i`` is adjacent to right ``j``.

    Raises:
        ValueError: If a side is empty or the target is below ``max(a, b) + 1``.
    """
    if a_side < 1 or b_side < 1:
        raise ValueError(f"both sides need a vertex, got {a_side} and {b_side}")
    cap = a_side + b_side if target_cross_omega is None else target_cross_omega
    floor = max(a_side, b_side) + 1
    if cap < floor:
        raise ValueError(
            f"cross omega {cap} is infeasible for sides {a_side}, {b_side}: "
            f"covering both sides forces at least {floor}"
        )
    rng = make_rng(seed)
    prefixes = [b_side]
    for i in range(1, a_side):
        upper = min(prefixes[-1], cap - (i + 1))
        prefixes.append(int(rng.integers(1, upper + 1)))
    assert staircase_omega(a_side, b_side, prefixes) <= cap
    return frozenset((i, j) for i, k in enumerate(prefixes) for j in range(k))
