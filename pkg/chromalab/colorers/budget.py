"""Color budgets: the bound each colorer promises as a function of ω."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum


# ------------------------------------------------------------------------------
class BoundKind(StrEnum):
    ELEVEN_NINTHS = "11/9"
    SEVEN_SIXTHS = "7/6"
    SEVEN_SIXTHS_PLUS_ONE = "7/6+1"
    EXACT = "exact"


# ------------------------------------------------------------------------------
def eleven_ninths(omega: int) -> int:
    """``ceil(11 * omega / 9)`` in integer arithmetic."""
    return (11 * omega + 8) // 9


# ------------------------------------------------------------------------------
def seven_sixths(omega: int) -> int:
    """``ceil(7 * omega / 6)`` in integer arithmetic."""
    return (7 * omega + 5) // 6


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class ColorBudget:
    """The number of colors a colorer may use on a target with clique number ``omega``.

    Args:
        omega: Clique number of the target.
        bound_kind: Which bound applies.
        budget: The resulting color count.
    """

    omega: int
    bound_kind: BoundKind
    budget: int

    # --------------------------------------------------------------------------
    @classmethod
    def for_bound(cls, kind: BoundKind, omega: int, *, exact: int | None = None) -> ColorBudget:
        """Budget of ``kind`` at ``omega``; ``exact`` is required for :attr:`BoundKind.EXACT`.

        Raises:
            ValueError: If ``omega`` is negative or ``exact`` is missing.
        """
        if omega < 0:
            raise ValueError(f"omega must be >= 0, got {omega}")
        match kind:
            case BoundKind.ELEVEN_NINTHS:
                budget = eleven_ninths(omega)
            case BoundKind.SEVEN_SIXTHS:
                budget = seven_sixths(omega)
            case BoundKind.SEVEN_SIXTHS_PLUS_ONE:
                budget = seven_sixths(omega) + 1
            case BoundKind.EXACT:
                if exact is None:
                    raise ValueError("an exact budget needs the exact value")
                budget = exact
        return cls(omega=omega, bound_kind=kind, budget=budget)

    def allows(self, k: int) -> bool:
        return k <= self.budget
