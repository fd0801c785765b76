"""Exception hierarchy shared by all chromalab subpackages.

Every error raised on purpose derives from :class:`ChromaError`, so callers (notably
the CLI) can map whole families of failures onto exit codes without catching bare
exceptions. Errors that describe bad input additionally derive from ``ValueError``.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from chromalab.graphs.freeness import FreenessReport


# ------------------------------------------------------------------------------
class ChromaError(Exception):
    """Base class for all chromalab errors."""


# ------------------------------------------------------------------------------
class BudgetExceededError(ChromaError):
    """A branch-and-bound search exhausted its node budget."""

    def __init__(self, what: str, *, budget: int) -> None:
        super().__init__(f"{what}: node budget {budget} exhausted")
        self.budget = budget


# ------------------------------------------------------------------------------
class SizeGuardError(ChromaError, ValueError):
    """An input is larger than an oracle is allowed to handle."""

    def __init__(self, what: str, *, size: int, limit: int) -> None:
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


# ------------------------------------------------------------------------------
class InvalidSpecError(ChromaError, ValueError):
    """A structure spec failed validation."""

    def __init__(self, message: str, *, violations: Sequence[object] = ()) -> None:
        super().__init__(message)
        self.violations = tuple(violations)


# ------------------------------------------------------------------------------
class PreconditionError(ChromaError, ValueError):
    """A colorer was called outside its stated preconditions.

    All failed conditions are collected, not just the first one.
    """

    def __init__(self, what: str, *, failures: Sequence[str]) -> None:
        super().__init__(f"{what}: " + "; ".join(failures))
        self.failures = tuple(failures)


# ------------------------------------------------------------------------------
class NotInClassError(ChromaError):
    """The input graph contains an induced P7, C4 or C5."""

    def __init__(self, report: FreenessReport) -> None:
        super().__init__(
            f"graph is not (P7,C4,C5)-free: induced {report.forbidden_kind} on {report.witness}"
        )
        self.report = report


# ------------------------------------------------------------------------------
class StructureUnavailableError(ChromaError):
    """The driver could not reduce the graph to a structure it knows how to color."""


# ------------------------------------------------------------------------------
class GenerationError(ChromaError):
    """A generator gave up after its rejection-sampling budget."""

    def __init__(self, what: str, *, attempts: int) -> None:
        super().__init__(f"{what}: gave up after {attempts} attempts")
        self.attempts = attempts


# ------------------------------------------------------------------------------
class DimacsParseError(ChromaError, ValueError):
    """Malformed DIMACS input."""

    def __init__(self, message: str, *, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


# ------------------------------------------------------------------------------
class ColoringDefectError(ChromaError):
    """A constructive step produced an improper coloring or broke its color budget.

    This signals a bug in a construction, never an expected outcome.
    """


__all__ = [
    "BudgetExceededError",
    "ChromaError",
    "ColoringDefectError",
    "DimacsParseError",
    "GenerationError",
    "InvalidSpecError",
    "NotInClassError",
    "PreconditionError",
    "SizeGuardError",
    "StructureUnavailableError",
]
