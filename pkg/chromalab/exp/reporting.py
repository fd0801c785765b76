"""Run reports of the ``chroma`` CLI: JSON per instance, CSV per batch.

CSV columns are fixed by :data:`REPORT_COLUMNS`; empty cells mean "not computed".
"""

from __future__ import annotations

import csv
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any, TextIO

import numpy as np

# ------------------------------------------------------------------------------
REPORT_SCHEMA = 1

REPORT_COLUMNS: tuple[str, ...] = (
    "instance_id",
    "family",
    "n",
    "omega",
    "colors",
    "budget",
    "bound_kind",
    "elapsed_ms",
    "verified",
    "oracle_chi",
    "gap",
)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class RunReport:
    """Outcome of coloring one instance.

    Args:
        instance_id: Fixture stem or input file name.
        family: Generator family, or the input kind (``graph``, ``blowup``, ``bracelet``).
        n: Vertex count.
        omega: Clique number.
        colors: Colors used.
        budget: Colors allowed by ``bound_kind``.
        bound_kind: The bound checked against.
        elapsed_ms: Wall time of the coloring call.
        verified: Whether the coloring was re-verified proper and within budget.
        oracle_chi: Exact chromatic number, when computed.
    """

    instance_id: str
    family: str
    n: int
    omega: int
    colors: int
    budget: int
    bound_kind: str
    elapsed_ms: float
    verified: bool
    oracle_chi: int | None = None

    @property
    def gap(self) -> int | None:
        """Colors above the chromatic number, when it is known."""
        return None if self.oracle_chi is None else self.colors - self.oracle_chi

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "instance_id": self.instance_id,
            "family": self.family,
            "n": self.n,
            "omega": self.omega,
            "colors": self.colors,
            "budget": self.budget,
            "bound_kind": self.bound_kind,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "verified": self.verified,
            "oracle_chi": self.oracle_chi,
            "gap": self.gap,
        }


# ------------------------------------------------------------------------------
def write_reports_csv(stream: TextIO, reports: Iterable[RunReport]) -> None:
    """Write one CSV row per report under a :data:`REPORT_COLUMNS` header."""
    writer = csv.DictWriter(stream, fieldnames=REPORT_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        row = report.to_dict()
        writer.writerow({k: "" if row[k] is None else row[k] for k in REPORT_COLUMNS})


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class FamilyTiming:
    family: str
    count: int
    mean_ms: float
    max_ms: float


# ------------------------------------------------------------------------------
def timings_by_family(reports: Sequence[RunReport]) -> list[FamilyTiming]:
    """Mean and max elapsed time per family, families sorted by name."""
    out: list[FamilyTiming] = []
    for family in sorted({r.family for r in reports}):
        elapsed = np.array([r.elapsed_ms for r in reports if r.family == family], dtype=float)
        out.append(
            FamilyTiming(
                family=family,
                count=int(elapsed.size),
                mean_ms=float(elapsed.mean()),
                max_ms=float(elapsed.max()),
            )
        )
    return out
