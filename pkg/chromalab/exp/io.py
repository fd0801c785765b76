from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import matplotlib.figure
import matplotlib.pyplot as plt

from chromalab.exp.logging import get_logger

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

type JsonDict = dict[str, Any]


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class RunPaths:
    """Standard artifact paths of an experiment run."""

    root: Path
    figures_dir: Path
    report_path: Path
    params_path: Path
    results_path: Path
    runs_csv_path: Path


# ------------------------------------------------------------------------------
def prepare_out_dir(*, out_dir: Path) -> RunPaths:
    """Create ``out_dir`` and its ``figures`` subdirectory.

    Args:
        out_dir: Root output directory of the run.

    Returns:
        Paths of ``report.md``, ``params.json``, ``results.json`` and ``runs.csv``.
    """
    logger.info("Preparing output directory: %s", out_dir)
    figures_dir = out_dir / "figures"
    figures_dir.mkdir(parents=True, exist_ok=True)
    return RunPaths(
        root=out_dir,
        figures_dir=figures_dir,
        report_path=out_dir / "report.md",
        params_path=out_dir / "params.json",
        results_path=out_dir / "results.json",
        runs_csv_path=out_dir / "runs.csv",
    )


# ------------------------------------------------------------------------------
def save_figure(*, out_dir: Path, name: str, fig: matplotlib.figure.Figure, dpi: int = 160) -> Path:
    """Save ``fig`` as ``<out_dir>/<name>.png`` and close it.

    Returns:
        The written path.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{name}.png"
    logger.info("Saving figure to: %s", path)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
    return path


# ------------------------------------------------------------------------------
def write_json(path: Path, data: JsonDict) -> None:
    """Write ``data`` with sorted keys and two-space indentation."""
    logger.info("Writing JSON to: %s", path)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
