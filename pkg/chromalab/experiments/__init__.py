"""Numbered experiments, each runnable as ``python -m chromalab.experiments.eNNN``.

The registry below lets the CLI, docs and tests enumerate experiments without
importing them; modules are imported only by :func:`run_experiment`.
"""

from __future__ import annotations

import importlib
from collections.abc import Iterable, Sequence
from dataclasses import dataclass


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class ExperimentSpec:
    """Registry entry for one experiment.

    Args:
        experiment_id: Stable id such as ``"e001"``; never reused.
        title: Title used in listings and report headings.
        tags: Tags from the docs tag page, primary tags first.
    """

    experiment_id: str
    title: str
    tags: tuple[str, ...]

    @property
    def module(self) -> str:
        return f"{__name__}.{self.experiment_id}"


_EXPERIMENTS: dict[str, ExperimentSpec] = {
    spec.experiment_id: spec
    for spec in (
        ExperimentSpec(
            "e001",
            "Emerald constants: χ of equal emerald blowups",
            ("tightness", "verification", "emerald"),
        ),
        ExperimentSpec(
            "e002",
            "Equal blowups of the seven-cycle",
            ("tightness", "verification", "c7"),
        ),
        ExperimentSpec(
            "e003",
            "Bound sweep over random instances",
            ("benchmark", "visualization", "random"),
        ),
    )
}


# ------------------------------------------------------------------------------
def iter_experiments() -> Iterable[ExperimentSpec]:
    """Registered experiments in id order."""
    return tuple(_EXPERIMENTS[key] for key in sorted(_EXPERIMENTS))


# ------------------------------------------------------------------------------
def list_experiment_ids() -> tuple[str, ...]:
    return tuple(sorted(_EXPERIMENTS))


# ------------------------------------------------------------------------------
def get_experiment_module(experiment_id: str) -> str:
    """Import path of an experiment's entry point.

    Raises:
        KeyError: If the id is not registered.
    """
    try:
        return _EXPERIMENTS[experiment_id].module
    except KeyError:
        raise KeyError(f"Unknown experiment id: {experiment_id!r}") from None


# ------------------------------------------------------------------------------
def run_experiment(experiment_id: str, argv: Sequence[str]) -> int:
    """Import an experiment and call its ``main(argv)``.

    Returns:
        The experiment's exit code.
    """
    module = importlib.import_module(get_experiment_module(experiment_id))
    code: int = module.main(list(argv))
    return code


__all__ = [
    "ExperimentSpec",
    "get_experiment_module",
    "iter_experiments",
    "list_experiment_ids",
    "run_experiment",
]
