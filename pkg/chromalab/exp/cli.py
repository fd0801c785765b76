from __future__ import annotations

import argparse
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class ExperimentArgs:
    """Parsed command-line arguments of an experiment run.

    Attributes:
        out_dir: Directory for every artifact of the run.
        seed: Base seed; instance ``i`` of a sweep uses ``seed + i``.
        verbose: Enable DEBUG logging for chromalab loggers.
        quick: Shrink sweeps and skip the slowest exact checks.
    """

    out_dir: Path
    seed: int
    verbose: bool
    quick: bool = False


# ------------------------------------------------------------------------------
def parse_experiment_args(
    *,
    experiment_id: str | None = None,
    description: str | None = None,
    argv: Sequence[str] | None = None,
) -> ExperimentArgs:
    """Parse the arguments shared by all experiments.

    Args:
        experiment_id: Program name shown in help.
        description: Description shown in help.
        argv: Arguments without the program name; ``None`` reads ``sys.argv``.

    Returns:
        The parsed ExperimentArgs.
    """
    parser = argparse.ArgumentParser(prog=experiment_id, description=description)
    parser.add_argument(
        "--out",
        dest="out_dir",
        type=Path,
        required=True,
        help="Output directory (e.g., out/e001).",
    )
    parser.add_argument("--seed", type=int, default=1, help="Base seed for generated instances.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging.")
    parser.add_argument(
        "--quick", action="store_true", help="Smaller sweeps, no slow exact checks."
    )
    ns = parser.parse_args(None if argv is None else list(argv))
    return ExperimentArgs(out_dir=ns.out_dir, seed=ns.seed, verbose=ns.verbose, quick=ns.quick)
