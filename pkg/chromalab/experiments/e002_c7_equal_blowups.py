"""E002 — Equal blowups of the seven-cycle.

``C7[K_t]`` has clique number ``2t`` and stability number 3, so χ >= ceil(7t/3). The
modular layout colors it with exactly that many colors; the exact oracle confirms it
for small ``t``.

Usage (repository convention):
    python -m chromalab.experiments.e002 --out out/e002

Artifacts:
    - figures/fig_01_colors_vs_t.png
    - params.json
    - results.json
    - report.md
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass
from pathlib import Path

import matplotlib.figure as fig
import matplotlib.pyplot as plt
import numpy as np

from chromalab.colorers.c7 import c7_palette, color_c7_equal
from chromalab.exp.cli import parse_experiment_args
from chromalab.exp.io import prepare_out_dir, save_figure, write_json
from chromalab.exp.logging import LoggingConfig, get_logger, setup_logging
from chromalab.exp.random import set_global_seed
from chromalab.oracle.covering import blowup_chromatic_exact
from chromalab.plots.helpers import finalize_figure
from chromalab.structure.blowup import BlowupSpec

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Params:
    """Experiment parameters.

    Args:
        t_max: Largest bag size.
        exact_up_to: Largest bag size checked against the exact oracle.
    """

    t_max: int
    exact_up_to: int


# ------------------------------------------------------------------------------
def _plot(t: np.ndarray, colors: np.ndarray, exact: Sequence[int | None]) -> fig.Figure:
    fig_obj, ax = plt.subplots()
    ax.plot(t, [c7_palette(int(v)) for v in t], color="tab:red", label="ceil(7t/3)")
    ax.scatter(t, colors, label="colors used")
    known = [(int(v), chi) for v, chi in zip(t, exact, strict=True) if chi is not None]
    if known:
        ax.scatter(*zip(*known, strict=True), marker="x", color="black", label="exact χ")
    ax.set_title("C7[K_t]")
    ax.set_xlabel("t")
    ax.set_ylabel("colors")
    finalize_figure(fig_obj)
    return fig_obj


# ------------------------------------------------------------------------------
def _write_report(
    *, report_path: Path, t: np.ndarray, colors: np.ndarray, exact: Sequence[int | None], seed: int
) -> None:
    cells = [
        (int(v), int(k), c7_palette(int(v)), "-" if chi is None else str(chi))
        for v, k, chi in zip(t, colors, exact, strict=True)
    ]
    lines = "\n".join(
        f"| {v} | {2 * v} | {k} | {bound} | {chi} |" for v, k, bound, chi in cells
    )
    report_md = f"""\
# E002 — Equal blowups of the seven-cycle

**Reproduce:**

```bash
python -m chromalab.experiments.e002 --out out/e002 --seed {seed}
```

| t | ω | colors | ceil(7t/3) | exact χ |
|---|---|--------|------------|---------|
{lines}

## Outputs

- `figures/fig_01_colors_vs_t.png`
- `params.json`, `results.json`
"""
    report_path.write_text(report_md, encoding="utf-8")


# ------------------------------------------------------------------------------
def main(argv: Sequence[str] | None = None) -> int:
    """Run the experiment.

    Returns:
        Process exit code (0 for success).
    """
    args = parse_experiment_args(
        experiment_id="e002", description="Equal blowups of the seven-cycle", argv=argv
    )
    setup_logging(config=LoggingConfig(verbose=args.verbose))
    set_global_seed(args.seed)

    params = Params(t_max=9, exact_up_to=4 if args.quick else 6)
    out_paths = prepare_out_dir(out_dir=args.out_dir)

    t = np.arange(1, params.t_max + 1, dtype=np.int64)
    colors = np.array([color_c7_equal(int(v)).k for v in t], dtype=np.int64)
    exact: list[int | None] = [
        blowup_chromatic_exact(BlowupSpec.uniform("c7", int(v)))[0]
        if v <= params.exact_up_to
        else None
        for v in t
    ]
    logger.info("C7[K_t] colors for t = 1..%d: %s", params.t_max, colors.tolist())

    figure = _plot(t, colors, exact)
    save_figure(out_dir=out_paths.figures_dir, name="fig_01_colors_vs_t", fig=figure)
    write_json(out_paths.params_path, data=asdict(params))
    write_json(
        out_paths.results_path,
        data={"t": t.tolist(), "colors": colors.tolist(), "exact": exact},
    )
    _write_report(
        report_path=out_paths.report_path, t=t, colors=colors, exact=exact, seed=args.seed
    )

    logger.info("Experiment E002 completed successfully. Artifacts saved to: %s", args.out_dir)
    return 0


# ------------------------------------------------------------------------------
if __name__ == "__main__":
    raise SystemExit(main())
