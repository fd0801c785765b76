"""E001 — Emerald constants: χ of equal emerald blowups.

Colors ``E[K_t]`` constructively and compares with the exact chromatic number from
stable-set covering. ``E[K_3]`` and ``E[K_6]`` meet ``ceil(11ω/9)`` exactly, which is
what makes the bound tight.

Usage (repository convention):
    python -m chromalab.experiments.e001 --out out/e001

Artifacts:
    - figures/fig_01_colors_vs_omega.png
    - params.json
    - results.json
    - report.md
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

from chromalab.colorers.budget import eleven_ninths
from chromalab.colorers.emerald import color_emerald_blowup
from chromalab.exp.cli import parse_experiment_args
from chromalab.exp.io import prepare_out_dir, save_figure, write_json
from chromalab.exp.logging import LoggingConfig, get_logger, setup_logging
from chromalab.exp.random import set_global_seed
from chromalab.oracle.covering import blowup_chromatic_exact
from chromalab.plots.helpers import plot_colors_against_bound
from chromalab.structure.blowup import BlowupSpec

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Params:
    """Experiment parameters.

    Args:
        sizes: Bag sizes ``t`` of the blowups ``E[K_t]``.
        exact_up_to: Largest ``t`` whose chromatic number is computed exactly.
    """

    sizes: tuple[int, ...]
    exact_up_to: int


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Row:
    t: int
    omega: int
    colors: int
    bound: int
    exact: int | None


# ------------------------------------------------------------------------------
def measure(params: Params) -> list[Row]:
    """Color every ``E[K_t]`` and, where affordable, compute its exact χ."""
    rows: list[Row] = []
    for t in params.sizes:
        spec = BlowupSpec.uniform("emerald", t)
        coloring = color_emerald_blowup(spec)
        exact = blowup_chromatic_exact(spec)[0] if t <= params.exact_up_to else None
        bound = eleven_ninths(spec.omega)
        rows.append(Row(t=t, omega=spec.omega, colors=coloring.k, bound=bound, exact=exact))
        logger.info("E[K%d]: omega %d, %d colors, exact %s", t, spec.omega, coloring.k, exact)
    return rows


# ------------------------------------------------------------------------------
def _write_report(*, report_path: Path, rows: Sequence[Row], seed: int) -> None:
    table = "\n".join(
        f"| {r.t} | {r.omega} | {r.colors} | {r.bound} | {'-' if r.exact is None else r.exact} |"
        for r in rows
    )
    report_md = f"""\
# E001 — Emerald constants

**Reproduce:**

```bash
python -m chromalab.experiments.e001 --out out/e001 --seed {seed}
```

| t | ω | colors | ceil(11ω/9) | exact χ |
|---|---|--------|-------------|---------|
{table}

## Outputs

- `figures/fig_01_colors_vs_omega.png`
- `params.json`, `results.json`

## Notes

- α(E) = 3 on 11 vertices forces χ(E[K_t]) >= 11t/3, so at t = 3k the constructive
  coloring with 11k colors is optimal and equals ceil(11ω/9).
"""
    report_path.write_text(report_md, encoding="utf-8")


# ------------------------------------------------------------------------------
def main(argv: Sequence[str] | None = None) -> int:
    """Run the experiment.

    Returns:
        Process exit code (0 for success).
    """
    args = parse_experiment_args(
        experiment_id="e001", description="Emerald constants: χ of E[K_t]", argv=argv
    )
    setup_logging(config=LoggingConfig(verbose=args.verbose))
    set_global_seed(args.seed)

    params = Params(sizes=(1, 2, 3, 6), exact_up_to=3 if args.quick else 6)
    out_paths = prepare_out_dir(out_dir=args.out_dir)

    rows = measure(params)
    fig = plot_colors_against_bound(
        omegas=[r.omega for r in rows],
        colors=[r.colors for r in rows],
        bound=[r.bound for r in rows],
        exact=[r.exact for r in rows],
        title="Equal emerald blowups E[K_t]",
    )
    save_figure(out_dir=out_paths.figures_dir, name="fig_01_colors_vs_omega", fig=fig)

    results: dict[str, Any] = {"rows": [asdict(r) for r in rows]}
    write_json(out_paths.params_path, data=asdict(params))
    write_json(out_paths.results_path, data=results)
    _write_report(report_path=out_paths.report_path, rows=rows, seed=args.seed)

    logger.info("Experiment E001 completed successfully. Artifacts saved to: %s", args.out_dir)
    return 0


# ------------------------------------------------------------------------------
if __name__ == "__main__":
    raise SystemExit(main())
