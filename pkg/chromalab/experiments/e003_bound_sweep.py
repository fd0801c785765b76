"""E003 — Bound sweep over random emerald blowups and bracelets.

Generates seeded instances, colors each one through the driver and records the run in
``runs.csv``. Every row must sit at or below its budget; the figure shows how much room
is left.

Usage (repository convention):
    python -m chromalab.experiments.e003 --out out/e003

Artifacts:
    - figures/fig_01_emerald_random.png
    - figures/fig_02_bracelet_random.png
    - runs.csv
    - params.json
    - results.json
    - report.md
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass
from pathlib import Path

from chromalab.cli import color_target
from chromalab.exp.cli import parse_experiment_args
from chromalab.exp.io import prepare_out_dir, save_figure, write_json
from chromalab.exp.logging import LoggingConfig, get_logger, setup_logging
from chromalab.exp.random import set_global_seed
from chromalab.exp.reporting import RunReport, timings_by_family, write_reports_csv
from chromalab.generators import Family, GenConfig, gen, instance_id
from chromalab.plots.helpers import plot_colors_against_bound

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Params:
    """Experiment parameters.

    Args:
        count: Instances per family; instance ``i`` uses seed ``seed + i``.
        w_max: Largest emerald bag size.
        bag_max: Largest bracelet bag part.
    """

    count: int
    w_max: int
    bag_max: int


# ------------------------------------------------------------------------------
def _configs(params: Params, seed: int) -> list[GenConfig]:
    emerald = [
        GenConfig(Family.EMERALD_RANDOM, seed=seed + i, params={"w_max": params.w_max})
        for i in range(params.count)
    ]
    bracelet = [
        GenConfig(Family.BRACELET_RANDOM, seed=seed + i, params={"bag_max": params.bag_max})
        for i in range(params.count)
    ]
    return emerald + bracelet


# ------------------------------------------------------------------------------
def sweep(params: Params, seed: int) -> list[RunReport]:
    """Color every generated instance and collect the run reports."""
    reports: list[RunReport] = []
    for config in _configs(params, seed):
        _, report = color_target(
            gen(config), instance_id=instance_id(config), family=str(config.family)
        )
        logger.debug(
            "%s: omega %d, %d/%d colors",
            report.instance_id,
            report.omega,
            report.colors,
            report.budget,
        )
        reports.append(report)
    return reports


# ------------------------------------------------------------------------------
def _write_report(*, report_path: Path, reports: Sequence[RunReport], seed: int) -> None:
    timings = "\n".join(
        f"| {t.family} | {t.count} | {t.mean_ms:.2f} | {t.max_ms:.2f} |"
        for t in timings_by_family(reports)
    )
    tight = sum(1 for r in reports if r.colors == r.budget)
    report_md = f"""\
# E003 — Bound sweep

**Reproduce:**

```bash
python -m chromalab.experiments.e003 --out out/e003 --seed {seed}
```

- Instances: {len(reports)}, all verified within budget.
- Instances that use their full budget: {tight}.

| family | instances | mean ms | max ms |
|--------|-----------|---------|--------|
{timings}

## Outputs

- `runs.csv` (one row per instance)
- `figures/fig_01_emerald_random.png`, `figures/fig_02_bracelet_random.png`
"""
    report_path.write_text(report_md, encoding="utf-8")


# ------------------------------------------------------------------------------
def main(argv: Sequence[str] | None = None) -> int:
    """Run the experiment.

    Returns:
        Process exit code (0 for success).
    """
    args = parse_experiment_args(
        experiment_id="e003", description="Bound sweep over random instances", argv=argv
    )
    setup_logging(config=LoggingConfig(verbose=args.verbose))
    set_global_seed(args.seed)

    params = Params(count=20 if args.quick else 200, w_max=6, bag_max=4)
    out_paths = prepare_out_dir(out_dir=args.out_dir)

    reports = sweep(params, args.seed)
    with out_paths.runs_csv_path.open("w", encoding="utf-8", newline="") as stream:
        write_reports_csv(stream, reports)

    for index, family in enumerate((Family.EMERALD_RANDOM, Family.BRACELET_RANDOM), start=1):
        rows = [r for r in reports if r.family == family]
        fig = plot_colors_against_bound(
            omegas=[r.omega for r in rows],
            colors=[r.colors for r in rows],
            bound=[r.budget for r in rows],
            title=f"{family} ({len(rows)} instances)",
        )
        save_figure(out_dir=out_paths.figures_dir, name=f"fig_{index:02d}_{family}", fig=fig)

    write_json(out_paths.params_path, data={**asdict(params), "seed": args.seed})
    write_json(
        out_paths.results_path,
        data={"timings": [asdict(t) for t in timings_by_family(reports)]},
    )
    _write_report(report_path=out_paths.report_path, reports=reports, seed=args.seed)

    logger.info("Experiment E003 completed successfully. Artifacts saved to: %s", args.out_dir)
    return 0


# ------------------------------------------------------------------------------
if __name__ == "__main__":
    raise SystemExit(main())
