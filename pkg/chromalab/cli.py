"""The ``chroma`` command line.

Subcommands::

    chroma check PATH [--json]
    chroma color PATH [--bound {11/9,7/6,exact}] [--verify] [--oracle] [--out FILE]
    chroma gen FAMILY [KEY=VALUE ...] [--seed N] [--out DIR]
    chroma bench DIR [--jobs N] [--oracle] [--out FILE]

Inputs ending in ``.json`` are structure specs (bare or fixture-wrapped); anything
else is read as DIMACS. Logs go to stderr. ``color`` writes the coloring to ``--out``
(or stdout) and its JSON RunReport to stdout when ``--out`` is given, else to stderr.

Exit codes: 0 ok, 1 usage or parse error, 2 negative answer (not in the class,
structure unavailable, ``check`` found a witness), 3 search budget, size guard or
coloring defect.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import TextIO

from chromalab.colorers.budget import BoundKind, ColorBudget
from chromalab.colorers.driver import color_graph, color_spec
from chromalab.config import OracleConfig, load_oracle_config
from chromalab.errors import (
    BudgetExceededError,
    ColoringDefectError,
    DimacsParseError,
    GenerationError,
    InvalidSpecError,
    NotInClassError,
    PreconditionError,
    SizeGuardError,
    StructureUnavailableError,
)
from chromalab.exp.logging import LoggingConfig, get_logger, setup_logging
from chromalab.exp.reporting import RunReport, timings_by_family, write_reports_csv
from chromalab.generators.config import Family, GenConfig
from chromalab.generators.families import Spec, gen
from chromalab.generators.fixtures import fixture_text, iter_fixtures, write_fixture
from chromalab.graphs.coloring import Coloring, verify_coloring
from chromalab.graphs.core import Graph
from chromalab.graphs.dimacs import format_coloring, read_dimacs
from chromalab.graphs.freeness import check_freeness
from chromalab.oracle.cliques import clique_number
from chromalab.oracle.coloring import chromatic_number_exact
from chromalab.oracle.covering import blowup_chromatic_exact
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.serialization import loads_spec

# ------------------------------------------------------------------------------
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_GUARD = 3

type Target = Graph | Spec


# ------------------------------------------------------------------------------
def load_target(path: Path) -> Target:
    """Read a spec (``.json``) or a DIMACS graph (anything else).

    Raises:
        DimacsParseError: On malformed DIMACS input.
        InvalidSpecError: On malformed spec JSON.
    """
    if path.suffix == ".json":
        try:
            return loads_spec(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InvalidSpecError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return read_dimacs(path).graph


# ------------------------------------------------------------------------------
def _graph_of(target: Target) -> Graph:
    return target if isinstance(target, Graph) else target.realize().graph


# ------------------------------------------------------------------------------
def _kind_of(target: Target) -> str:
    if isinstance(target, Graph):
        return "graph"
    return "blowup" if isinstance(target, BlowupSpec) else "bracelet"


# ------------------------------------------------------------------------------
def cmd_check(path: Path, *, as_json: bool = False, out: TextIO | None = None) -> int:
    """Print whether the input is (P7, C4, C5)-free; exit 0 if free, 2 if not."""
    stream = sys.stdout if out is None else out
    g = _graph_of(load_target(path))
    report = check_freeness(g)
    witness = [] if report.witness is None else [g.labels[v] for v in report.witness]
    if as_json:
        payload = {"schema": 1, **report.to_dict(), "witness": witness or None}
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif report.is_free:
        stream.write(f"{path.name}: (P7, C4, C5)-free, {g.n} vertices\n")
    else:
        stream.write(
            f"{path.name}: induced {report.forbidden_kind} on vertices {' '.join(witness)}\n"
        )
    return EXIT_OK if report.is_free else EXIT_NEGATIVE


# ------------------------------------------------------------------------------
def _color_graph(
    g: Graph, bound: BoundKind | None, cfg: OracleConfig
) -> tuple[Coloring, ColorBudget]:
    if bound is BoundKind.EXACT:
        chi, coloring = chromatic_number_exact(g, config=cfg)
        omega = clique_number(g, config=cfg).omega
        return coloring, ColorBudget.for_bound(BoundKind.EXACT, omega, exact=chi)
    if bound not in (None, BoundKind.ELEVEN_NINTHS):
        raise PreconditionError(
            f"{bound} bound", failures=["plain graphs are colored against the 11/9 bound"]
        )
    coloring = color_graph(g, config=cfg)
    omega = clique_number(g, config=cfg).omega
    return coloring, ColorBudget.for_bound(BoundKind.ELEVEN_NINTHS, omega)


# ------------------------------------------------------------------------------
def _oracle_chi(target: Target, graph: Graph, cfg: OracleConfig) -> int:
    if isinstance(target, BlowupSpec):
        return blowup_chromatic_exact(target, config=cfg)[0]
    return chromatic_number_exact(graph, config=cfg)[0]


# ------------------------------------------------------------------------------
def color_target(
    target: Target,
    *,
    instance_id: str,
    family: str | None = None,
    bound: BoundKind | None = None,
    verify: bool = False,
    oracle: bool = False,
    config: OracleConfig | None = None,
) -> tuple[Coloring, RunReport]:
    """Color a graph or spec and describe the run.

    Args:
        target: DIMACS graph or structure spec.
        instance_id: Name recorded in the report.
        family: Generator family for the report; defaults to the input kind.
        bound: Bound to color against; ``None`` for the target's own.
        verify: Also re-check class membership of the colored graph.
        oracle: Also compute the exact chromatic number.
        config: Oracle limits.

    Raises:
        ColoringDefectError: If re-verification fails.
    """
    cfg = load_oracle_config() if config is None else config
    start = time.perf_counter()
    if isinstance(target, Graph):
        graph = target
        coloring, budget = _color_graph(target, bound, cfg)
    else:
        colored = color_spec(target, bound=bound, config=cfg)
        graph, coloring, budget = colored.realization.graph, colored.coloring, colored.budget
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    check = verify_coloring(graph, coloring)
    if not check.is_proper or not budget.allows(coloring.k):
        raise ColoringDefectError(f"{instance_id}: {check.reason or 'over budget'}")
    if verify:
        membership = check_freeness(graph)
        if not membership.is_free:
            raise NotInClassError(membership)
    chi = _oracle_chi(target, graph, cfg) if oracle else None
    report = RunReport(
        instance_id=instance_id,
        family=family or _kind_of(target),
        n=graph.n,
        omega=budget.omega,
        colors=coloring.k,
        budget=budget.budget,
        bound_kind=str(budget.bound_kind),
        elapsed_ms=elapsed_ms,
        verified=True,
        oracle_chi=chi,
    )
    return coloring, report


# ------------------------------------------------------------------------------
def cmd_color(
    path: Path,
    *,
    bound: BoundKind | None = None,
    verify: bool = False,
    oracle: bool = False,
    out_path: Path | None = None,
) -> int:
    """Color one input; write ``s``/``v`` lines and a JSON RunReport."""
    coloring, report = color_target(
        load_target(path), instance_id=path.stem, bound=bound, verify=verify, oracle=oracle
    )
    text = format_coloring(coloring)
    report_json = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if out_path is None:
        sys.stdout.write(text)
        sys.stderr.write(report_json)
    else:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(text, encoding="utf-8")
        sys.stdout.write(report_json)
    logger.info(
        "%s: %d colors, budget %d (%s)", path.name, report.colors, report.budget, report.bound_kind
    )
    return EXIT_OK


# ------------------------------------------------------------------------------
def parse_params(items: Sequence[str]) -> dict[str, int]:
    """Parse ``KEY=VALUE`` pairs with integer values.

    Raises:
        ValueError: On a malformed pair.
    """
    params: dict[str, int] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"expected KEY=VALUE, got {item!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise ValueError(f"value of {key} must be an integer, got {value!r}") from None
    return params


# ------------------------------------------------------------------------------
def cmd_gen(
    family: str, params: Sequence[str] = (), *, seed: int = 0, out_dir: Path | None = None
) -> int:
    """Generate one fixture into ``out_dir``, or print it when no directory is given."""
    config = GenConfig(family=Family(family), seed=seed, params=parse_params(params))
    if out_dir is None:
        sys.stdout.write(fixture_text(config, gen(config)))
    else:
        sys.stdout.write(f"{write_fixture(out_dir, config)}\n")
    return EXIT_OK


# ------------------------------------------------------------------------------
def _bench_one(job: tuple[Path, str, str, bool, OracleConfig]) -> RunReport:
    path, instance, family, oracle, cfg = job
    target = load_target(path)
    _, report = color_target(target, instance_id=instance, family=family, config=cfg)
    if oracle:
        graph = _graph_of(target)
        try:
            chi = _oracle_chi(target, graph, cfg)
        except (SizeGuardError, BudgetExceededError) as exc:
            logger.debug("%s: no exact value (%s)", instance, exc)
        else:
            report = replace(report, oracle_chi=chi)
    return report


# ------------------------------------------------------------------------------
def cmd_bench(
    fixture_dir: Path,
    *,
    jobs: int | None = None,
    oracle: bool = False,
    out_path: Path | None = None,
) -> int:
    """Color every fixture under ``fixture_dir`` and write one CSV row per instance.

    Rows are ordered by instance id whatever the completion order.
    """
    cfg = load_oracle_config()
    workers = cfg.bench_jobs if jobs is None else jobs
    fixtures = list(iter_fixtures(fixture_dir))
    if not fixtures:
        raise ValueError(f"no fixtures under {fixture_dir}")
    batch = [
        (f.path, f.instance_id, str(f.config.family), oracle, cfg) for f in fixtures
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_bench_one, batch))
    else:
        reports = [_bench_one(job) for job in batch]
    for timing in timings_by_family(reports):
        logger.info(
            "%s: %d instances, mean %.1f ms, max %.1f ms",
            timing.family,
            timing.count,
            timing.mean_ms,
            timing.max_ms,
        )
    if out_path is None:
        write_reports_csv(sys.stdout, reports)
    else:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        with out_path.open("w", encoding="utf-8", newline="") as fh:
            write_reports_csv(fh, reports)
    return EXIT_OK


# ------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chroma",
        description="Color (P7, C4, C5)-free graphs within ceil(11ω/9) colors.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Test (P7, C4, C5)-freeness.")
    check.add_argument("path", type=Path, help="DIMACS .col or spec .json file.")
    check.add_argument("--json", action="store_true", help="Print the report as JSON.")

    color = sub.add_parser("color", help="Color a graph or spec within its bound.")
    color.add_argument("path", type=Path, help="DIMACS .col or spec .json file.")
    color.add_argument(
        "--bound",
        choices=[str(BoundKind.ELEVEN_NINTHS), str(BoundKind.SEVEN_SIXTHS), str(BoundKind.EXACT)],
        default=None,
        help="Bound to color against (default: the input's own bound).",
    )
    color.add_argument("--verify", action="store_true", help="Re-check class membership.")
    color.add_argument("--oracle", action="store_true", help="Also compute the exact χ.")
    color.add_argument("--out", type=Path, default=None, help="Coloring output file.")

    gen_cmd = sub.add_parser("gen", help="Generate a fixture.")
    gen_cmd.add_argument("family", choices=[str(f) for f in Family])
    gen_cmd.add_argument("params", nargs="*", metavar="KEY=VALUE", help="Family parameters.")
    gen_cmd.add_argument("--seed", type=int, default=0, help="PCG64 seed.")
    gen_cmd.add_argument("--out", type=Path, default=None, help="Fixture directory.")

    bench = sub.add_parser("bench", help="Color every fixture in a directory; CSV out.")
    bench.add_argument("fixture_dir", type=Path)
    bench.add_argument("--jobs", type=int, default=None, help="Worker processes.")
    bench.add_argument("--oracle", action="store_true", help="Add exact χ where it fits.")
    bench.add_argument("--out", type=Path, default=None, help="CSV output file.")
    return parser


# ------------------------------------------------------------------------------
def _dispatch(ns: argparse.Namespace) -> int:
    match ns.command:
        case "check":
            return cmd_check(ns.path, as_json=ns.json)
        case "color":
            bound = None if ns.bound is None else BoundKind(ns.bound)
            return cmd_color(
                ns.path, bound=bound, verify=ns.verify, oracle=ns.oracle, out_path=ns.out
            )
        case "gen":
            return cmd_gen(ns.family, ns.params, seed=ns.seed, out_dir=ns.out)
        case _:
            return cmd_bench(ns.fixture_dir, jobs=ns.jobs, oracle=ns.oracle, out_path=ns.out)


# ------------------------------------------------------------------------------
_EXIT_FOR: tuple[tuple[type[BaseException], int], ...] = (
    (NotInClassError, EXIT_NEGATIVE),
    (StructureUnavailableError, EXIT_NEGATIVE),
    (SizeGuardError, EXIT_GUARD),
    (BudgetExceededError, EXIT_GUARD),
    (ColoringDefectError, EXIT_GUARD),
    (DimacsParseError, EXIT_USAGE),
    (GenerationError, EXIT_USAGE),
    (ValueError, EXIT_USAGE),
    (OSError, EXIT_USAGE),
)


# ------------------------------------------------------------------------------
def exit_code_for(exc: BaseException) -> int | None:
    """The documented exit code for ``exc``, or None if it is not an expected failure."""
    return next((code for kind, code in _EXIT_FOR if isinstance(exc, kind)), None)


# ------------------------------------------------------------------------------
def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``chroma`` script.

    Returns:
        The process exit code.
    """
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    setup_logging(config=LoggingConfig(verbose=ns.verbose, stream="stderr"))
    try:
        return _dispatch(ns)
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        logger.error("%s", exc)
        return code
