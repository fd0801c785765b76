import csv
import importlib
import io
import json
from pathlib import Path

import pytest

from chromalab.experiments import (
    get_experiment_module,
    iter_experiments,
    list_experiment_ids,
    run_experiment,
)

DOC_TAGS = {
    "tightness",
    "verification",
    "benchmark",
    "visualization",
    "emerald",
    "c7",
    "bracelet",
    "random",
}


def test_registry_lists_importable_modules() -> None:
    assert list_experiment_ids() == ("e001", "e002", "e003")
    for spec in iter_experiments():
        module = importlib.import_module(spec.module)
        assert callable(module.main)
        assert set(spec.tags) <= DOC_TAGS
    assert get_experiment_module("e002") == "chromalab.experiments.e002"
    with pytest.raises(KeyError, match="e999"):
        get_experiment_module("e999")


@pytest.mark.slow
def test_e002_quick_run(tmp_path: Path) -> None:
    assert run_experiment("e002", ["--out", str(tmp_path), "--quick"]) == 0
    results = json.loads((tmp_path / "results.json").read_text(encoding="utf-8"))
    assert results["colors"] == [3, 5, 7, 10, 12, 14, 17, 19, 21]
    assert results["exact"][:4] == [3, 5, 7, 10]
    assert (tmp_path / "figures" / "fig_01_colors_vs_t.png").exists()
    assert (tmp_path / "report.md").read_text(encoding="utf-8").startswith("# E002")


@pytest.mark.slow
def test_e001_quick_run(tmp_path: Path) -> None:
    from chromalab.experiments.e001 import main

    assert main(["--out", str(tmp_path), "--quick"]) == 0
    rows = json.loads((tmp_path / "results.json").read_text(encoding="utf-8"))["rows"]
    assert [r["exact"] for r in rows] == [4, 8, 11, None]
    assert [r["colors"] for r in rows] == [r["bound"] for r in rows] == [4, 8, 11, 22]
    assert (tmp_path / "figures" / "fig_01_colors_vs_omega.png").exists()


@pytest.mark.slow
def test_e003_full_sweep(tmp_path: Path) -> None:
    from chromalab.experiments.e003 import main

    assert main(["--out", str(tmp_path), "--seed", "3"]) == 0
    rows = list(csv.DictReader(io.StringIO((tmp_path / "runs.csv").read_text(encoding="utf-8"))))
    assert len(rows) == 400
    assert all(int(r["colors"]) <= int(r["budget"]) for r in rows)
    assert (tmp_path / "figures" / "fig_02_bracelet_random.png").exists()
