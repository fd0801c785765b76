import json

import matplotlib.pyplot as plt
import pytest

from chromalab.exp.io import RunPaths, prepare_out_dir, save_figure, write_json


def test_prepare_out_dir(tmp_path_factory: pytest.TempPathFactory) -> None:
    out_dir = tmp_path_factory.mktemp("out") / "e001"
    paths = prepare_out_dir(out_dir=out_dir)

    assert isinstance(paths, RunPaths)
    assert paths.root == out_dir
    assert paths.report_path == out_dir / "report.md"
    assert paths.params_path == out_dir / "params.json"
    assert paths.runs_csv_path == out_dir / "runs.csv"
    assert paths.figures_dir.is_dir()


def test_save_figure(tmp_path_factory: pytest.TempPathFactory) -> None:
    out_dir = tmp_path_factory.mktemp("figures")
    fig, ax = plt.subplots()
    ax.plot([0, 1], [0, 1])

    fig_path = save_figure(out_dir=out_dir, name="test_fig", fig=fig)

    assert fig_path == out_dir / "test_fig.png"
    assert fig_path.is_file()
    assert not plt.fignum_exists(fig.number)


def test_write_json(tmp_path_factory: pytest.TempPathFactory) -> None:
    out_dir = tmp_path_factory.mktemp("data")
    json_path = out_dir / "test.json"
    data = {"b": 2, "a": 1}

    write_json(json_path, data)

    content = json_path.read_text(encoding="utf-8")
    # Check for stable formatting (sorted keys, indent=2)
    expected_content = json.dumps(data, indent=2, sort_keys=True) + "\n"
    assert content == expected_content
