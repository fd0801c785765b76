from unittest.mock import MagicMock

import matplotlib.figure
import matplotlib.pyplot as plt

from chromalab.plots.helpers import finalize_figure, plot_colors_against_bound



def test_finalize_figure() -> None:
    mock_fig = MagicMock(spec=matplotlib.figure.Figure)
    mock_ax = MagicMock()
    mock_ax.get_legend_handles_labels.return_value = ([], [])
    mock_fig.axes = [mock_ax]

    finalize_figure(mock_fig)

    mock_ax.grid.assert_called_once()
    mock_ax.legend.assert_not_called()
    mock_fig.tight_layout.assert_called_once()


def test_plot_colors_against_bound_labels() -> None:
    fig = plot_colors_against_bound(
        omegas=[6, 4, 2],
        colors=[8, 5, 3],
        bound=[8, 5, 3],
        exact=[8, None, 3],
        title="sweep",
    )
    ax = fig.axes[0]
    labels = ax.get_legend_handles_labels()[1]

    assert ax.get_title() == "sweep"
    assert labels == ["bound", "colors used", "exact χ"]
    plt.close(fig)


def test_plot_colors_against_bound_without_exact() -> None:
    fig = plot_colors_against_bound(omegas=[2], colors=[3], bound=[3], title="one")
    assert "exact χ" not in fig.axes[0].get_legend_handles_labels()[1]
    plt.close(fig)
