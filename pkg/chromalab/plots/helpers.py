from __future__ import annotations

from collections.abc import Sequence

import matplotlib.figure
import matplotlib.pyplot as plt
import numpy as np


# ------------------------------------------------------------------------------
def finalize_figure(fig: matplotlib.figure.Figure) -> None:
    """Grid, legend (when labeled artists exist) and tight layout on every axis."""
    for ax in fig.axes:
        ax.grid(True, alpha=0.3)
        if ax.get_legend_handles_labels()[0]:
            ax.legend()
    fig.tight_layout()


# ------------------------------------------------------------------------------
def plot_colors_against_bound(
    *,
    omegas: Sequence[int],
    colors: Sequence[int],
    bound: Sequence[int],
    title: str,
    exact: Sequence[int | None] | None = None,
) -> matplotlib.figure.Figure:
    """Colors used per instance, with the bound (and exact χ where known) at the same ω.

    Args:
        omegas: Clique number per instance.
        colors: Colors used per instance.
        bound: Allowed colors per instance.
        title: Axis title.
        exact: Optional chromatic numbers; ``None`` entries are skipped.

    Returns:
        The figure.
    """
    fig, ax = plt.subplots()
    x = np.asarray(omegas, dtype=np.int64)
    order = np.argsort(x, kind="stable")
    ax.plot(x[order], np.asarray(bound)[order], color="tab:red", label="bound")
    ax.scatter(x, np.asarray(colors), s=18, label="colors used")
    if exact is not None:
        known = [(w, chi) for w, chi in zip(omegas, exact, strict=True) if chi is not None]
        if known:
            kx, ky = zip(*known, strict=True)
            ax.scatter(kx, ky, marker="x", color="black", label="exact χ")
    ax.set_title(title)
    ax.set_xlabel("ω")
    ax.set_ylabel("colors")
    finalize_figure(fig)
    return fig
