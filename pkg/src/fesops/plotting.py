"""Matplotlib rendering of sweep tables to image files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .sweeps import SweepTable

_STYLES = ("-", "--", ":", "-.")


def render_figure(table: SweepTable, path, title: str | None = None, dpi: int = 150) -> None:
    """Draw one line per probability column and save to ``path`` (format by suffix)."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    x = table.rows[:, 0]
    for j, col in enumerate(table.prob_columns):
        ax.plot(x, table.rows[:, col], _STYLES[j % len(_STYLES)], lw=1.6,
                label=table.header[col])
    ax.set_xlabel(table.header[0])
    ax.set_ylabel("probability")
    ax.set_ylim(-0.02, 1.02)
    ax.grid(alpha=0.3)
    ax.legend(frameon=False, fontsize=9)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=dpi)
    plt.close(fig)
