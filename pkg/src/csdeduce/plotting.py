"""Figures for the CLI report path: clause/literal incidence grids, coverage
maps and sub-contradiction counts. Everything renders off-screen to files.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .logic import ClauseSet, format_literal  # noqa: E402

_INCIDENCE = ListedColormap(["white", "#4c72b0", "#c44e52"])


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_clause_grid(s: ClauseSet, path, title: str | None = None, order=None):
    """One column per clause, one row per variable; blue = positive, red = negative.

    ``order`` fixes the row order (e.g. a triangle's boundary variables).
    """
    rows = list(order) if order is not None else list(s.variables)
    rank = {v: i for i, v in enumerate(rows)}
    grid = np.zeros((len(rows), len(s)), dtype=int)
    for t, c in enumerate(s):
        for l in c.lits:
            grid[rank[abs(l)], t] = 1 if l > 0 else 2
    fig, ax = plt.subplots(figsize=(max(3, 0.5 * len(s) + 1.5), max(2.5, 0.45 * len(rows) + 1.2)))
    ax.imshow(grid, cmap=_INCIDENCE, vmin=0, vmax=2, aspect="equal")
    ax.set_xticks(range(len(s)), [f"D{t + 1}" for t in range(len(s))])
    ax.set_yticks(range(len(rows)), [format_literal(v) for v in rows])
    ax.set_xticks(np.arange(-0.5, len(s)), minor=True)
    ax.set_yticks(np.arange(-0.5, len(rows)), minor=True)
    ax.grid(which="minor", color="0.8", linewidth=0.5)
    ax.tick_params(which="minor", length=0)
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_coverage(table, path, title: str | None = None):
    """Covered maximal clauses as a 2-D map of their indices; uncovered cells are dark."""
    n = len(table.universe)
    cols = 1 << (n - n // 2)
    grid = table.covered.reshape(-1, cols).astype(int)
    fig, ax = plt.subplots(figsize=(max(3, 0.35 * cols + 1.5), max(2.5, 0.35 * grid.shape[0] + 1.2)))
    ax.imshow(grid, cmap=ListedColormap(["#222222", "#dddddd"]), vmin=0, vmax=1, aspect="equal")
    ax.set_xlabel("index bits (low)")
    ax.set_ylabel("index bits (high)")
    ax.set_title(title or f"coverage {table.count}/{table.size}")
    return _save(fig, path)


def plot_counts(ns, cn_values, msc_ns, msc_values, path):
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(ns, [math.log10(v) for v in cn_values], "o-", label="CN(n), triangle")
    ax.plot(msc_ns, [math.log10(v) for v in msc_values], "s--", label="MSC(n), maximal")
    ax.set_xlabel("n")
    ax.set_ylabel("log10 count")
    ax.legend(frameon=False)
    return _save(fig, path)
