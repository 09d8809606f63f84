"""Matplotlib output: Hasse diagrams and harness summaries."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .core import Poset, heights  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def hasse_layout(p: Poset) -> list[tuple[float, float]]:
    """Rows by height; within a row, order by mean position of lower covers.

    Isolated points are pushed to the right end of their row.
    """
    if p.n == 0:
        return []
    level = heights(p).per_element
    covers = p.covers()
    below: dict[int, list[int]] = {i: [] for i in range(p.n)}
    for a, b in covers:
        below[b].append(a)
    touched = {i for pair in covers for i in pair}
    x = [0.0] * p.n
    for h in range(max(level) + 1):
        row = [i for i in range(p.n) if level[i] == h]
        # isolated points go to the right end of their row
        row.sort(key=lambda i: (i not in touched,
                                sum(x[j] for j in below[i]) / len(below[i]) if below[i] else 0.0, i))
        width = len(row) - 1
        for k, i in enumerate(row):
            x[i] = k - width / 2
    return [(x[i], float(level[i])) for i in range(p.n)]


def draw_hasse(p: Poset, ax=None, labels: Optional[Sequence[str]] = None,
               node_size: float = 30.0, title: Optional[str] = None):
    if ax is None:
        _, ax = plt.subplots(figsize=(max(3.0, p.n ** 0.5 * 1.6), 3.0))
    pos = hasse_layout(p)
    for a, b in p.covers():
        ax.plot([pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]], color="0.4", lw=0.7, zorder=1)
    if pos:
        xs, ys = zip(*pos)
        ax.scatter(xs, ys, s=node_size, color="k", zorder=2)
    if labels:
        for (x, y), lab in zip(pos, labels):
            ax.annotate(lab, (x, y), textcoords="offset points", xytext=(4, 3), fontsize=6)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    return ax


def save_hasse(p: Poset, path: Union[str, Path], labels: Optional[Sequence[str]] = None,
               title: Optional[str] = None) -> Path:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(3.0, p.n ** 0.5 * 1.6), 3.2))
        draw_hasse(p, ax, labels=labels, title=title, node_size=max(6.0, 40.0 - p.n / 4))
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def save_summary(reports, path: Union[str, Path]) -> Path:
    """Bar chart of cases, skips and failures per check (log scale)."""
    names = [r.check_name for r in reports]
    series = {
        "cases": [r.cases_attempted for r in reports],
        "skipped": [len(r.cases_skipped_cap) for r in reports],
        "inconclusive": [len(r.inconclusive) for r in reports],
        "failures": [len(r.failures) for r in reports],
    }
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(1.0 + 0.8 * len(names), 3.0))
        width = 0.2
        for k, (label, vals) in enumerate(series.items()):
            xs = [i + (k - 1.5) * width for i in range(len(names))]
            ax.bar(xs, [v + 1 for v in vals], width, label=label)
        ax.set_yscale("log")
        ax.set_ylabel("count + 1")
        ax.set_xticks(range(len(names)))
        ax.set_xticklabels(names)
        ax.legend(frameon=False, fontsize=7)
        fig.savefig(path)
        plt.close(fig)
    return Path(path)
