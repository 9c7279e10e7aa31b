"""Figure rendering for the CLI report paths.

Figures are written to files (PNG) next to the delimited output; nothing
here is interactive, so the Agg backend is forced before pyplot loads.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_weight_distribution(
    path: str | Path,
    weights: Sequence[int],
    dual_weights: Optional[Sequence[int]] = None,
    title: str = "",
) -> Path:
    """Bar chart of the weight enumerator, optionally overlaid with the dual's."""
    path = Path(path)
    n = len(weights) - 1
    xs = range(n + 1)
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    width = 0.38 if dual_weights is not None else 0.72
    ax.bar(xs, weights, width=width, label="code", color="#2c6fbb")
    if dual_weights is not None:
        ax.bar(
            [x + width for x in xs],
            dual_weights,
            width=width,
            label="dual",
            color="#c96a2b",
        )
        ax.legend(frameon=False)
    ax.set_xlabel("Hamming weight")
    ax.set_ylabel("codewords")
    ax.set_xticks(list(xs))
    if title:
        ax.set_title(title, fontsize=10)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_search_summary(path: str | Path, records, title: str = "") -> Path:
    """Scatter of (dimension, distance) over the searched codes.

    Codes on the Singleton line d = n - k + 1 are highlighted; records
    without a computed distance are skipped.
    """
    path = Path(path)
    pts = [(r.k, r.d, r.mds) for r in records if r.d is not None]
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    if pts:
        n = records[0].n
        ks = sorted({k for k, _, _ in pts})
        ax.plot(
            ks,
            [n - k + 1 for k in ks],
            linestyle="--",
            linewidth=1,
            color="#999999",
            label="Singleton bound",
        )
        for mds, color, marker in ((True, "#b02424", "o"), (False, "#2c6fbb", "x")):
            sel = [(k, d) for k, d, flag in pts if flag == mds]
            if sel:
                ax.scatter(
                    [k for k, _ in sel],
                    [d for _, d in sel],
                    s=28,
                    c=color,
                    marker=marker,
                    label="MDS" if mds else "not MDS",
                )
        ax.legend(frameon=False, fontsize=8)
    ax.set_xlabel("dimension k")
    ax.set_ylabel("minimum distance d")
    if title:
        ax.set_title(title, fontsize=10)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
