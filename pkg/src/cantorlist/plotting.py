"""Figures for the command line: the numbers against their index, and Phi."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_catalog(catalog, path) -> Path:
    """Scatter of omega(c) against c, coloured by degree, with height bands."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(9, 4.5))
    degrees = sorted({e.k for e in catalog})
    cmap = plt.get_cmap("viridis", max(len(degrees), 2))
    for i, k in enumerate(degrees):
        pts = [(e.c, float(e.value)) for e in catalog if e.k == k]
        ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=8, color=cmap(i), label=f"degree {k}")
    starts = {}
    for e in catalog:
        starts.setdefault(e.n, e.c)
    for n, c in starts.items():
        if n > 1:
            ax.axvline(c - 0.5, color="0.85", lw=0.8, zorder=0)
    ax.set_xlabel("index c")
    ax.set_ylabel("omega(c)")
    ax.set_title(f"Real algebraic numbers of height at most {max(starts)}")
    ax.legend(fontsize=8, markerscale=2, loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_phi(table, path) -> Path:
    """Stacked bars of Phi(n, k) per height, log-scaled totals on top."""
    path = Path(path)
    H = table.max_height
    heights = list(range(1, H + 1))
    fig, ax = plt.subplots(figsize=(7, 4.5))
    bottom = [0] * H
    cmap = plt.get_cmap("viridis", max(H, 2))
    for k in range(1, H + 1):
        vals = [table.cell(n, k) for n in heights]
        if any(vals):
            ax.bar(heights, vals, bottom=bottom, color=cmap(k - 1), label=f"k={k}")
            bottom = [b + v for b, v in zip(bottom, vals)]
    for n, tot in zip(heights, table.totals()):
        ax.annotate(str(tot), (n, tot), ha="center", va="bottom", fontsize=8)
    ax.set_yscale("symlog", linthresh=10)
    ax.set_xlabel("height n")
    ax.set_ylabel("Phi(n, k), stacked over k")
    ax.set_xticks(heights)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
