"""Figure rendering for generated topologies.

Two views, written as PNG files next to the exported edge data:

* ``layers.png`` — one sparsity panel per adjacency block (entry positions,
  origin at the top-left like a printed matrix);
* ``topology.png`` — the layered graph itself, nodes in columns and edges as
  straight segments.  Skipped for networks too large to read (wide layers or
  too many edges), in which case the sparsity panels are the useful view
  anyway.

Rendering is deterministic: fixed figure geometry, fixed dpi, pinned PNG
metadata, no timestamps.
"""

from __future__ import annotations

import math
import os
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # file output only; never touch a display

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection

from .topology import LayeredTopology

# Beyond these limits an edge diagram is an unreadable smear; only the
# per-block sparsity panels get rendered.
MAX_DIAGRAM_LAYER_SIZE = 512
MAX_DIAGRAM_EDGES = 20_000

_PNG_METADATA = {"Software": "radixnet"}


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=150, metadata=_PNG_METADATA)
    plt.close(fig)


def layer_panel_figure(topology: LayeredTopology):
    """One scatter panel per adjacency block, laid out in a grid."""
    n = len(topology.submatrices)
    ncols = min(4, n)
    nrows = math.ceil(n / ncols)
    fig, axes = plt.subplots(
        nrows, ncols,
        figsize=(3.0 * ncols, 3.0 * nrows),
        squeeze=False,
    )
    for k, m in enumerate(topology.submatrices):
        ax = axes[k // ncols][k % ncols]
        if m.entries:
            rows, cols = zip(*m.entries)
        else:
            rows, cols = (), ()
        marker = max(0.2, min(16.0, 4000.0 / (m.rows * m.cols)))
        ax.scatter(cols, rows, s=marker, c="#1f4e79", marker="s", linewidths=0)
        ax.set_xlim(-0.5, m.cols - 0.5)
        ax.set_ylim(m.rows - 0.5, -0.5)
        ax.set_title(f"block {k}  ({m.rows}×{m.cols}, {m.nnz} edges)", fontsize=9)
        ax.set_xticks([])
        ax.set_yticks([])
        ax.set_aspect("equal")
    for k in range(n, nrows * ncols):
        axes[k // ncols][k % ncols].set_axis_off()
    fig.suptitle("adjacency blocks", fontsize=11)
    fig.tight_layout()
    return fig


def topology_diagram_figure(topology: LayeredTopology):
    """Layered node/edge drawing, or None when the network is too large."""
    sizes = topology.layer_sizes
    if max(sizes) > MAX_DIAGRAM_LAYER_SIZE or topology.edge_count > MAX_DIAGRAM_EDGES:
        return None

    def y(layer: int, node: int) -> float:
        # center every column vertically
        return node - (sizes[layer] - 1) / 2.0

    segments = []
    for k, m in enumerate(topology.submatrices):
        segments.extend(((k, y(k, r)), (k + 1, y(k + 1, c))) for r, c in m.entries)
    height = min(10.0, max(2.5, 0.22 * max(sizes)))
    width = max(4.0, 1.2 * len(sizes))
    fig, ax = plt.subplots(figsize=(width, height))
    ax.add_collection(LineCollection(segments, colors="#1f4e79", linewidths=0.6, alpha=0.35))
    for k, size in enumerate(sizes):
        ax.scatter([k] * size, [y(k, i) for i in range(size)], s=14, c="#222222", zorder=3)
    ax.set_xlim(-0.5, len(sizes) - 0.5)
    ax.set_xticks(range(len(sizes)))
    ax.set_xlabel("layer")
    ax.set_yticks([])
    ax.set_title(f"layer sizes {', '.join(str(s) for s in sizes)}; {topology.edge_count} edges")
    fig.tight_layout()
    return fig


def render_figures(topology: LayeredTopology, destination: str | os.PathLike) -> list[Path]:
    """Write all applicable figures into ``destination``; returns the manifest."""
    dest = Path(destination)
    dest.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    panel_path = dest / "layers.png"
    _save(layer_panel_figure(topology), panel_path)
    written.append(panel_path)

    diagram = topology_diagram_figure(topology)
    if diagram is not None:
        diagram_path = dest / "topology.png"
        _save(diagram, diagram_path)
        written.append(diagram_path)
    return written
