"""Delimited count reports and matplotlib renderings, written to files.

Two products: a CSV of involution-avoidance counts next to the closed-form
Motzkin values, with a figure plotting the same data, and a drawing of the
rewrite graph reachable from seed placements, with the two shifts told
apart by line style.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import Placement
from .enumeration import _MOTZKIN_WITNESSES, verify_motzkin_identities
from .rewriting import build_rewrite_graph

_EDGE_STYLES = {"phi": (0, (1, 2)), "psi": "solid", "both": (0, (4, 2))}


def _style_axes(ax) -> None:
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)


def write_motzkin_report(n_max: int, out_dir: Path | str) -> list[Path]:
    """Write involution-avoidance counts up to length n_max as a CSV and a
    figure.  Returns the written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = verify_motzkin_identities(n_max)

    csv_path = out_dir / "involution_counts.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "motzkin"] + [f"avoiding_{t}" for t in _MOTZKIN_WITNESSES])
        for row in report.rows:
            writer.writerow(
                [row["n"], row["motzkin"]]
                + [row["counts"][t] for t in _MOTZKIN_WITNESSES]
            )

    fig_path = out_dir / "involution_counts.png"
    ns = [row["n"] for row in report.rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(
        ns,
        [row["motzkin"] for row in report.rows],
        color="0.3",
        linewidth=1.0,
        label="closed form",
        zorder=1,
    )
    markers = ("o", "s", "^", "v")
    for marker, pattern in zip(markers, _MOTZKIN_WITNESSES):
        ax.plot(
            ns,
            [row["counts"][pattern] for row in report.rows],
            marker=marker,
            linestyle="none",
            markerfacecolor="none",
            label=f"avoiding {pattern}",
            zorder=2,
        )
    if n_max >= 4:
        ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("avoiding involutions of length n")
    ax.legend(frameon=False, fontsize=8)
    _style_axes(ax)
    fig.tight_layout()
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]


def render_rewrite_graph(
    seeds: Iterable[Placement], k: int, path: Path | str
) -> Path:
    """Draw the rewrite graph reachable from the seeds and save the figure.

    Nodes are laid out by distance from normal form, left to right; dotted
    edges are A-shifts, solid ones B-shifts, dashed ones steps on which
    the two coincide.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    nodes, edges = build_rewrite_graph(seeds, k)

    layers: dict[int, list[Placement]] = {}
    for p, node in nodes.items():
        layers.setdefault(node.minimal_steps, []).append(p)
    max_steps = max(layers) if layers else 0
    coordinates: dict[Placement, tuple[float, float]] = {}
    for steps, members in layers.items():
        members.sort(key=lambda p: str(p.perm))
        for row, p in enumerate(members):
            coordinates[p] = (float(max_steps - steps), row - (len(members) - 1) / 2)

    widest = max((len(members) for members in layers.values()), default=1)
    fig, ax = plt.subplots(
        figsize=(2.2 * (max_steps + 1) + 1.5, 1.1 * widest + 1.0)
    )
    for src, dst, kind in edges:
        (x0, y0), (x1, y1) = coordinates[src], coordinates[dst]
        ax.annotate(
            "",
            xy=(x1, y1),
            xytext=(x0, y0),
            arrowprops={
                "arrowstyle": "-|>",
                "linestyle": _EDGE_STYLES[kind],
                "color": "0.25",
                "shrinkA": 16,
                "shrinkB": 16,
            },
        )
    for p, (x, y) in coordinates.items():
        boxstyle = "round,pad=0.35"
        ax.text(
            x,
            y,
            str(p.perm),
            ha="center",
            va="center",
            fontsize=8,
            bbox={
                "boxstyle": boxstyle,
                "facecolor": "white",
                "edgecolor": "0.2",
                "linewidth": 1.6 if nodes[p].is_normal else 0.8,
            },
        )
    handles = [
        plt.Line2D([], [], color="0.25", linestyle=style, label=label)
        for label, style in (
            ("A-shift", _EDGE_STYLES["phi"]),
            ("B-shift", _EDGE_STYLES["psi"]),
            ("both shifts", _EDGE_STYLES["both"]),
        )
    ]
    ax.legend(handles=handles, frameon=False, fontsize=8, loc="upper left")
    ax.set_xlim(-0.6, max_steps + 0.6)
    span = max(widest / 2, 0.5)
    ax.set_ylim(-span - 0.6, span + 0.6)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
