"""Render the three standard figures from cgmeas sweep CSVs.

Curves are colored by apparatus size N with a sequential colormap, so the
decay of negativity and coherences with growing N reads directly off the
plot.  Output is deterministic: fixed SVG hash salt, no embedded dates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "cgfigures"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .csvdata import CsvFormatError, SweepData, load_sweep  # noqa: E402

PROB_COLUMNS = ("pr_plus1", "pr_0", "pr_minus1")
PROB_LABELS = {"pr_plus1": "Pr(+1)", "pr_0": "Pr(0)", "pr_minus1": "Pr(-1)"}
COHERENCE_LABELS = {
    "abs_10": r"$|\langle +1|\rho|0\rangle|$",
    "abs_1m1": r"$|\langle +1|\rho|{-1}\rangle|$",
    "abs_0m1": r"$|\langle 0|\rho|{-1}\rangle|$",
}
X_LABELS = {"theta": r"$\theta$ (rad)", "time": "time", "p": "p"}


@dataclass(frozen=True)
class PanelSpec:
    """One axes: a CSV, what to draw from it, and the axis labels."""

    csv_path: Path
    kind: str                    # 'prob-curves', 'prob-vs-p', 'negativity', 'coherence'
    y_column: str = ""           # required for 'coherence'
    title: str = ""
    x_label: str = ""            # empty -> derived from the CSV's sweep variable
    y_label: str = ""


@dataclass(frozen=True)
class FigureSpec:
    panels: tuple[PanelSpec, ...]
    layout: tuple[int, int]      # rows, cols
    output: Path                 # base path; .png and .svg are written
    formats: tuple[str, ...] = ("png", "svg")
    size: tuple[float, float] = field(default=(0.0, 0.0))

    def __post_init__(self):
        if not self.panels:
            raise ValueError("figure has no panels")
        rows, cols = self.layout
        if rows * cols < len(self.panels):
            raise ValueError(f"layout {self.layout} too small for {len(self.panels)} panels")


def _n_color(n_list):
    cmap = plt.get_cmap("viridis")
    if len(n_list) == 1:
        return {n_list[0]: cmap(0.5)}
    return {n: cmap(0.15 + 0.7 * i / (len(n_list) - 1)) for i, n in enumerate(n_list)}


def _x_column(data: SweepData) -> str:
    return "theta" if "theta" in data.columns else "sweep_value"


def _draw_prob_curves(ax, data: SweepData) -> None:
    x_name = _x_column(data)
    for n in data.n_list:
        for column in PROB_COLUMNS:
            x, y = data.series(n, x_name, column)
            label = PROB_LABELS[column] if len(data.n_list) == 1 else \
                f"{PROB_LABELS[column]}, N={n}"
            ax.plot(x, y, label=label)
    ax.set_ylabel("probability")


def _draw_prob_vs_p(ax, data: SweepData) -> None:
    colors = _n_color(data.n_list)
    for n in data.n_list:
        x, y = data.series(n, _x_column(data), "pr_0")
        ax.plot(x, y, color=colors[n], label=f"N={n}")
    ax.set_ylabel(PROB_LABELS["pr_0"])


def _draw_negativity(ax, data: SweepData) -> None:
    colors = _n_color(data.n_list)
    for n in data.n_list:
        x, y = data.series(n, _x_column(data), "negativity")
        ax.plot(x, y, color=colors[n], label=f"N={n}")
    ax.set_ylabel("negativity")


def _draw_coherence(ax, data: SweepData, column: str) -> None:
    colors = _n_color(data.n_list)
    for n in data.n_list:
        x, y = data.series(n, _x_column(data), column)
        ax.plot(x, y, color=colors[n], label=f"N={n}")
    ax.set_ylabel(COHERENCE_LABELS.get(column, column))


_DRAWERS = {
    "prob-curves": _draw_prob_curves,
    "prob-vs-p": _draw_prob_vs_p,
    "negativity": _draw_negativity,
}


def render_figure(spec: FigureSpec) -> list[Path]:
    """Draw every panel and write one image per requested format."""
    rows, cols = spec.layout
    size = spec.size if spec.size != (0.0, 0.0) else (4.2 * cols, 3.2 * rows)
    fig, axes = plt.subplots(rows, cols, figsize=size, squeeze=False)
    try:
        flat = axes.ravel()
        for ax in flat[len(spec.panels):]:
            ax.set_visible(False)
        for ax, panel in zip(flat, spec.panels):
            data = load_sweep(panel.csv_path)
            if panel.kind == "coherence":
                if not panel.y_column:
                    raise ValueError(f"coherence panel for {panel.csv_path} "
                                     "needs a y_column")
                _draw_coherence(ax, data, panel.y_column)
            elif panel.kind in _DRAWERS:
                _DRAWERS[panel.kind](ax, data)
            else:
                raise ValueError(f"unknown panel kind {panel.kind!r}")
            ax.set_xlabel(panel.x_label or X_LABELS.get(data.sweep_variable, "x"))
            if panel.y_label:
                ax.set_ylabel(panel.y_label)
            if panel.title:
                ax.set_title(panel.title)
            ax.legend(fontsize=8)
        fig.tight_layout()
        written = []
        for fmt in spec.formats:
            target = spec.output.with_suffix(f".{fmt}")
            fig.savefig(target, metadata={"Date": None} if fmt == "svg" else None)
            written.append(target)
        return written
    finally:
        plt.close(fig)


def probability_figure(initial_csv: Path | None, time_csvs: list[Path],
                       output: Path) -> list[Path]:
    """Probability panels: Pr(0) vs p, then the three curves vs time per CSV."""
    panels = []
    if initial_csv is not None:
        panels.append(PanelSpec(Path(initial_csv), "prob-vs-p", title="before interaction"))
    for path in time_csvs:
        data = load_sweep(path)
        n_text = ",".join(str(n) for n in data.n_list)
        panels.append(PanelSpec(Path(path), "prob-curves", title=f"N={n_text}"))
    spec = FigureSpec(tuple(panels), (1, len(panels)), Path(output))
    return render_figure(spec)


def negativity_figure(csvs: list[Path], output: Path) -> list[Path]:
    """Overlaid negativity curves, one panel per CSV (e.g. per c0 choice)."""
    panels = []
    for path in csvs:
        data = load_sweep(path)
        c0 = data.params.get("c0", "")
        panels.append(PanelSpec(Path(path), "negativity",
                                title=f"c0={float(c0):.4f}" if c0 else ""))
    spec = FigureSpec(tuple(panels), (1, len(panels)), Path(output))
    return render_figure(spec)


def coherence_figure(csvs: list[Path], output: Path) -> list[Path]:
    """Coherence-magnitude grid: one row per entry, one column per CSV."""
    panels = []
    for column in ("abs_10", "abs_1m1", "abs_0m1"):
        for path in csvs:
            panels.append(PanelSpec(Path(path), "coherence", y_column=column))
    spec = FigureSpec(tuple(panels), (3, len(csvs)), Path(output))
    return render_figure(spec)
