"""Render static figures from zpcqkd CSV artifacts.

Strictly read-only over the CSV: no physics is recomputed here. Each figure
id expects the column set documented by the producing CLI subcommand and
fails naming the first missing column. Output is deterministic for identical
input: fixed style, fixed size, no timestamps.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "plotgen"  # deterministic SVG element ids

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

FIGURE_IDS = (
    "wigner-section",
    "pd-surface",
    "rate-vs-distance",
    "topt-vs-distance",
    "noise-vs-distance",
    "eta-vel-surface",
)

REQUIRED_COLUMNS = {
    "wigner-section": ("t", "q", "w"),
    "pd-surface": ("t", "lam", "p_d"),
    "rate-vs-distance": ("l_ab", "k"),
    "topt-vs-distance": ("l_ab", "t_opt"),
    "noise-vs-distance": ("l_ab", "eps_max"),
    "eta-vel-surface": ("eta", "v_el", "k"),
}

_STYLE = {
    "zpc": dict(color="#1f77b4", ls="--", lw=1.8),
    "original": dict(color="black", ls=":", lw=1.8),
    "plob": dict(color="#e377c2", ls="-", lw=2.2),
}


class MissingColumnError(ValueError):
    """The input CSV lacks a column the figure needs."""

    def __init__(self, column: str, path):
        self.column = column
        super().__init__(f"{path}: missing required column {column!r}")


class UnknownFigureError(ValueError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    """What to draw: figure id, input CSV, output image, rate-axis scale."""

    figure: str
    input_csv: Path
    output: Path
    log_rate_axis: bool = True

    def __post_init__(self) -> None:
        if self.figure not in FIGURE_IDS:
            raise UnknownFigureError(
                f"unknown figure id {self.figure!r}; expected one of {', '.join(FIGURE_IDS)}"
            )


def read_table(path: Path, required: tuple[str, ...]) -> dict[str, np.ndarray]:
    """Load a CSV into float columns, checking the required set first."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        names = reader.fieldnames or []
        for column in required:
            if column not in names:
                raise MissingColumnError(column, path)
        rows = list(reader)
    return {name: np.array([float(row[name]) for row in rows]) for name in names}


def _positive(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mask = y > 0.0
    return x[mask], y[mask]


def _grid(table, row_key: str, col_key: str, val_key: str):
    """Reshape row-major sweep columns back into a 2D grid."""
    rows = np.unique(table[row_key])
    cols = np.unique(table[col_key])
    grid = table[val_key].reshape(len(rows), len(cols))
    return rows, cols, grid


def build_figure(spec: FigureSpec, table: dict[str, np.ndarray]):
    """Assemble the matplotlib Figure for a spec; separated out for testing."""
    if spec.figure == "wigner-section":
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        seen: list[float] = []
        for t in table["t"]:
            if t not in seen:
                seen.append(float(t))
        for t in seen:
            mask = table["t"] == t
            style = dict(color="black", lw=1.6) if t == 1.0 else dict(lw=1.4)
            ax.plot(table["q"][mask], table["w"][mask], label=f"t = {t:g}", **style)
        ax.set_xlabel("q")
        ax.set_ylabel("W(q, p = 0)")
        ax.legend(frameon=False)

    elif spec.figure == "pd-surface":
        ts, lams, pd = _grid(table, "t", "lam", "p_d")
        fig = plt.figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot(projection="3d")
        lam_m, t_m = np.meshgrid(lams, ts)
        ax.plot_surface(t_m, lam_m, pd, cmap="viridis", linewidth=0)
        ax.set_xlabel("t")
        ax.set_ylabel("lambda")
        ax.set_zlabel("P_d")
        ax.set_zlim(0.0, 1.0)

    elif spec.figure == "rate-vs-distance":
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        ax.plot(*_positive(table["l_ab"], table["k"]), label="ZPC", **_STYLE["zpc"])
        if "k_original" in table:
            ax.plot(*_positive(table["l_ab"], table["k_original"]),
                    label="original", **_STYLE["original"])
        if "plob" in table:
            finite = np.isfinite(table["plob"])
            ax.plot(table["l_ab"][finite], table["plob"][finite],
                    label="PLOB", **_STYLE["plob"])
        if spec.log_rate_axis:
            ax.set_yscale("log")
        ax.set_xlabel("L_AB (km)")
        ax.set_ylabel("K (bits/pulse)")
        ax.legend(frameon=False)

    elif spec.figure == "topt-vs-distance":
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        ax.plot(table["l_ab"], table["t_opt"], **_STYLE["zpc"])
        ax.set_xlabel("L_AB (km)")
        ax.set_ylabel("optimal t")
        ax.set_ylim(0.0, 1.05)

    elif spec.figure == "noise-vs-distance":
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        alive = np.isfinite(table["eps_max"])
        ax.plot(table["l_ab"][alive], table["eps_max"][alive],
                label="ZPC", **_STYLE["zpc"])
        if "eps_max_original" in table:
            alive = np.isfinite(table["eps_max_original"])
            ax.plot(table["l_ab"][alive], table["eps_max_original"][alive],
                    label="original", **_STYLE["original"])
        ax.set_xlabel("L_AB (km)")
        ax.set_ylabel("tolerable excess noise (SNU)")
        ax.legend(frameon=False)

    else:  # eta-vel-surface
        etas, vels, k = _grid(table, "eta", "v_el", "k")
        fig = plt.figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot(projection="3d")
        vel_m, eta_m = np.meshgrid(vels, etas)
        ax.plot_surface(eta_m, vel_m, np.maximum(k, 0.0),
                        cmap="viridis", linewidth=0, label="ZPC")
        if "k_original" in table:
            _, _, k_orig = _grid(table, "eta", "v_el", "k_original")
            ax.plot_surface(eta_m, vel_m, np.maximum(k_orig, 0.0),
                            color="gray", alpha=0.55, linewidth=0, label="original")
        ax.set_xlabel("eta")
        ax.set_ylabel("v_el")
        ax.set_zlabel("K (bits/pulse)")

    return fig


def render(spec: FigureSpec) -> Path:
    """Read the CSV, draw the figure, write the image; returns the output path."""
    table = read_table(spec.input_csv, REQUIRED_COLUMNS[spec.figure])
    fig = build_figure(spec, table)
    try:
        save_kwargs = {"dpi": 150}
        if spec.output.suffix.lower() == ".svg":
            save_kwargs["metadata"] = {"Date": None}  # strip the only timestamp
        fig.savefig(spec.output, **save_kwargs)
    finally:
        plt.close(fig)
    return spec.output
