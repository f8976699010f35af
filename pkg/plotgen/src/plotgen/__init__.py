"""Figure rendering for zpcqkd CSV artifacts; read-only over the data."""

from .render import (
    FIGURE_IDS,
    FigureSpec,
    MissingColumnError,
    UnknownFigureError,
    build_figure,
    read_table,
    render,
)

__all__ = [
    "FIGURE_IDS",
    "FigureSpec",
    "MissingColumnError",
    "UnknownFigureError",
    "build_figure",
    "read_table",
    "render",
]
