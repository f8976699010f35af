"""Standalone rendering entry point: figure id, input CSV, output image."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FIGURE_IDS, FigureSpec, MissingColumnError, UnknownFigureError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="plotgen-render",
        description="Render one figure from a zpcqkd CSV artifact.",
    )
    parser.add_argument("figure", choices=FIGURE_IDS)
    parser.add_argument("input_csv", type=Path)
    parser.add_argument("output", type=Path)
    parser.add_argument("--linear-rate-axis", action="store_true",
                        help="linear instead of logarithmic K axis on rate plots")
    args = parser.parse_args(argv)
    spec = FigureSpec(
        figure=args.figure,
        input_csv=args.input_csv,
        output=args.output,
        log_rate_axis=not args.linear_rate_axis,
    )
    try:
        render(spec)
    except (MissingColumnError, UnknownFigureError, OSError) as exc:
        print(f"plotgen: {exc}", file=sys.stderr)
        return 1
    return 0


def console_main() -> None:
    raise SystemExit(main())
