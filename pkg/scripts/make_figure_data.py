#!/usr/bin/env python3
"""Generate every figure dataset as CSV via the CLI.

Writes into --outdir (default ./data):

    wigner_section.csv      coherent-state Wigner sections, t in {1, 0.9, 0.8, 0.7}
    pd_surface.csv          catalysis success probability over (t, lambda)
    rate_vs_distance_ideal.csv / rate_vs_distance_imperfect.csv
    noise_vs_distance_ideal.csv / noise_vs_distance_imperfect.csv
    eta_vel_surface.csv     key rate over the detector plane at 20 km

Pass --quick for coarse grids (seconds instead of minutes).
"""

import argparse
import sys
from pathlib import Path

from zpcqkd.cli import main as cli_main


def run(args: list[str]) -> None:
    print(f"  zpcqkd {' '.join(args)}", flush=True)
    code = cli_main(args)
    if code != 0:
        sys.exit(code)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="data")
    ap.add_argument("--quick", action="store_true", help="coarse grids for a fast pass")
    ap.add_argument("--workers", default=None, help="worker processes for sweeps")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    workers = ["--workers", str(args.workers)] if args.workers else []

    rate_steps = "41" if args.quick else "161"
    noise_steps = "9" if args.quick else "33"
    surf_steps = "11" if args.quick else "31"
    pd_steps = "25" if args.quick else "60"

    run(["wigner", "--q-min", "-1", "--q-max", "3", "--q-steps", "601",
         "--output", str(outdir / "wigner_section.csv")])

    run(["pd-surface", "--t-steps", pd_steps, "--lam-steps", pd_steps,
         "--lam-max", "0.99", *workers,
         "--output", str(outdir / "pd_surface.csv")])

    for preset in ("ideal", "imperfect"):
        run(["sweep-distance", "--detector", preset, "--l-min", "0",
             "--steps", rate_steps, "--k-target", "1e-4", *workers,
             "--output", str(outdir / f"rate_vs_distance_{preset}.csv")])

    run(["max-noise", "--detector", "ideal", "--l-min", "5", "--l-max", "95",
         "--steps", noise_steps,
         "--output", str(outdir / "noise_vs_distance_ideal.csv")])
    run(["max-noise", "--detector", "imperfect", "--l-min", "2", "--l-max", "21",
         "--steps", noise_steps,
         "--output", str(outdir / "noise_vs_distance_imperfect.csv")])

    run(["surface", "--l-ab", "20", "--eta-min", "0.8", "--eta-max", "1.0",
         "--eta-steps", surf_steps, "--vel-min", "0", "--vel-max", "0.1",
         "--vel-steps", surf_steps, *workers,
         "--output", str(outdir / "eta_vel_surface.csv")])

    print(f"all datasets written to {outdir}/", flush=True)


if __name__ == "__main__":
    main()
