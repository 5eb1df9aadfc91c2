#!/usr/bin/env python3
"""Generate the temperature-ratio maps as CSV files.

Produces two grids for an N-node cycle:

  * bloch_map.csv  — Hadamard coin, local initial states swept over the coin
    Bloch sphere (gamma, phi); shows the cold lobes and the maximally mixed
    hot spot.
  * phase_map.csv  — the hottest-point coin state [cos pi/8, sin pi/8] swept
    over the coin phase pair (zeta, xi) at theta = pi/4; the zeta = xi
    diagonal holds T/T0 = 1 while the off-diagonal runs hot and cold.

Usage: temperature_maps.py [-N 100] [--res 101] [--outdir .]
"""

import argparse
import csv
import math
import pathlib

from qwcycle import (
    Local,
    bloch_temperature_scan,
    coin_phase_temperature_scan,
    hadamard_params,
)


def write_grid(grid, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow([grid.axis1_name, grid.axis2_name, "ratio"])
        for i, a in enumerate(grid.axis1):
            for j, b in enumerate(grid.axis2):
                w.writerow([repr(float(a)), repr(float(b)), repr(float(grid.values[i, j]))])
    print(f"wrote {path}  (T0 = {grid.reference_temperature!r})")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-N", "--nodes", type=int, default=100)
    ap.add_argument("--res", type=int, default=101, help="points per axis")
    ap.add_argument("--outdir", default=".")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    bloch = bloch_temperature_scan(
        hadamard_params(),
        args.nodes,
        gamma_axis=(0.0, math.pi, args.res),
        phi_axis=(0.0, 2 * math.pi, args.res),
    )
    write_grid(bloch, outdir / "bloch_map.csv")

    hottest = Local(0, math.cos(math.pi / 8), math.sin(math.pi / 8))
    phases = coin_phase_temperature_scan(
        math.pi / 4,
        hottest,
        args.nodes,
        zeta_axis=(-math.pi, math.pi, args.res),
        xi_axis=(-math.pi, math.pi, args.res),
    )
    write_grid(phases, outdir / "phase_map.csv")


if __name__ == "__main__":
    main()
