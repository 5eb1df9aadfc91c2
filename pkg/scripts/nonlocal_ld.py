#!/usr/bin/env python3
"""Limiting distributions for two-node initial states, closed form vs oracle.

For each cycle size and pair offset, writes one CSV with the exact limiting
distribution of the entangled state (|0>|0> + |p>|1>)/sqrt(2) and of the
separable state (|0> + |p>)|0>/sqrt(2) under the Hadamard coin, plus the
brute-force time average for whichever of the two you ask to check.

Usage: nonlocal_ld.py [-N 60 62] [-p 20 22] [--tmax 200000] [--outdir .]
"""

import argparse
import csv
import pathlib

from qwcycle import (
    EntangledPair,
    SeparablePair,
    build_coin,
    hadamard_params,
    limiting_distribution,
    make_state,
    time_avg_distribution,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-N", "--nodes", type=int, nargs="+", default=[60, 62])
    ap.add_argument("-p", "--offsets", type=int, nargs="+", default=[20, 22])
    ap.add_argument("--tmax", type=int, default=200_000,
                    help="averaging window for the oracle column (0 skips it)")
    ap.add_argument("--outdir", default=".")
    args = ap.parse_args()

    coin = hadamard_params()
    mat = build_coin(coin)
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for n in args.nodes:
        for p in args.offsets:
            path = outdir / f"pair_ld_N{n}_p{p}.csv"
            columns = {}
            for label, spec in (("entangled", EntangledPair(p)),
                                ("separable", SeparablePair(p))):
                state = make_state(spec, n)
                columns[label] = limiting_distribution(state, coin)
                if args.tmax > 0:
                    columns[f"{label}_oracle"] = time_avg_distribution(
                        state, mat, args.tmax
                    )
            with open(path, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["v", *columns])
                for v in range(n):
                    w.writerow([v, *(repr(float(col[v])) for col in columns.values())])
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
