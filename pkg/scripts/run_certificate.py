#!/usr/bin/env python3
"""Run the non-vanishing certificate over a small (N, lambda) sweep and
write one JSON report per configuration."""

import argparse
import json
import pathlib
from fractions import Fraction

from flagsheaf.pipeline import OrbitParams, certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--lam", nargs="+", default=["1", "3/2"])
    ap.add_argument("--d-grid", default="0,1/2,1,2,5")
    ap.add_argument("--outdir", default="certificates")
    args = ap.parse_args()

    grid = tuple(Fraction(d) for d in args.d_grid.split(","))
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for n in args.n:
        for lam_text in args.lam:
            lam = Fraction(lam_text)
            report = certificate(OrbitParams(n, lam), grid)
            name = f"certificate_n{n}_lam{lam.numerator}_{lam.denominator}.json"
            path = outdir / name
            path.write_text(
                json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n"
            )
            print(f"{path}  verdict={report.verdict}")


if __name__ == "__main__":
    main()
