#!/usr/bin/env python3
"""Stalk cross-check between the two models of the central-fiber sheaf,
over every center class, with a mismatch dump on failure."""

import argparse
import json
import sys

from flagsheaf.pipeline import crosscheck_stalks
from flagsheaf.root_system import CenterClass


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ok = True
    for z in range(args.n):
        report = crosscheck_stalks(
            args.n, CenterClass(args.n, z), args.samples, seed=args.seed
        )
        print(
            f"z={z}: compared={report.compared} "
            f"excluded={report.excluded} mismatches={len(report.mismatches)}"
        )
        if report.mismatches:
            ok = False
            json.dump(report.to_json(), sys.stdout, indent=2, sort_keys=True)
            print()
    sys.exit(0 if ok else 2)


if __name__ == "__main__":
    main()
