#!/usr/bin/env python3
"""Sweep reduced Betti numbers of the quotient complexes over a (p, n)
grid and emit one JSON report per line."""

import argparse
import sys

from stcx.chains import FAMILIES, TWISTS, betti, build_complex
from stcx.steinberg import primes_upto


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=13)
    ap.add_argument("--nmin", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--family", choices=FAMILIES, default="frames")
    ap.add_argument("--twist", choices=TWISTS, default="trivial")
    args = ap.parse_args()

    for n in range(args.nmin, args.nmax + 1):
        for p in primes_upto(args.pmax):
            report = betti(build_complex(p, n, args.family, args.twist))
            print(report.to_json())
    return 0


if __name__ == "__main__":
    sys.exit(main())
