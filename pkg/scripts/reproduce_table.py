#!/usr/bin/env python3
"""Regenerate the prime-by-prime dimension table and diff it against the
shipped reference values.  Primes beyond the reference range are printed
as new data."""

import argparse
import sys

from stcx.steinberg import load_reference_table, table_rows, table_text


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=37, help="largest prime (default 37)")
    args = ap.parse_args()

    rows = table_rows(args.pmax)
    print(table_text(rows), end="")

    reference = load_reference_table()
    mismatches = 0
    fresh = 0
    for p, tr, dt, h1 in rows:
        if p not in reference:
            fresh += 1
            continue
        if reference[p] != (tr, dt, h1):
            mismatches += 1
            print(
                f"mismatch at p={p}: computed {(tr, dt, h1)}, reference {reference[p]}",
                file=sys.stderr,
            )
    checked = len(rows) - fresh
    verdict = "OK" if mismatches == 0 else f"{mismatches} MISMATCHES"
    print(f"\n{checked} rows checked against reference: {verdict}; {fresh} new rows")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
