"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or guard error.
All output is deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .chains import FAMILIES, TWISTS, betti, build_complex
from .checks import SUITES, run_suite
from .steinberg import (
    coinv_det,
    coinv_trivial,
    load_reference_table,
    table_csv,
    table_json,
    table_rows,
    table_text,
    top_cohomology,
)
from .tits import build_poset, order_complex_betti

TABLE_PMAX_CAP = 100

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

_FORMATTERS = {"csv": table_csv, "json": table_json, "text": table_text}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stcx",
        description="Exact homology of quotient frame complexes over F_p "
        "and the coinvariant dimensions they assemble.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="prime-by-prime dimension table")
    t.add_argument("--pmax", type=int, required=True)
    t.add_argument("--format", choices=sorted(_FORMATTERS), default="csv")
    t.add_argument("--out")

    c = sub.add_parser("coinv", help="coinvariant dimensions at one (p, n)")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--twist", choices=TWISTS)

    h = sub.add_parser("homology", help="reduced Betti numbers of one complex")
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--family", choices=FAMILIES, required=True)
    h.add_argument("--twist", choices=TWISTS, default="trivial")

    ti = sub.add_parser("tits", help="order-complex Betti numbers of the ladder")
    ti.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--threads", type=int)
    return parser


def _cmd_table(args: argparse.Namespace) -> int:
    if not 2 <= args.pmax <= TABLE_PMAX_CAP:
        raise ValueError(f"pmax must lie in 2..{TABLE_PMAX_CAP}")
    rows = table_rows(args.pmax)
    blob = _FORMATTERS[args.format](rows)
    if not blob.endswith("\n"):
        blob += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(blob)
    else:
        sys.stdout.write(blob)
    reference = load_reference_table()
    bad = [
        (p, (tr, dt, h1), reference[p])
        for p, tr, dt, h1 in rows
        if p in reference and (tr, dt, h1) != reference[p]
    ]
    for p, got, want in bad:
        print(f"mismatch at p={p}: computed {got}, reference {want}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def _cmd_coinv(args: argparse.Namespace) -> int:
    if args.twist is not None:
        fn = coinv_trivial if args.twist == "trivial" else coinv_det
        dim = fn(args.p, args.n)
        payload: dict = {"p": args.p, "n": args.n, "twist": args.twist, "dim": dim}
        positive = dim > 0
    else:
        r = top_cohomology(args.p, args.n)
        payload = {
            "p": r.p,
            "n": r.n,
            "dim_trivial": r.dim_trivial,
            "dim_det": r.dim_det,
            "dim_top_cohomology": r.dim_top_cohomology,
            "method": r.method,
        }
        positive = r.dim_top_cohomology > 0
    if positive:
        payload["flag"] = "nonvanishing"
    print(json.dumps(payload, separators=(",", ":")))
    return EXIT_OK


def _cmd_homology(args: argparse.Namespace) -> int:
    report = betti(build_complex(args.p, args.n, args.family, args.twist))
    print(report.to_json())
    return EXIT_OK


def _cmd_tits(args: argparse.Namespace) -> int:
    print(order_complex_betti(build_poset(args.n)).to_json())
    return EXIT_OK


def _threads_from(args: argparse.Namespace) -> int | None:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("STCX_THREADS")
    return int(env) if env else None


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, _threads_from(args))
    failed = 0
    for r in results:
        if r.passed:
            print(f"PASS {r.name}")
        else:
            failed += 1
            print(f"FAIL {r.name}: {r.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_MISMATCH if failed else EXIT_OK


def report_schemas() -> dict:
    """The JSON schemas shipped for the CLI report formats."""
    blob = resources.files("stcx").joinpath("data/report_schemas.json").read_text()
    return json.loads(blob)


_HANDLERS = {
    "table": _cmd_table,
    "coinv": _cmd_coinv,
    "homology": _cmd_homology,
    "tits": _cmd_tits,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
