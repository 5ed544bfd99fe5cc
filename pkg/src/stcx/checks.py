"""Named verification suites behind the CLI.

Each suite is a flat list of independent checks; a check either passes
or fails with a one-line detail.  Grids follow the acceptance ranges,
so `verify --suite all` is the full desk-scale validation run.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from typing import Callable

from .chains import _additive_anchored, _standard_anchored, betti, build_complex
from .classify import brute_orientation, brute_twist, orientation, twist
from .oracle import brute_coinvariants_n2, brute_orbit_counts_n2
from .orbits import OrbitLabel
from .steinberg import (
    coinv_det,
    coinv_trivial,
    load_reference_table,
    n2_census_formulas,
    n2_class_census,
    n2_class_totals,
    primes_upto,
    st2_formula,
    top_cohomology,
)
from .tits import build_poset, order_complex_betti

SUITES = (
    "paper-table",
    "vanishing",
    "acyclicity",
    "oracle",
    "classifiers",
    "sumset",
    "all",
)

TABLE_PMAX = 37
ORACLE_PRIMES = (2, 3, 5, 7, 11, 13)
SUMSET_PMAX = 31

Outcome = tuple[bool, str]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _check_table_row(p: int) -> Outcome:
    ref = load_reference_table()[p]
    r = top_cohomology(p, 2)
    got = (r.dim_trivial, r.dim_det, r.dim_top_cohomology)
    return got == ref, f"computed {got}, reference {ref}"


def _check_coinv(p: int, n: int, twist_name: str, relation: str, bound: int) -> Outcome:
    val = coinv_trivial(p, n) if twist_name == "trivial" else coinv_det(p, n)
    ok = val == bound if relation == "eq" else val >= bound
    return ok, f"dim {val}, expected {relation} {bound}"


def _check_frames(p: int, n: int) -> Outcome:
    rep = betti(build_complex(p, n, "frames", "trivial"))
    need = {k: 0 for k in range(n - 1)}
    if p <= 2 * n - 1:
        need[n - 1] = 0
    ok = all(rep.betti[k] == v for k, v in need.items())
    return ok, f"betti {rep.betti}"


def _check_augmented(p: int, n: int) -> Outcome:
    rep = betti(build_complex(p, n, "augmented", "trivial"))
    ok = all(rep.betti[k] == 0 for k in range(n))
    return ok, f"betti {rep.betti}"


def _check_augmented_n2(p: int) -> Outcome:
    # rank 2: degree-1 homology of the augmented quotient is one less than
    # the trivial-twist coinvariant dimension, hence zero exactly on the
    # five small primes
    h1 = betti(build_complex(p, 2, "augmented", "trivial")).betti[1]
    want = st2_formula(p) - 1
    ok = h1 == want and (h1 == 0) == (p in (2, 3, 5, 7, 13))
    return ok, f"degree-1 homology {h1}, expected {want}"


def _check_tits(n: int) -> Outcome:
    rep = order_complex_betti(build_poset(n))
    ok = rep.betti == {0: 1} if n == 2 else all(v == 0 for v in rep.betti.values())
    return ok, f"betti {rep.betti}"


def _check_oracle(p: int, twist_name: str) -> Outcome:
    brute = brute_coinvariants_n2(p, twist_name)
    pipe = coinv_trivial(p, 2) if twist_name == "trivial" else coinv_det(p, 2)
    return brute == pipe, f"brute {brute}, pipeline {pipe}"


def _check_oracle_orbits(p: int) -> Outcome:
    counts = brute_orbit_counts_n2(p)
    edge_total, face_total = n2_class_totals(p)
    want = (2, edge_total, face_total)
    return counts == want, f"orbit counts {counts}, class counts {want}"


def _check_census(p: int) -> Outcome:
    census, formulas = n2_class_census(p), n2_census_formulas(p)
    tr = build_complex(p, 2, "augmented", "trivial")
    dt = build_complex(p, 2, "augmented", "det")
    sizes = (len(tr.bases[1]), len(tr.bases[2]), len(dt.bases[1]), len(dt.bases[2]))
    ok = census == formulas and sizes == (
        census.edge_pr,
        census.face_pr,
        census.edge_utw,
        census.face_utw,
    )
    return ok, f"census {census}, formulas {formulas}, basis sizes {sizes}"


def _low_degree_labels(p: int, n: int) -> list[OrbitLabel]:
    labels: list[OrbitLabel] = []
    for k in range(0, min(3, n - 1) + 1):
        labels.extend(_standard_anchored(p, n, k))
        if k <= n - 2:
            labels.append(OrbitLabel("StdGeneric", (), k, n, p))
    for k in range(2, min(3, n) + 1):
        labels.extend(_additive_anchored(p, n, k))
        if k <= n - 1:
            labels.append(OrbitLabel("AddGeneric", (), k, n, p))
    return labels


def _check_orientation_forms(p: int, n: int) -> Outcome:
    bad = [
        str(lab)
        for lab in _low_degree_labels(p, n)
        if orientation(lab) != brute_orientation(lab, n)
    ]
    detail = f"{len(bad)} mismatches" + (f", first {bad[0]}" if bad else "")
    return not bad, detail


def _check_twist_forms(p: int, n: int) -> Outcome:
    labels = list(_standard_anchored(p, n, n - 1)) + list(_additive_anchored(p, n, n))
    bad = [str(lab) for lab in labels if twist(lab, n) != brute_twist(lab, n)]
    detail = f"{len(bad)} mismatches" + (f", first {bad[0]}" if bad else "")
    return not bad, detail


def _check_sumset(p: int) -> Outcome:
    """Distinct-triple sums of any sign-closed A cover min(p, 3|A|-8)."""
    classes = list(range(1, p // 2 + 1))
    for r in range(1, len(classes) + 1):
        for sub in combinations(classes, r):
            span = sorted({c for c in sub} | {p - c for c in sub})
            bound = min(p, 3 * len(span) - 8)
            if bound <= 0:
                continue
            sums: set[int] = set()
            hit = False
            for x, y, z in combinations(span, 3):
                sums.add((x + y + z) % p)
                if len(sums) >= bound:
                    hit = True
                    break
            if not hit:
                return False, f"classes {sub}: sumset {len(sums)} < {bound}"
    return True, "all sign-closed subsets meet the bound"


Spec = tuple[str, str, Callable[[], Outcome]]


def _suite_specs(suite: str) -> list[Spec]:
    specs: list[Spec] = []

    def add(st: str, name: str, fn: Callable[[], Outcome]) -> None:
        if suite in (st, "all"):
            specs.append((st, name, fn))

    for p in primes_upto(TABLE_PMAX):
        add("paper-table", f"table-p{p}", partial(_check_table_row, p))

    for p in (2, 3, 5, 7, 13):
        add("vanishing", f"coinv-trivial-zero-p{p}-n3",
            partial(_check_coinv, p, 3, "trivial", "eq", 0))
    for p in primes_upto(TABLE_PMAX):
        add("vanishing", f"coinv-trivial-positive-p{p}-n2",
            partial(_check_coinv, p, 2, "trivial", "ge", 1))
    for p in (11, 17, 19):
        add("vanishing", f"coinv-trivial-positive-p{p}-n3",
            partial(_check_coinv, p, 3, "trivial", "ge", 1))
    for p in primes_upto(19):
        add("vanishing", f"coinv-det-zero-p{p}-n3",
            partial(_check_coinv, p, 3, "det", "eq", 0))
    for p in (2, 3, 5, 7, 13):
        add("vanishing", f"coinv-det-zero-p{p}-n2",
            partial(_check_coinv, p, 2, "det", "eq", 0))
    for p in (2, 3, 5, 7, 11, 13):
        add("vanishing", f"coinv-det-zero-p{p}-n4",
            partial(_check_coinv, p, 4, "det", "eq", 0))

    for n in (2, 3, 4):
        for p in ORACLE_PRIMES:
            add("acyclicity", f"frames-p{p}-n{n}", partial(_check_frames, p, n))
    for n in (3, 4):
        for p in (2, 3, 5, 7, 13):
            add("acyclicity", f"augmented-p{p}-n{n}", partial(_check_augmented, p, n))
    for p in primes_upto(TABLE_PMAX):
        add("acyclicity", f"augmented-p{p}-n2", partial(_check_augmented_n2, p))
    for n in range(2, 9):
        add("acyclicity", f"tits-n{n}", partial(_check_tits, n))

    for p in ORACLE_PRIMES:
        for twist_name in ("trivial", "det"):
            add("oracle", f"oracle-p{p}-{twist_name}",
                partial(_check_oracle, p, twist_name))
        add("oracle", f"oracle-orbits-p{p}", partial(_check_oracle_orbits, p))

    for p in primes_upto(TABLE_PMAX):
        add("classifiers", f"census-p{p}", partial(_check_census, p))
    for p in (2, 3, 5, 7):
        for n in (2, 3, 4):
            add("classifiers", f"orientation-p{p}-n{n}",
                partial(_check_orientation_forms, p, n))
    for p in (3, 5, 7):
        for n in (2, 3, 4):
            add("classifiers", f"twist-p{p}-n{n}", partial(_check_twist_forms, p, n))

    for p in primes_upto(SUMSET_PMAX):
        add("sumset", f"sumset-p{p}", partial(_check_sumset, p))

    return specs


def default_threads() -> int:
    return os.cpu_count() or 1


def run_suite(suite: str, threads: int | None = None) -> list[CheckResult]:
    """Run one suite (or all); result order is deterministic."""
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    specs = _suite_specs(suite)
    workers = threads if threads else default_threads()
    if workers < 1:
        raise ValueError("thread count must be positive")

    def run_one(spec: Spec) -> CheckResult:
        st, name, fn = spec
        try:
            ok, detail = fn()
        except Exception as exc:
            ok, detail = False, f"error: {exc!r}"
        return CheckResult(st, name, ok, detail)

    if workers == 1 or len(specs) <= 1:
        return [run_one(s) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_one, specs))
