"""Two-rail ladder poset of line-flag classes and its order complex.

Modding the building of partial frames by the signed parabolic leaves two
classes per dimension, a U rail and a V rail, with V feeding into U one
level up but never the reverse.  The ladder depends only on the rank, so
it is built from n alone; its order complex is two points at n = 2 and is
acyclic from n = 3 on.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .chains import BettiReport, _sparse_rank

Element = tuple[str, int]


@dataclass(frozen=True)
class QuotientTitsPoset:
    """Ladder on nodes (rail, level), rail in {U, V}, level in 1..n-1."""

    n: int
    elements: tuple[Element, ...]
    order: frozenset[tuple[Element, Element]]

    def leq(self, a: Element, b: Element) -> bool:
        return (a, b) in self.order

    def covering_pairs(self) -> list[tuple[Element, Element]]:
        """Pairs a < b admitting no intermediate element."""
        strict = [(a, b) for (a, b) in self.order if a != b]
        out = [
            (a, b)
            for (a, b) in strict
            if not any(
                (a, z) in self.order and (z, b) in self.order
                for z in self.elements
                if z not in (a, b)
            )
        ]
        return sorted(out, key=lambda ab: (ab[0][1], ab[0][0], ab[1][1], ab[1][0]))


def build_poset(n: int) -> QuotientTitsPoset:
    """Ladder poset for rank n; two nodes per level 1..n-1.

    Covers: U_k < U_{k+1}, V_k < V_{k+1}, V_k < U_{k+1}.  U never climbs
    onto the V rail.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    elements = tuple(
        (rail, k) for k in range(1, n) for rail in ("U", "V")
    )
    covers: set[tuple[Element, Element]] = set()
    for k in range(1, n - 1):
        covers.add((("U", k), ("U", k + 1)))
        covers.add((("V", k), ("V", k + 1)))
        covers.add((("V", k), ("U", k + 1)))
    order = {(e, e) for e in elements} | covers
    changed = True
    while changed:
        changed = False
        for a, b in list(order):
            for b2, c in list(order):
                if b2 == b and (a, c) not in order:
                    order.add((a, c))
                    changed = True
    return QuotientTitsPoset(n, elements, frozenset(order))


def order_complex_betti(poset: QuotientTitsPoset) -> BettiReport:
    """Reduced rational Betti numbers of the chains-of-the-poset complex.

    The ladder carries no modulus, so the report uses p = 0.
    """
    t0 = time.perf_counter()
    idx = {e: i for i, e in enumerate(poset.elements)}
    above = {
        e: [f for f in poset.elements if f != e and poset.leq(e, f)]
        for e in poset.elements
    }
    levels: list[list[tuple[Element, ...]]] = []
    current = [(e,) for e in poset.elements]
    while current:
        levels.append(current)
        current = [ch + (f,) for ch in current for f in above[ch[-1]]]
    sizes = [len(lv) for lv in levels]

    ranks = [0] * (len(levels) + 1)
    ranks[0] = 1 if sizes[0] else 0
    for d in range(1, len(levels)):
        rows = {ch: i for i, ch in enumerate(levels[d - 1])}
        entries: dict[tuple[int, int], int] = {}
        for col, ch in enumerate(levels[d]):
            for i in range(len(ch)):
                face = ch[:i] + ch[i + 1 :]
                entries[(rows[face], col)] = (-1) ** i
        ranks[d] = _sparse_rank(entries, sizes[d - 1], sizes[d])

    betti = {d: sizes[d] - ranks[d] - ranks[d + 1] for d in range(len(levels))}
    assert all(v >= 0 for v in betti.values())
    elapsed = time.perf_counter() - t0
    return BettiReport(
        p=0,
        n=poset.n,
        family="tits",
        twist="trivial",
        betti=betti,
        basis_sizes=sizes,
        elapsed=elapsed,
    )
