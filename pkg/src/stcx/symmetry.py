"""Signed permutation groups acting on simplex coordinate frames.

T_k is the wreath-type group of signed permutations of positions 0..k.
G_k (k >= 2) treats positions {0,1,2} as a block: the block is permuted
and carries a single shared sign, while positions 3..k carry independent
signed permutations.  Both act on the right: applying x then y equals
applying x.compose(y).

Signs are kept as integers in {+1, -1}, never reduced mod p; the parity
of the sign vector matters even when p = 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .fp import FpMat

K_MAX = 6


def _check_perm(perm: Sequence[int], domain: Sequence[int]) -> None:
    if sorted(perm) != list(domain):
        raise ValueError(f"not a permutation of {list(domain)}: {perm}")


def _check_signs(signs: Sequence[int]) -> None:
    if any(s not in (1, -1) for s in signs):
        raise ValueError(f"signs must be +-1: {signs}")


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    order = {v: i for i, v in enumerate(sorted(perm))}
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = order[perm[j]]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class TkElement:
    """x = (pi, eps); tuple action (a . x)_i = eps_i a_{pi(i)}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_perm(self.perm, range(len(self.perm)))
        _check_signs(self.signs)
        if len(self.signs) != len(self.perm):
            raise ValueError("sign vector length mismatch")

    @property
    def k(self) -> int:
        return len(self.perm) - 1

    @staticmethod
    def identity(k: int) -> "TkElement":
        return TkElement(tuple(range(k + 1)), (1,) * (k + 1))

    def compose(self, other: "TkElement") -> "TkElement":
        if self.k != other.k:
            raise ValueError("degree mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.k + 1))
        signs = tuple(
            self.signs[other.perm[i]] * other.signs[i] for i in range(self.k + 1)
        )
        return TkElement(perm, signs)

    def inverse(self) -> "TkElement":
        inv = [0] * (self.k + 1)
        for i, v in enumerate(self.perm):
            inv[v] = i
        return TkElement(tuple(inv), tuple(self.signs[inv[j]] for j in range(self.k + 1)))

    def sign(self) -> int:
        return _perm_sign(self.perm)

    def det_factor(self) -> int:
        return self.sign() * prod(self.signs)


@dataclass(frozen=True)
class GkElement:
    """Block element (pi, eps, tau, tail_signs) for degree k >= 2.

    pi permutes {0,1,2} with the single sign eps; tau permutes {3..k} with
    per-position tail signs.  tail_perm[i-3] = tau(i).
    """

    head_perm: tuple[int, int, int]
    head_sign: int
    tail_perm: tuple[int, ...]
    tail_signs: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_perm(self.head_perm, range(3))
        _check_signs((self.head_sign,))
        k = 2 + len(self.tail_perm)
        _check_perm(self.tail_perm, range(3, k + 1))
        _check_signs(self.tail_signs)
        if len(self.tail_signs) != len(self.tail_perm):
            raise ValueError("tail sign length mismatch")

    @property
    def k(self) -> int:
        return 2 + len(self.tail_perm)

    @staticmethod
    def identity(k: int) -> "GkElement":
        if k < 2:
            raise ValueError("block group needs degree >= 2")
        return GkElement((0, 1, 2), 1, tuple(range(3, k + 1)), (1,) * (k - 2))

    def compose(self, other: "GkElement") -> "GkElement":
        if self.k != other.k:
            raise ValueError("degree mismatch")
        head = tuple(self.head_perm[other.head_perm[i]] for i in range(3))
        tail = tuple(
            self.tail_perm[other.tail_perm[i] - 3] for i in range(self.k - 2)
        )
        tsigns = tuple(
            self.tail_signs[other.tail_perm[i] - 3] * other.tail_signs[i]
            for i in range(self.k - 2)
        )
        return GkElement(head, self.head_sign * other.head_sign, tail, tsigns)

    def inverse(self) -> "GkElement":
        hinv = [0, 0, 0]
        for i, v in enumerate(self.head_perm):
            hinv[v] = i
        tinv = [0] * (self.k - 2)
        for i, v in enumerate(self.tail_perm):
            tinv[v - 3] = i + 3
        tsigns = tuple(self.tail_signs[tinv[j] - 3] for j in range(self.k - 2))
        return GkElement(tuple(hinv), self.head_sign, tuple(tinv), tsigns)

    def sign(self) -> int:
        return _perm_sign(self.head_perm) * _perm_sign(self.tail_perm)

    def det_factor(self) -> int:
        return self.sign() * prod(self.tail_signs)


def tk_apply(a: Sequence[int], x: TkElement, p: int) -> tuple[int, ...]:
    """(a . x)_i = eps_i a_{pi(i)} mod p."""
    if len(a) != x.k + 1:
        raise ValueError("length mismatch")
    return tuple((x.signs[i] * a[x.perm[i]]) % p for i in range(x.k + 1))


def gk_apply(a: Sequence[int], x: GkElement, p: int) -> tuple[int, ...]:
    """Head entries share the sign eps; tail entries move as in tk_apply."""
    if len(a) != x.k + 1:
        raise ValueError("length mismatch")
    head = tuple((x.head_sign * a[x.head_perm[i]]) % p for i in range(3))
    tail = tuple(
        (x.tail_signs[i - 3] * a[x.tail_perm[i - 3]]) % p for i in range(3, x.k + 1)
    )
    return head + tail


def tk_apply_columns(m: FpMat, x: TkElement) -> FpMat:
    """Frame action: column j of the result is eps_j * column pi(j)."""
    if m.ncols != x.k + 1:
        raise ValueError("column count mismatch")
    cols = tuple(
        tuple((x.signs[j] * v) % m.p for v in m.cols[x.perm[j]])
        for j in range(m.ncols)
    )
    return FpMat(cols, m.nrows, m.p)


def gk_apply_columns(m: FpMat, x: GkElement) -> FpMat:
    if m.ncols != x.k + 1:
        raise ValueError("column count mismatch")
    p = m.p
    head = tuple(
        tuple((x.head_sign * v) % p for v in m.cols[x.head_perm[j]]) for j in range(3)
    )
    tail = tuple(
        tuple((x.tail_signs[j - 3] * v) % p for v in m.cols[x.tail_perm[j - 3]])
        for j in range(3, m.ncols)
    )
    return FpMat(head + tail, m.nrows, p)


def enumerate_tk(k: int) -> tuple[TkElement, ...]:
    if not 0 <= k <= K_MAX:
        raise ValueError(f"degree must be in [0, {K_MAX}]")
    out = []
    for perm in itertools.permutations(range(k + 1)):
        for signs in itertools.product((1, -1), repeat=k + 1):
            out.append(TkElement(perm, signs))
    return tuple(out)


def enumerate_gk(k: int) -> tuple[GkElement, ...]:
    if not 2 <= k <= K_MAX:
        raise ValueError(f"degree must be in [2, {K_MAX}]")
    out = []
    for head in itertools.permutations(range(3)):
        for hs in (1, -1):
            for tail in itertools.permutations(range(3, k + 1)):
                for ts in itertools.product((1, -1), repeat=k - 2):
                    out.append(GkElement(head, hs, tail, ts))
    return tuple(out)


def enumerate_group(kind: str, k: int):
    if kind == "T":
        return enumerate_tk(k)
    if kind == "G":
        return enumerate_gk(k)
    raise ValueError(f"unknown group kind {kind!r}")
