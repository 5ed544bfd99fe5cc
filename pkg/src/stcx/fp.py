"""Exact linear algebra over prime fields F_p.

All residues are machine integers in [0, p); p is restricted to primes
below 2**15 so every intermediate product fits comfortably in a word.
Matrices are immutable and column-oriented, matching how frame data is
handled elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

P_MAX = 1 << 15


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_modulus(p: int) -> None:
    if p >= P_MAX:
        raise ValueError(f"modulus {p} too large (limit {P_MAX})")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


@dataclass(frozen=True)
class FpScalar:
    value: int
    p: int

    def __post_init__(self) -> None:
        check_modulus(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _match(self, other: "FpScalar") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "FpScalar") -> "FpScalar":
        self._match(other)
        return FpScalar(self.value + other.value, self.p)

    def __sub__(self, other: "FpScalar") -> "FpScalar":
        self._match(other)
        return FpScalar(self.value - other.value, self.p)

    def __mul__(self, other: "FpScalar") -> "FpScalar":
        self._match(other)
        return FpScalar(self.value * other.value, self.p)

    def __neg__(self) -> "FpScalar":
        return FpScalar(-self.value, self.p)

    def inv(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FpScalar(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0


@dataclass(frozen=True)
class FpVec:
    entries: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        check_modulus(self.p)
        object.__setattr__(self, "entries", tuple(x % self.p for x in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    @staticmethod
    def standard(p: int, dim: int, i: int) -> "FpVec":
        return FpVec(tuple(1 if j == i else 0 for j in range(dim)), p)

    def scaled(self, c: int) -> "FpVec":
        return FpVec(tuple((c * x) % self.p for x in self.entries), self.p)

    def __add__(self, other: "FpVec") -> "FpVec":
        return FpVec(tuple(a + b for a, b in zip(self.entries, other.entries)), self.p)

    def __neg__(self) -> "FpVec":
        return self.scaled(-1)


@dataclass(frozen=True)
class FpMat:
    """Column-major matrix; `cols` may be empty (zero columns, fixed height)."""

    cols: tuple[tuple[int, ...], ...]
    nrows: int
    p: int

    def __post_init__(self) -> None:
        check_modulus(self.p)
        for c in self.cols:
            if len(c) != self.nrows:
                raise ValueError("ragged columns")
        object.__setattr__(
            self, "cols", tuple(tuple(x % self.p for x in c) for c in self.cols)
        )

    @staticmethod
    def from_columns(p: int, cols: Sequence[Iterable[int]]) -> "FpMat":
        mat = [tuple(c) for c in cols]
        if not mat:
            raise ValueError("use FpMat.empty for zero columns")
        return FpMat(tuple(mat), len(mat[0]), p)

    @staticmethod
    def from_rows(p: int, rows: Sequence[Sequence[int]]) -> "FpMat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = tuple(tuple(rows[i][j] for i in range(nrows)) for j in range(ncols))
        return FpMat(cols, nrows, p)

    @staticmethod
    def empty(p: int, nrows: int) -> "FpMat":
        return FpMat((), nrows, p)

    @staticmethod
    def identity(p: int, n: int) -> "FpMat":
        return FpMat(
            tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n)), n, p
        )

    @property
    def ncols(self) -> int:
        return len(self.cols)

    def column(self, j: int) -> FpVec:
        return FpVec(self.cols[j], self.p)

    def entry(self, i: int, j: int) -> int:
        return self.cols[j][i]

    def with_column(self, col: Iterable[int]) -> "FpMat":
        return FpMat(self.cols + (tuple(col),), self.nrows, self.p)

    def matmul(self, other: "FpMat") -> "FpMat":
        if self.p != other.p:
            raise ValueError("mixed moduli")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        p = self.p
        new_cols = []
        for oc in other.cols:
            acc = [0] * self.nrows
            for j, coeff in enumerate(oc):
                if coeff == 0:
                    continue
                sc = self.cols[j]
                for i in range(self.nrows):
                    acc[i] = (acc[i] + coeff * sc[i]) % p
            new_cols.append(tuple(acc))
        return FpMat(tuple(new_cols), self.nrows, p)

    def inverse(self) -> "FpMat":
        n = self.nrows
        if self.ncols != n:
            raise ValueError("inverse of non-square matrix")
        p = self.p
        # row-reduce [A | I]
        aug = [
            [self.entry(i, j) for j in range(n)]
            + [1 if j == i else 0 for j in range(n)]
            for i in range(n)
        ]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = pow(aug[c][c], p - 2, p)
            aug[c] = [(x * inv) % p for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[c])]
        return FpMat.from_rows(p, [row[n:] for row in aug])


def _echelon(m: FpMat) -> tuple[list[list[int]], int, int]:
    """Row echelon form of m's row matrix; returns (rows, rank, det_sign_scale).

    The third component is the running product of pivot scalings and row-swap
    signs, so for square m the determinant is recoverable.
    """
    p = m.p
    rows = [[m.entry(i, j) for j in range(m.ncols)] for i in range(m.nrows)]
    nrows, ncols = m.nrows, m.ncols
    r = 0
    detv = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            detv = -detv
        detv = (detv * rows[r][c]) % p
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return rows, r, detv % p


def det(m: FpMat) -> FpScalar:
    if m.ncols != m.nrows:
        raise ValueError("determinant of non-square matrix")
    _, r, detv = _echelon(m)
    if r < m.nrows:
        return FpScalar(0, m.p)
    return FpScalar(detv, m.p)


def rank(m: FpMat) -> int:
    if m.ncols == 0:
        return 0
    _, r, _ = _echelon(m)
    return r


def express_e1(m: FpMat) -> Optional[tuple[FpVec, FpScalar]]:
    """Solve m @ x = e1 for independent columns; None when e1 is not in the span.

    The scale is always normalized to 1; it is kept in the signature so call
    sites can stay agnostic about the normalization.
    """
    p = m.p
    k1 = m.ncols
    if k1 == 0:
        return None
    if rank(m) != k1:
        raise ValueError("columns must be independent")
    # solve the augmented system [m | e1]
    aug = [
        [m.entry(i, j) for j in range(k1)] + [1 if i == 0 else 0]
        for i in range(m.nrows)
    ]
    r = 0
    pivots = []
    for c in range(k1):
        piv = next((i for i in range(r, m.nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(m.nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m.nrows):
        if aug[i][k1]:
            return None
    coeffs = [0] * k1
    for row, c in enumerate(pivots):
        coeffs[c] = aug[row][k1]
    return FpVec(tuple(coeffs), p), FpScalar(1, p)


def complete_unimodular(m: FpMat) -> FpMat:
    """Extend independent columns to a square matrix of determinant exactly 1.

    Deterministic: appends the standard vectors missed by the column span in
    index order, then rescales the last appended column to fix the
    determinant. When no column is appended the input must already have
    determinant 1.
    """
    p = m.p
    n = m.nrows
    if m.ncols and rank(m) != m.ncols:
        raise ValueError("columns must be independent")
    if m.ncols > n:
        raise ValueError("too many columns")
    full = m
    appended = []
    for i in range(n):
        if full.ncols == n:
            break
        cand = tuple(1 if j == i else 0 for j in range(n))
        trial = full.with_column(cand)
        if rank(trial) == full.ncols + 1:
            full = trial
            appended.append(full.ncols - 1)
    if full.ncols != n:
        raise ValueError("completion failed")
    d = det(full).value
    if d == 0:
        raise ValueError("completion failed")
    if d != 1:
        if not appended:
            raise ValueError("full input matrix has determinant != 1")
        j = appended[-1]
        fix = pow(d, p - 2, p)
        cols = list(full.cols)
        cols[j] = tuple((fix * x) % p for x in cols[j])
        full = FpMat(tuple(cols), n, p)
    return full
