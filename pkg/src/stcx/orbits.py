"""Orbit labels for simplices of the quotient frame complexes.

A k-simplex is presented by a frame matrix.  Standard simplices are frames
of k+1 independent columns in F_p^n (full frames must have determinant
+-1); additive simplices carry an extra head column v0 = -v1-v2.  The
stabilizer of the line through e1 acts on the left, signed column
permutations act on the right, and an orbit is named by how e1 sits
relative to the frame:

  StdGeneric   D1   e1 outside the column span
  StdAnchored  D2   e1 = sum a_i v_i, label a up to scale and signed perm
  AddGeneric   DA1  additive frame, e1 outside span(v1..vk)
  AddAnchored  DA2  label in the balanced gauge a0+a1+a2 = 0 (p != 3)
  AddAnchored3 TA2  p = 3 only, label b with e1 = sum_{i>=1} b_i v_i

Canonical forms are lexicographic minima over the label orbit; resolvers
additionally return a group element realizing the minimum together with
its permutation parity, which is what boundary matrices need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .fp import FpMat, FpVec, check_modulus, det, express_e1, rank
from .symmetry import GkElement, TkElement, enumerate_gk, gk_apply, tk_apply

KINDS = ("StdGeneric", "StdAnchored", "AddGeneric", "AddAnchored", "AddAnchored3")

_PREFIX = {
    "StdGeneric": "D1",
    "StdAnchored": "D2",
    "AddGeneric": "DA1",
    "AddAnchored": "DA2",
    "AddAnchored3": "TA2",
}
_KIND_OF = {v: k for k, v in _PREFIX.items()}

_LABEL_RE = re.compile(
    r"^(D1|D2|DA1|DA2|TA2)\[p=(\d+),n=(\d+)(?:,k=(\d+))?\](?:\(([\d,]*)\))?$"
)


@dataclass(frozen=True)
class OrbitLabel:
    kind: str
    coeffs: tuple[int, ...]
    k: int
    n: int
    p: int

    def __post_init__(self) -> None:
        check_modulus(self.p)
        if self.n < 2:
            raise ValueError("ambient rank must be at least 2")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "coeffs", tuple(v % self.p for v in self.coeffs))
        kind, k, n = self.kind, self.k, self.n
        if kind == "StdGeneric":
            if self.coeffs or not 0 <= k <= n - 2:
                raise ValueError(f"bad generic label k={k}, n={n}")
        elif kind == "StdAnchored":
            if len(self.coeffs) != k + 1 or not 0 <= k <= n - 1:
                raise ValueError(f"bad anchored label k={k}, n={n}")
            if not any(self.coeffs):
                raise ValueError("anchored label cannot be zero")
        elif kind == "AddGeneric":
            if self.coeffs or not 2 <= k <= n - 1:
                raise ValueError(f"bad additive generic label k={k}, n={n}")
        elif kind == "AddAnchored":
            if self.p == 3:
                raise ValueError("balanced gauge unavailable over F_3")
            if len(self.coeffs) != k + 1 or not 2 <= k <= n:
                raise ValueError(f"bad additive anchored label k={k}, n={n}")
            if sum(self.coeffs[:3]) % self.p != 0:
                raise ValueError("head coefficients must sum to zero")
            if not any(self.coeffs):
                raise ValueError("anchored label cannot be zero")
        else:  # AddAnchored3
            if self.p != 3:
                raise ValueError("direct additive labels are for p = 3 only")
            if len(self.coeffs) != k or not 2 <= k <= n:
                raise ValueError(f"bad additive label k={k}, n={n}")
            if not any(self.coeffs):
                raise ValueError("anchored label cannot be zero")

    @property
    def is_anchored(self) -> bool:
        return self.kind in ("StdAnchored", "AddAnchored", "AddAnchored3")

    @property
    def is_standard(self) -> bool:
        return self.kind.startswith("Std")

    def __str__(self) -> str:
        return format_label(self)


@dataclass(frozen=True)
class CanonicalClass:
    label: OrbitLabel
    witness: Optional[FpMat] = None


def format_label(label: OrbitLabel) -> str:
    prefix = _PREFIX[label.kind]
    if label.is_anchored:
        body = ",".join(str(v) for v in label.coeffs)
        return f"{prefix}[p={label.p},n={label.n}]({body})"
    return f"{prefix}[p={label.p},n={label.n},k={label.k}]"


def parse_label(text: str) -> OrbitLabel:
    m = _LABEL_RE.match(text)
    if m is None:
        raise ValueError(f"unparseable label {text!r}")
    prefix, p, n, k, coeffs = m.groups()
    kind = _KIND_OF[prefix]
    anchored = kind in ("StdAnchored", "AddAnchored", "AddAnchored3")
    if anchored:
        if coeffs is None or k is not None:
            raise ValueError(f"anchored label needs coefficients: {text!r}")
        vals = tuple(int(v) for v in coeffs.split(","))
        deg = len(vals) if kind == "AddAnchored3" else len(vals) - 1
        return OrbitLabel(kind, vals, deg, int(n), int(p))
    if coeffs is not None or k is None:
        raise ValueError(f"generic label needs an explicit degree: {text!r}")
    return OrbitLabel(kind, (), int(k), int(n), int(p))


def head_balanced(b: Sequence[int], p: int) -> tuple[int, ...]:
    """Turn coefficients on v1..vk into the gauge with a0+a1+a2 = 0.

    Solves a1-a0 = b1, a2-a0 = b2 under the gauge; needs 3 invertible.
    """
    if p == 3:
        raise ValueError("gauge change needs 3 invertible")
    inv3 = pow(3, p - 2, p)
    b1, b2 = b[0], b[1]
    a0 = (-inv3 * (b1 + b2)) % p
    a1 = (inv3 * (2 * b1 - b2)) % p
    a2 = (inv3 * (2 * b2 - b1)) % p
    return (a0, a1, a2) + tuple(v % p for v in b[2:])


def head_eliminated(a: Sequence[int], p: int) -> tuple[int, ...]:
    """Inverse gauge change: coefficients on v1..vk with v0 eliminated."""
    return ((a[1] - a[0]) % p, (a[2] - a[0]) % p) + tuple(v % p for v in a[3:])


def classify_standard(m: FpMat) -> OrbitLabel:
    """Orbit label of a standard frame; raises when m is outside the model."""
    p, n = m.p, m.nrows
    kp1 = m.ncols
    if not 1 <= kp1 <= n:
        raise ValueError("need between 1 and n columns")
    if rank(m) != kp1:
        raise ValueError("columns must be independent")
    if kp1 == n and det(m).value not in (1, p - 1):
        raise ValueError("full frame must have determinant +-1")
    out = express_e1(m)
    if out is None:
        return OrbitLabel("StdGeneric", (), kp1 - 1, n, p)
    return OrbitLabel("StdAnchored", out[0].entries, kp1 - 1, n, p)


def classify_additive(m: FpMat) -> OrbitLabel:
    """Orbit label of an additive frame (v0 = -v1-v2, v1..vk independent)."""
    p, n = m.p, m.nrows
    k = m.ncols - 1
    if not 2 <= k <= n:
        raise ValueError("additive frames need 3 to n+1 columns")
    head = [
        (m.cols[0][i] + m.cols[1][i] + m.cols[2][i]) % p for i in range(n)
    ]
    if any(head):
        raise ValueError("head columns must sum to zero")
    sub = FpMat(m.cols[1:], n, p)
    if rank(sub) != k:
        raise ValueError("columns v1..vk must be independent")
    if k == n and det(sub).value not in (1, p - 1):
        raise ValueError("full additive frame must have determinant +-1")
    out = express_e1(sub)
    if out is None:
        return OrbitLabel("AddGeneric", (), k, n, p)
    b = out[0].entries
    if p == 3:
        return OrbitLabel("AddAnchored3", b, k, n, p)
    return OrbitLabel("AddAnchored", head_balanced(b, p), k, n, p)


def _classmin(v: int, p: int) -> tuple[int, int]:
    """Smaller of v and -v as a residue, with the sign achieving it."""
    v %= p
    if v == 0:
        return 0, 1
    w = p - v
    return (v, 1) if v <= w else (w, -1)


def resolve_std(
    a: Sequence[int], p: int
) -> tuple[tuple[int, ...], int, TkElement, int]:
    """Lexicographic minimum of the label orbit of a standard anchored label.

    Returns (canonical, parity, x, lam) with canonical = lam * (a . x) and
    parity = sign(x); consumers that only need the tuple ignore the rest.
    """
    k1 = len(a)
    best = None
    for lam in range(1, p):
        scaled = [(lam * v) % p for v in a]
        mins = []
        flips = []
        for v in scaled:
            mv, s = _classmin(v, p)
            mins.append(mv)
            flips.append(s)
        order = sorted(range(k1), key=mins.__getitem__)
        cand = tuple(mins[i] for i in order)
        if best is None or cand < best[0]:
            x = TkElement(tuple(order), tuple(flips[i] for i in order))
            best = (cand, x.sign(), x, lam)
    return best


def resolve_add(
    a: Sequence[int], p: int
) -> tuple[tuple[int, ...], int, GkElement, int]:
    """Same as resolve_std for balanced additive labels; x lives in G_k."""
    k1 = len(a)
    best = None
    for lam in range(1, p):
        for eps in (1, -1):
            headv = [(eps * lam * v) % p for v in a[:3]]
            horder = sorted(range(3), key=headv.__getitem__)
            tailv = [(lam * v) % p for v in a[3:]]
            mins = []
            flips = []
            for v in tailv:
                mv, s = _classmin(v, p)
                mins.append(mv)
                flips.append(s)
            torder = sorted(range(k1 - 3), key=mins.__getitem__)
            cand = tuple(headv[i] for i in horder) + tuple(mins[i] for i in torder)
            if best is None or cand < best[0]:
                x = GkElement(
                    tuple(horder),
                    eps,
                    tuple(i + 3 for i in torder),
                    tuple(flips[i] for i in torder),
                )
                best = (cand, x.sign(), x, lam)
    return best


def ta2_label_action(b: Sequence[int], x: GkElement) -> tuple[int, ...]:
    """Label motion over F_3: rewrite e1 = sum b_i v_i in the moved frame.

    Contributions landing on the eliminated column w0 are pushed back onto
    w1 and w2 through w0 = -w1-w2.
    """
    k = len(b)
    if x.k != k:
        raise ValueError("degree mismatch")
    hinv = [0, 0, 0]
    for j, v in enumerate(x.head_perm):
        hinv[v] = j
    out = [0] * (k + 1)
    for i in (1, 2):
        out[hinv[i]] += b[i - 1] * x.head_sign
    tinv = {v: j for j, v in enumerate(x.tail_perm)}
    for i in range(3, k + 1):
        j = tinv[i]
        out[j + 3] += b[i - 1] * x.tail_signs[j]
    if out[0]:
        out[1] -= out[0]
        out[2] -= out[0]
    return tuple(v % 3 for v in out[1:])


def canon_std_coeffs(a: Sequence[int], p: int) -> tuple[int, ...]:
    return resolve_std(a, p)[0]


def canon_add_coeffs(a: Sequence[int], p: int) -> tuple[int, ...]:
    return resolve_add(a, p)[0]


def canon_ta2_coeffs(b: Sequence[int]) -> tuple[int, ...]:
    k = len(b)
    best = None
    for x in enumerate_gk(k):
        moved = ta2_label_action(b, x)
        for s in (1, 2):
            cand = tuple((s * v) % 3 for v in moved)
            if best is None or cand < best:
                best = cand
    return best


def canonicalize(label: OrbitLabel, with_witness: bool = False) -> CanonicalClass:
    if label.kind == "StdAnchored":
        coeffs = canon_std_coeffs(label.coeffs, label.p)
    elif label.kind == "AddAnchored":
        coeffs = canon_add_coeffs(label.coeffs, label.p)
    elif label.kind == "AddAnchored3":
        coeffs = canon_ta2_coeffs(label.coeffs)
    else:
        coeffs = ()
    canon = OrbitLabel(label.kind, coeffs, label.k, label.n, label.p)
    return CanonicalClass(canon, witness_for(canon) if with_witness else None)


def labels_equal(a: OrbitLabel, b: OrbitLabel) -> bool:
    if (a.kind, a.k, a.n, a.p) != (b.kind, b.k, b.n, b.p):
        return False
    if not a.is_anchored:
        return True
    return canonicalize(a).label.coeffs == canonicalize(b).label.coeffs


def _std_witness(a: Sequence[int], n: int, p: int) -> FpMat:
    """Frame v_0..v_k with e1 = sum a'_i v_i for a' = a scaled so the first
    nonzero coefficient is 1; square frames are fixed up to determinant 1."""
    k1 = len(a)
    i0 = next(i for i, v in enumerate(a) if v % p)
    lam = pow(a[i0] % p, p - 2, p)
    ap = [(lam * v) % p for v in a]
    cols: list[Optional[tuple[int, ...]]] = [None] * k1
    pool = 1
    for i in range(k1):
        if i == i0:
            continue
        cols[i] = tuple(1 if j == pool else 0 for j in range(n))
        pool += 1
    anchor = [0] * n
    anchor[0] = 1
    for i in range(k1):
        if i == i0:
            continue
        c = ap[i]
        if c:
            for j in range(n):
                anchor[j] = (anchor[j] - c * cols[i][j]) % p
    cols[i0] = tuple(anchor)
    m = FpMat(tuple(cols), n, p)
    if k1 == n and det(m).value == p - 1:
        flipped = tuple(c[:-1] + ((-c[-1]) % p,) for c in m.cols)
        m = FpMat(flipped, n, p)
    return m


def witness_for(label: OrbitLabel) -> FpMat:
    """Deterministic frame in the orbit; full frames come out with det +1."""
    p, n, k = label.p, label.n, label.k
    if label.kind == "StdGeneric":
        cols = tuple(FpVec.standard(p, n, i + 1).entries for i in range(k + 1))
        return FpMat(cols, n, p)
    if label.kind == "StdAnchored":
        return _std_witness(label.coeffs, n, p)
    if label.kind == "AddGeneric":
        tail = tuple(FpVec.standard(p, n, i).entries for i in range(1, k + 1))
        v0 = tuple((-tail[0][j] - tail[1][j]) % p for j in range(n))
        return FpMat((v0,) + tail, n, p)
    # anchored additive: build v1..vk for the eliminated coefficients
    if label.kind == "AddAnchored":
        b = head_eliminated(label.coeffs, p)
    else:
        b = label.coeffs
    sub = _std_witness(b, n, p)
    v0 = tuple((-sub.cols[0][j] - sub.cols[1][j]) % p for j in range(n))
    return FpMat((v0,) + sub.cols, n, p)
