"""Rational chain complexes of the framed quotient complexes.

Chain groups are spanned by canonical orbit classes of simplices, one basis
vector per class that survives the symmetry quotient: orientation-preserving
classes for trivial coefficients, untwisted classes for the determinant
twist.  Boundary matrices have integer entries and all ranks are computed by
exact fraction-free elimination, so the reported Betti numbers are exact
dimensions over the rationals.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .classify import PRESERVING, UNTWISTED, orientation, twist
from .fp import FpMat, check_modulus, det
from .orbits import (
    CanonicalClass,
    OrbitLabel,
    canon_ta2_coeffs,
    classify_standard,
    resolve_add,
    resolve_std,
    witness_for,
)
from .symmetry import tk_apply_columns

FAMILIES = ("frames", "augmented")
TWISTS = ("trivial", "det")

# hard ceiling on raw tuples swept per degree during basis enumeration
ENUM_GUARD = 10**7


@dataclass(frozen=True)
class ChainComplexQ:
    """Quotient chain complex with a fixed ordered basis in each degree.

    bases[k] lists the canonical classes spanning degree k: standard
    anchored classes in ascending coefficient order, then the generic
    standard class if it survives, then additive classes the same way.
    boundaries[k] is the sparse matrix of the degree-k differential,
    keyed by (row, column) into bases[k-1] and bases[k]; boundaries[0]
    is empty.  augmented marks the presence of the degree -1 term used
    for reduced homology (trivial coefficients only; the determinant
    twist admits no augmentation).
    """

    p: int
    n: int
    family: str
    twist: str
    bases: tuple
    boundaries: tuple
    augmented: bool


@dataclass(frozen=True)
class BettiReport:
    """Exact rational Betti numbers of one quotient complex.

    betti maps degree to the reduced dimension (plain dimension when the
    complex carries the determinant twist).  elapsed is wall time in
    seconds and is deliberately left out of the JSON form.
    """

    p: int
    n: int
    family: str
    twist: str
    betti: dict
    basis_sizes: list
    elapsed: float

    def to_json(self) -> str:
        obj = {
            "p": self.p,
            "n": self.n,
            "family": self.family,
            "twist": self.twist,
            "basis_sizes": list(self.basis_sizes),
            "betti": {str(k): self.betti[k] for k in sorted(self.betti)},
        }
        return json.dumps(obj, separators=(",", ":"))


def standard_faces(
    a: tuple, k: int, n: int, p: int
) -> list[tuple[int, OrbitLabel]]:
    """Faces of a standard anchored simplex as (face index, label) pairs.

    Deleting column i keeps the anchoring vector inside the span exactly
    when a[i] == 0; otherwise the face forgets its anchor and is generic.
    """
    if k < 1:
        raise ValueError("vertices have no faces")
    out = []
    for i in range(k + 1):
        if a[i] % p == 0:
            rest = a[:i] + a[i + 1 :]
            out.append((i, OrbitLabel("StdAnchored", rest, k - 1, n, p)))
        else:
            out.append((i, OrbitLabel("StdGeneric", (), k - 1, n, p)))
    return out


def additive_faces(
    a: tuple, k: int, n: int, p: int
) -> list[tuple[int, OrbitLabel]]:
    """Faces of an additive simplex as (face index, label) pairs.

    The three head faces are standard: dropping one head column leaves a
    frame, and rewriting the anchoring sum through v0+v1+v2 = 0 gives the
    face coefficients by substitution.  Tail faces stay additive when the
    dropped coefficient vanishes and are generic otherwise.
    """
    if k < 2:
        raise ValueError("additive simplices start in degree 2")
    out = []
    if p == 3:
        b = a
        heads = [
            b,
            (-b[0], b[1] - b[0]) + b[2:],
            (-b[1], b[0] - b[1]) + b[2:],
        ]
        for i, t in enumerate(heads):
            coeffs = tuple(v % 3 for v in t)
            out.append((i, OrbitLabel("StdAnchored", coeffs, k - 1, n, 3)))
        for i in range(3, k + 1):
            # column i carries coefficient b_i = b[i-1]
            if b[i - 1] % 3 == 0:
                rest = b[: i - 1] + b[i:]
                out.append((i, OrbitLabel("AddAnchored3", rest, k - 1, n, 3)))
            else:
                out.append((i, OrbitLabel("AddGeneric", (), k - 1, n, 3)))
        return out
    heads = [
        (a[1] - a[0], a[2] - a[0]) + a[3:],
        (a[0] - a[1], a[2] - a[1]) + a[3:],
        (a[0] - a[2], a[1] - a[2]) + a[3:],
    ]
    for i, t in enumerate(heads):
        coeffs = tuple(v % p for v in t)
        out.append((i, OrbitLabel("StdAnchored", coeffs, k - 1, n, p)))
    for i in range(3, k + 1):
        if a[i] % p == 0:
            rest = a[:i] + a[i + 1 :]
            out.append((i, OrbitLabel("AddAnchored", rest, k - 1, n, p)))
        else:
            out.append((i, OrbitLabel("AddGeneric", (), k - 1, n, p)))
    return out


def _standard_anchored(p: int, n: int, k: int) -> list[OrbitLabel]:
    """All standard anchored classes in degree k, canonical representatives.

    Candidate tuples are ascending sign-class minima, which every canonical
    form is, so sweeping them and deduplicating covers every class.
    """
    top = p // 2
    if (top + 1) ** (k + 1) > ENUM_GUARD:
        raise ValueError("basis enumeration out of range")
    seen = {}
    for cand in combinations_with_replacement(range(top + 1), k + 1):
        if not any(cand):
            continue
        canon = resolve_std(cand, p)[0]
        if canon not in seen:
            seen[canon] = OrbitLabel("StdAnchored", canon, k, n, p)
    return [seen[c] for c in sorted(seen)]


def _additive_anchored(p: int, n: int, k: int) -> list[OrbitLabel]:
    """All additive anchored classes in degree k, canonical representatives."""
    seen = {}
    if p == 3:
        if 3**k > ENUM_GUARD:
            raise ValueError("basis enumeration out of range")
        for cand in product(range(3), repeat=k):
            if not any(cand):
                continue
            canon = canon_ta2_coeffs(cand)
            if canon not in seen:
                seen[canon] = OrbitLabel("AddAnchored3", canon, k, n, 3)
        return [seen[c] for c in sorted(seen)]
    top = p // 2
    heads = [
        (c0, c1, c2)
        for c0 in range(p)
        for c1 in range(c0, p)
        for c2 in range(c1, p)
        if (c0 + c1 + c2) % p == 0
    ]
    if len(heads) * (top + 1) ** (k - 2) > ENUM_GUARD:
        raise ValueError("basis enumeration out of range")
    for head in heads:
        for tail in combinations_with_replacement(range(top + 1), k - 2):
            cand = head + tail
            if not any(cand):
                continue
            canon = resolve_add(cand, p)[0]
            if canon not in seen:
                seen[canon] = OrbitLabel("AddAnchored", canon, k, n, p)
    return [seen[c] for c in sorted(seen)]


def _degree_basis(
    p: int, n: int, k: int, family: str, tw: str
) -> list[CanonicalClass]:
    labels = []
    if k <= n - 1:
        # below the top standard degree every standard class is twisted,
        # so the det-twist complex is empty there by construction
        if not (tw == "det" and k < n - 1):
            labels.extend(_standard_anchored(p, n, k))
        if k <= n - 2:
            labels.append(OrbitLabel("StdGeneric", (), k, n, p))
    if family == "augmented" and 2 <= k <= n and not (tw == "det" and k < n):
        labels.extend(_additive_anchored(p, n, k))
        if k <= n - 1:
            labels.append(OrbitLabel("AddGeneric", (), k, n, p))
    out = []
    for lab in labels:
        if tw == "trivial":
            keep = orientation(lab) == PRESERVING
        else:
            keep = twist(lab, n) == UNTWISTED
        if keep:
            out.append(
                CanonicalClass(lab, witness_for(lab) if tw == "det" else None)
            )
    return out


def _face_matrix(m: FpMat, i: int) -> FpMat:
    cols = tuple(c for j, c in enumerate(m.cols) if j != i)
    return FpMat(cols, m.nrows, m.p)


def det_sign_resolve(face_witness: FpMat, canonical: CanonicalClass) -> int:
    """Coefficient of the canonical basis vector in a det-twisted face.

    Resolves the face matrix onto the canonical witness: finds x with
    face label = lam * (canonical label . x), forms the connecting matrix
    A = canonical_witness . x . face_witness^-1, checks that A fixes the
    line of e1 with determinant +-1, and returns sign(x) * det(A) read as
    an integer sign.  Well defined because the class is untwisted.
    """
    p = face_witness.p
    if p == 2:
        raise ValueError("determinant signs collapse over F_2")
    label = canonical.label
    if label.kind != "StdAnchored":
        raise ValueError("resolution targets are standard anchored classes")
    face_label = classify_standard(face_witness)
    canon, _, xstar, _ = resolve_std(face_label.coeffs, p)
    if canon != label.coeffs:
        raise ValueError("face witness lies in a different class")
    x = xstar.inverse()
    w = canonical.witness
    if w is None:
        w = witness_for(label)
    a_mat = tk_apply_columns(w, x).matmul(face_witness.inverse())
    col0 = a_mat.column(0).entries
    if col0[0] == 0 or any(col0[1:]):
        raise ValueError("connecting matrix does not fix the anchor line")
    d = det(a_mat).value
    if d not in (1, p - 1):
        raise ValueError("connecting matrix is not unimodular")
    return x.sign() * (1 if d == 1 else -1)


def _assemble_boundary(
    bases: list, deg: int, n: int, p: int, tw: str
) -> dict[tuple[int, int], int]:
    rows = {
        (cc.label.kind, cc.label.coeffs): r
        for r, cc in enumerate(bases[deg - 1])
    }
    entries: dict[tuple[int, int], int] = {}
    for j, cc in enumerate(bases[deg]):
        lab = cc.label
        if lab.kind == "StdAnchored":
            faces = standard_faces(lab.coeffs, deg, n, p)
        elif lab.kind in ("AddAnchored", "AddAnchored3"):
            faces = additive_faces(lab.coeffs, deg, n, p)
        else:
            continue
        for i, f in faces:
            if f.kind == "StdGeneric":
                key = ("StdGeneric", ())
                if key not in rows:
                    continue
                # the only surviving generic target is the vertex class,
                # whose resolving permutation is trivial
                factor = 1
            elif f.kind == "AddGeneric":
                continue
            else:
                if f.kind == "StdAnchored":
                    canon, parity, _, _ = resolve_std(f.coeffs, p)
                elif f.kind == "AddAnchored":
                    canon, parity, _, _ = resolve_add(f.coeffs, p)
                else:
                    canon, parity = canon_ta2_coeffs(f.coeffs), 0
                key = (f.kind, canon)
                if key not in rows:
                    continue
                if tw == "trivial":
                    assert parity != 0
                    factor = parity
                else:
                    factor = det_sign_resolve(
                        _face_matrix(cc.witness, i), bases[deg - 1][rows[key]]
                    )
            r = rows[key]
            val = entries.get((r, j), 0) + (-1) ** i * factor
            if val:
                entries[(r, j)] = val
            else:
                entries.pop((r, j), None)
    return entries


def build_complex(p: int, n: int, family: str, twist: str) -> ChainComplexQ:
    """Assemble the quotient chain complex for one family and twist.

    The frames family tops out in degree n-1; the augmented family adds
    the additive simplices and tops out in degree n.  For the determinant
    twist only the top two degrees can be nonzero, so lower degrees are
    left empty.
    """
    check_modulus(p)
    if n < 2:
        raise ValueError("rank must be at least 2")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if twist not in TWISTS:
        raise ValueError(f"unknown twist {twist!r}")
    top = n - 1 if family == "frames" else n
    bases = tuple(
        _degree_basis(p, n, k, family, twist) for k in range(top + 1)
    )
    boundaries = [{}]
    for k in range(1, top + 1):
        boundaries.append(_assemble_boundary(bases, k, n, p, twist))
    return ChainComplexQ(
        p, n, family, twist, bases, tuple(boundaries), twist == "trivial"
    )


def _int_rank(m: list[list[int]]) -> int:
    """Rank over Q by one-step fraction-free (Bareiss) elimination."""
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivval = m[rank][col]
        for r in range(rank + 1, nrows):
            fac = m[r][col]
            row = m[r]
            lead = m[rank]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * pivval - fac * lead[c]) // prev
            row[col] = 0
        prev = pivval
        rank += 1
        if rank == nrows:
            break
    return rank


def _sparse_rank(
    entries: dict[tuple[int, int], int], nrows: int, ncols: int
) -> int:
    if not entries or not nrows or not ncols:
        return 0
    dense = [[0] * ncols for _ in range(nrows)]
    for (r, c), v in entries.items():
        dense[r][c] = v
    return _int_rank(dense)


def betti(c: ChainComplexQ) -> BettiReport:
    """Exact Betti numbers; reduced when the complex is augmented."""
    t0 = time.perf_counter()
    sizes = [len(b) for b in c.bases]
    top = len(c.bases) - 1
    ranks = [0] * (top + 2)
    ranks[0] = 1 if (c.augmented and sizes[0]) else 0
    for k in range(1, top + 1):
        ranks[k] = _sparse_rank(c.boundaries[k], sizes[k - 1], sizes[k])
    nums = {}
    for k in range(top + 1):
        v = sizes[k] - ranks[k] - ranks[k + 1]
        assert v >= 0, "rank bookkeeping violated exactness bounds"
        nums[k] = v
    elapsed = time.perf_counter() - t0
    return BettiReport(
        c.p, c.n, c.family, c.twist, nums, sizes, elapsed
    )


def coker_rank_top(c: ChainComplexQ) -> int:
    """Cokernel dimension of the top boundary onto its standard targets.

    Restricts the degree-n differential of the augmented complex to the
    rows spanned by standard classes in degree n-1 and returns the
    codimension of its image.
    """
    if c.family != "augmented":
        raise ValueError("cokernel is defined for the augmented family")
    top = c.n
    std_rows = [
        r for r, cc in enumerate(c.bases[top - 1]) if cc.label.is_standard
    ]
    pos = {r: i for i, r in enumerate(std_rows)}
    sub = {}
    for (r, j), v in c.boundaries[top].items():
        if r in pos:
            sub[(pos[r], j)] = v
    return len(std_rows) - _sparse_rank(sub, len(std_rows), len(c.bases[top]))
