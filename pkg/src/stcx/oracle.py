"""Brute-force rank-2 cross-check.

Enumerates the full scale-the-first-axis group over F_p, lists every
vertex, determinant +-1 edge, and zero-sum triangle of the rank-2
augmented complex explicitly, and computes coinvariants by imposing the
raw relations g.s.pi = sign(pi) [det(g)] s on the free module spanned by
the simplices.  No canonical forms, no orbit classification; this is the
independent check on the chain pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import TWISTS, _int_rank
from .fp import FpMat, check_modulus

ORACLE_P_MAX = 13

Vec = tuple[int, int]
Mat2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class GroupP2:
    """All 2x2 matrices fixing the first axis line, det +-1, with signs.

    Elements are (matrix, sign) pairs.  For odd p the sign is the matrix
    determinant lifted to {1, -1}; at p = 2 the two signs cannot be told
    apart mod p, so every matrix appears with both, keeping the count at
    2p(p-1) and the determinant character honest.
    """

    p: int
    elements: tuple[tuple[FpMat, int], ...]


def _check_oracle_p(p: int) -> None:
    check_modulus(p)
    if p > ORACLE_P_MAX:
        raise ValueError(f"brute force is capped at p <= {ORACLE_P_MAX}")


def enumerate_p2(p: int) -> GroupP2:
    """Every (matrix, sign) pair: lambda e_1 column, det = sign."""
    _check_oracle_p(p)
    pairs = []
    for lam in range(1, p):
        linv = pow(lam, p - 2, p)
        for b in range(p):
            for s in (1, -1):
                mat = FpMat.from_rows(p, [[lam, b], [0, (s * linv) % p]])
                pairs.append((mat, s))
    return GroupP2(p, tuple(pairs))


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise ValueError(f"no primitive root mod {p}")


def _generators(p: int) -> list[tuple[Mat2, int]]:
    """Small generating set of the (matrix, sign) group."""
    gens: list[tuple[Mat2, int]] = [
        (((1, 1), (0, 1)), 1),
        (((1, 0), (0, p - 1)), -1),
    ]
    if p > 2:
        g = _primitive_root(p)
        gens.append((((g, 0), (0, pow(g, p - 2, p))), 1))
    return gens


def _apply(m: Mat2, v: Vec, p: int) -> Vec:
    (a, b), (c, d) = m
    return ((a * v[0] + b * v[1]) % p, (c * v[0] + d * v[1]) % p)


def _pm_rep(v: Vec, p: int) -> Vec:
    return min(v, ((-v[0]) % p, (-v[1]) % p))


def vertex_reps(p: int) -> list[Vec]:
    """Nonzero vectors of F_p^2 up to sign, lex-min representatives."""
    _check_oracle_p(p)
    return sorted(
        {_pm_rep((x, y), p) for x in range(p) for y in range(p) if x or y}
    )


def _edge_list(p: int) -> list[tuple[Vec, Vec]]:
    """Ordered pairs of +-vectors spanning with determinant +-1."""
    reps = vertex_reps(p)
    out = []
    for u in reps:
        for w in reps:
            d = (u[0] * w[1] - u[1] * w[0]) % p
            if d == 1 % p or d == p - 1:
                out.append((u, w))
    return out


def _shared_rep(t: tuple[Vec, Vec, Vec], p: int) -> tuple[Vec, Vec, Vec]:
    neg = tuple(((-a) % p, (-b) % p) for a, b in t)
    return min(t, neg)


def _triangle_list(p: int) -> list[tuple[Vec, Vec, Vec]]:
    """Zero-sum triples with independent tail, up to the global flip."""
    nonzero = [(x, y) for x in range(p) for y in range(p) if x or y]
    out = set()
    for v1 in nonzero:
        for v2 in nonzero:
            d = (v1[0] * v2[1] - v1[1] * v2[0]) % p
            if d != 1 % p and d != p - 1:
                continue
            v0 = ((-v1[0] - v2[0]) % p, (-v1[1] - v2[1]) % p)
            out.add(_shared_rep((v0, v1, v2), p))
    return sorted(out)


class _SignedUF:
    """Union-find tracking a +-1 potential per node.

    relate(x, y, s) imposes val(x) = s * val(y); a component becomes
    inconsistent (dead) once some x must equal -x.
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.sign = [1] * n
        self.dead = [False] * n

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        acc = 1
        for node in reversed(path):
            acc *= self.sign[node]
            self.parent[node] = x
            self.sign[node] = acc
        return x, acc

    def relate(self, x: int, y: int, s: int) -> None:
        rx, sx = self.find(x)
        ry, sy = self.find(y)
        if rx == ry:
            if sx != s * sy:
                self.dead[rx] = True
            return
        self.parent[rx] = ry
        self.sign[rx] = sx * s * sy
        if self.dead[rx]:
            self.dead[ry] = True


def _edge_coinvariants(p: int, twist: str):
    """Edge list, index, and the relation union-find for one twist."""
    edges = _edge_list(p)
    idx = {e: i for i, e in enumerate(edges)}
    uf = _SignedUF(len(edges))
    gens = _generators(p)
    for e in edges:
        i = idx[e]
        uf.relate(idx[(e[1], e[0])], i, -1)
        for mat, s in gens:
            chi = s if twist == "det" else 1
            img = (_pm_rep(_apply(mat, e[0], p), p), _pm_rep(_apply(mat, e[1], p), p))
            uf.relate(idx[img], i, chi)
    return edges, idx, uf


def brute_coinvariants_n2(p: int, twist: str) -> int:
    """Cokernel dimension of the top boundary into edge coinvariants.

    Edge coinvariants are spanned by the sign-consistent relation
    components; the boundary image is spanned by the boundaries of all
    raw triangles pushed into those coordinates.
    """
    _check_oracle_p(p)
    if twist not in TWISTS:
        raise ValueError(f"twist must be one of {TWISTS}")
    edges, idx, uf = _edge_coinvariants(p, twist)
    comp: dict[int, int] = {}
    for i in range(len(edges)):
        root, _ = uf.find(i)
        if not uf.dead[root] and root not in comp:
            comp[root] = len(comp)
    rows: set[tuple[int, ...]] = set()
    for t in _triangle_list(p):
        row = [0] * len(comp)
        for i in range(3):
            a, b = t[:i] + t[i + 1 :]
            e = (_pm_rep(a, p), _pm_rep(b, p))
            root, s = uf.find(idx[e])
            if uf.dead[root]:
                continue
            row[comp[root]] += (-1) ** i * s
        if any(row):
            rows.add(tuple(row))
    rank = _int_rank([list(r) for r in rows]) if rows else 0
    return len(comp) - rank


def brute_orbit_counts_n2(p: int) -> tuple[int, int, int]:
    """Raw orbit counts (vertices, edges, triangles) under the group
    together with the symmetric moves, before any sign filtering."""
    _check_oracle_p(p)
    gens = _generators(p)

    verts = vertex_reps(p)
    vidx = {v: i for i, v in enumerate(verts)}
    vuf = _SignedUF(len(verts))
    for v in verts:
        for mat, _ in gens:
            vuf.relate(vidx[_pm_rep(_apply(mat, v, p), p)], vidx[v], 1)
    n_vert = len({vuf.find(i)[0] for i in range(len(verts))})

    edges, _, euf = _edge_coinvariants(p, "trivial")
    n_edge = len({euf.find(i)[0] for i in range(len(edges))})

    tris = _triangle_list(p)
    tidx = {t: i for i, t in enumerate(tris)}
    tuf = _SignedUF(len(tris))
    for t in tris:
        i = tidx[t]
        for perm in ((1, 0, 2), (0, 2, 1)):
            img = _shared_rep((t[perm[0]], t[perm[1]], t[perm[2]]), p)
            tuf.relate(tidx[img], i, -1)
        for mat, _ in gens:
            img = _shared_rep(tuple(_apply(mat, v, p) for v in t), p)
            tuf.relate(tidx[img], i, 1)
    n_face = len({tuf.find(i)[0] for i in range(len(tris))})

    return n_vert, n_edge, n_face
