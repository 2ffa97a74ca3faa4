"""Exact rational convex geometry in ambient dimensions 1 to 4.

Points are tuples of :class:`fractions.Fraction`.  Hulls are computed with the
double description method on integer-scaled coordinates, so every predicate
is exact and degenerate inputs are handled by working inside the affine hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]

MAX_DIM = 4


class DimensionError(ValueError):
    """Raised when operands live in incompatible or unsupported dimensions."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, str or Fraction")
    return Fraction(value)


def as_point(coords: Iterable) -> Point:
    return tuple(as_fraction(c) for c in coords)


def add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def scale(c, p: Sequence[Fraction]) -> Point:
    return tuple(c * a for a in p)


def dot(p: Sequence, q: Sequence):
    return sum(a * b for a, b in zip(p, q))


def cross2(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """z-component of the cross product of two plane vectors."""
    return u[0] * v[1] - u[1] * v[0]


def orient2(a, b, c) -> int:
    """Sign of the turn a -> b -> c (+1 left, -1 right, 0 collinear)."""
    d = cross2(sub(b, a), sub(c, a))
    return (d > 0) - (d < 0)


def det(rows: Sequence[Sequence]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def pivot_columns(vectors: Sequence[Sequence], column_order: Sequence[int] | None = None) -> list[int]:
    """Columns that carry the rank of ``vectors`` (row echelon pivots).

    ``column_order`` sets the elimination order, which decides which columns
    are preferred as pivots.
    """
    rows = [list(map(Fraction, v)) for v in vectors]
    if not rows:
        return []
    ncols = len(rows[0])
    order = list(column_order) if column_order is not None else list(range(ncols))
    pivots = []
    r0 = 0
    for col in order:
        piv = next((r for r in range(r0, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        for r in range(len(rows)):
            if r != r0 and rows[r][col] != 0:
                f = rows[r][col] / rows[r0][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[r0])]
        pivots.append(col)
        r0 += 1
        if r0 == len(rows):
            break
    return pivots


def solve2(a11, a12, a21, a22, b1, b2) -> tuple[Fraction, Fraction]:
    d = a11 * a22 - a12 * a21
    if d == 0:
        raise ZeroDivisionError("singular 2x2 system")
    return (Fraction(b1 * a22 - a12 * b2) / d, Fraction(a11 * b2 - b1 * a21) / d)


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Primitive integer vector with the same direction as a nonzero rational vector."""
    fr = [Fraction(c) for c in v]
    den = reduce(lcm, (c.denominator for c in fr), 1)
    ints = [int(c * den) for c in fr]
    g = reduce(gcd, (abs(c) for c in ints), 0)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(c // g for c in ints)


# ---------------------------------------------------------------------------
# double description hull on integer points


def _normalize(v: list[int]) -> tuple[int, ...]:
    g = reduce(gcd, (abs(c) for c in v), 0)
    return tuple(c // g for c in v) if g > 1 else tuple(v)


def _dd_facets(pts: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Facets of a full-dimensional integer point set as (normal, offset, zero mask).

    Each facet satisfies ``normal . p <= offset`` for every input point, with
    equality exactly on the points flagged in the bit mask.
    """
    n = len(pts)
    k = len(pts[0])
    dimc = k + 1
    rows = [tuple(-c for c in p) + (1,) for p in pts]
    order = sorted(range(n), key=lambda i: pts[i])

    basis: list[int] = []
    echelon: list[list[Fraction]] = []
    for i in order:
        vec = [Fraction(c) for c in rows[i]]
        for piv_col, erow in echelon:
            if vec[piv_col] != 0:
                f = vec[piv_col] / erow[piv_col]
                vec = [a - f * b for a, b in zip(vec, erow)]
        col = next((c for c in range(dimc) if vec[c] != 0), None)
        if col is None:
            continue
        echelon.append((col, vec))
        basis.append(i)
        if len(basis) == dimc:
            break
    if len(basis) < dimc:
        raise ValueError("point set is not full-dimensional")

    inv = _inverse([[Fraction(c) for c in rows[i]] for i in basis])
    rays: list[tuple[tuple[int, ...], int]] = []
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for j in range(dimc):
        col = [inv[r][j] for r in range(dimc)]
        den = reduce(lcm, (c.denominator for c in col), 1)
        vec = _normalize([int(c * den) for c in col])
        rays.append((vec, all_basis & ~(1 << basis[j])))

    need = dimc - 2
    in_basis = set(basis)
    for i in order:
        if i in in_basis:
            continue
        a = rows[i]
        bit = 1 << i
        pos, neg, keep = [], [], []
        for vec, z in rays:
            val = sum(x * y for x, y in zip(a, vec))
            if val > 0:
                pos.append((vec, z, val))
                keep.append((vec, z))
            elif val < 0:
                neg.append((vec, z, val))
            else:
                keep.append((vec, z | bit))
        if not neg:
            rays = keep
            continue
        zsets = [z for _, z in rays]
        for pv, pz, pval in pos:
            for nv, nz, nval in neg:
                common = pz & nz
                if common.bit_count() < need:
                    continue
                adjacent = True
                for z in zsets:
                    if z != pz and z != nz and (common & ~z) == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                new = [pval * b - nval * c for b, c in zip(nv, pv)]
                keep.append((_normalize(new), common | bit))
        rays = keep
    return [(vec[:-1], vec[-1], z) for vec, z in rays]


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _ccw(points: list[Point]) -> list[Point]:
    """Counterclockwise order of plane points in convex position (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and orient2(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class Facet:
    normal: Point
    offset: Fraction
    incident: tuple[int, ...]


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points.

    ``facets`` are relative to the affine hull when ``affine_dim < dim``; their
    normals are then only defined up to vectors orthogonal to that hull.
    Vertices of a full-dimensional planar polytope are listed counterclockwise,
    otherwise lexicographically.
    """

    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]
    affine_dim: int

    @property
    def degenerate(self) -> bool:
        return self.affine_dim < self.dim

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self.vertices)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "affine_dim": self.affine_dim,
            "vertices": [[str(c) for c in v] for v in self.vertices],
        }


@dataclass(frozen=True)
class _Hull:
    points: tuple[Point, ...]
    pivots: tuple[int, ...]
    vertex_idx: tuple[int, ...]
    facets: tuple[tuple[Point, Fraction, int], ...]  # normal, offset, incident mask over points


def _hull(points: Sequence[Point], prefer_last: bool = False) -> _Hull:
    pts = tuple(sorted(set(points)))
    dim = len(pts[0])
    base = pts[0]
    diffs = [sub(p, base) for p in pts[1:]]
    order = list(range(dim))
    if prefer_last:
        order = [dim - 1] + order[:-1]
    piv = tuple(sorted(pivot_columns(diffs, order))) if diffs else ()
    k = len(piv)
    if k == 0:
        return _Hull(pts, piv, (0,), ())
    den = reduce(lcm, (p[c].denominator for p in pts for c in piv), 1)
    proj = [tuple(int(p[c] * den) for c in piv) for p in pts]
    facets = []
    if k == 1:
        lo = min(range(len(pts)), key=lambda i: proj[i])
        hi = max(range(len(pts)), key=lambda i: proj[i])
        raw = [((-1,), -proj[lo][0], 1 << lo), ((1,), proj[hi][0], 1 << hi)]
    else:
        raw = _dd_facets(proj)
    for nrm, off, mask in raw:
        normal = [Fraction(0)] * dim
        for c, a in zip(piv, nrm):
            normal[c] = Fraction(a)
        facets.append((tuple(normal), Fraction(off, den), mask))
    vidx = []
    for i in range(len(pts)):
        bit = 1 << i
        inter = -1
        on_any = False
        for _, _, mask in facets:
            if mask & bit:
                inter &= mask
                on_any = True
        if on_any and inter == bit:
            vidx.append(i)
    return _Hull(pts, piv, tuple(vidx), tuple(facets))


def convex_hull(points: Iterable[Sequence], dim: int | None = None) -> Polytope:
    """Exact convex hull of a nonempty point set in dimension 1 to 4.

    Lower-dimensional point sets are not an error: the result carries its
    ``affine_dim`` and facets relative to the affine hull.
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise ValueError("convex hull of an empty point set")
    d = len(pts[0]) if dim is None else dim
    if not 1 <= d <= MAX_DIM:
        raise DimensionError(f"hull dimension must be between 1 and {MAX_DIM}, got {d}")
    if any(len(p) != d for p in pts):
        raise DimensionError("all points must have the ambient dimension")
    h = _hull(pts)
    verts = [h.points[i] for i in h.vertex_idx]
    if len(h.pivots) == 2 and d == 2:
        verts = _ccw(verts)
    index = {v: i for i, v in enumerate(verts)}
    facets = []
    for normal, offset, mask in h.facets:
        inc = tuple(sorted(index[h.points[i]] for i in range(len(h.points))
                           if mask >> i & 1 and h.points[i] in index))
        facets.append(Facet(normal, offset, inc))
    return Polytope(d, tuple(verts), tuple(facets), len(h.pivots))


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.dim != Q.dim:
        raise DimensionError(f"cannot add polytopes of dimensions {P.dim} and {Q.dim}")
    return convex_hull([add(p, q) for p in P.vertices for q in Q.vertices], P.dim)


def minkowski_sum_all(polys: Sequence[Polytope]) -> Polytope:
    return reduce(minkowski_sum, polys)


def _upper_hull(points: Sequence[Point]) -> tuple[_Hull, list[int]]:
    """Hull of ``points`` plus copies pushed below the minimum height.

    Returns the hull and the indices (into ``hull.points``) of the original
    points that remain vertices, i.e. the upper vertices.  Every face of the
    augmented hull with a positive-height outer normal is an upper face of the
    original point set.
    """
    pts = sorted(set(points))
    low = min(p[-1] for p in pts) - 1
    lowered = [p[:-1] + (low,) for p in pts]
    h = _hull(pts + lowered, prefer_last=True)
    original = set(pts)
    upper = [i for i in h.vertex_idx if h.points[i] in original]
    return h, upper


def upper_vertices(P: Polytope | Sequence[Sequence]) -> list[Point]:
    """Vertices that uniquely maximize height plus some linear form in the other coordinates.

    The last coordinate is the height axis.  Accepts a :class:`Polytope` or a
    raw point collection.
    """
    pts = list(P.vertices) if isinstance(P, Polytope) else [as_point(p) for p in P]
    if not pts:
        return []
    if len(pts[0]) < 2:
        raise DimensionError("upper vertices need a height axis and at least one other axis")
    h, upper = _upper_hull(pts)
    return sorted(h.points[i] for i in upper)


def upper_faces(points: Sequence[Sequence]) -> list[list[Point]]:
    """Point sets of the maximal upper faces of conv(points), one list per face.

    Each list holds the input points lying on that face (vertices and any
    other points on it).
    """
    pts = [as_point(p) for p in points]
    h, _ = _upper_hull(pts)
    original = set(pts)
    faces = []
    for normal, _, mask in h.facets:
        if normal[-1] > 0:
            faces.append([h.points[i] for i in range(len(h.points))
                          if mask >> i & 1 and h.points[i] in original])
    if not h.facets:
        faces.append([p for p in h.points if p in original])
    return faces


def in_hull(P: Polytope, p: Sequence) -> bool:
    """Membership test for full-dimensional polytopes (boundary included)."""
    if P.degenerate:
        raise DimensionError("membership test needs a full-dimensional polytope")
    p = as_point(p)
    return all(dot(f.normal, p) <= f.offset for f in P.facets)


def lattice_box(lo: int, hi: int, dim: int) -> list[Point]:
    return [tuple(Fraction(c) for c in t) for t in product(range(lo, hi + 1), repeat=dim)]
