"""Weighted one-dimensional polyhedral complexes in the plane.

Weights are never stored as scalars.  Every edge carries a *weighted vector*:
a vector along the edge whose Euclidean length is the weight.  Balancing is
then the exact condition that outgoing weighted vectors sum to zero, and no
square root is ever taken.  A full line is stored as two opposite rays from
its point closest to the origin.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .exactgeom import Point, add, as_point, cross2, dot, primitive, scale, solve2, sub
from .signomial import Signomial, RationalRep, reduce, regular_subdivision

Vec = tuple[Fraction, Fraction]

ZERO: Vec = (Fraction(0), Fraction(0))


def rot_cw(v: Sequence[Fraction]) -> Vec:
    return (v[1], -v[0])


def rot_ccw(v: Sequence[Fraction]) -> Vec:
    return (-v[1], v[0])


def neg(v: Sequence[Fraction]) -> Vec:
    return (-v[0], -v[1])


def parallel(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return cross2(u, v) == 0


def same_direction(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return cross2(u, v) == 0 and dot(u, v) > 0


def norm2(v: Sequence[Fraction]) -> Fraction:
    return dot(v, v)


def _half(v: Sequence[Fraction]) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angle_cmp(u: Sequence[Fraction], v: Sequence[Fraction]) -> int:
    """Compare directions by counterclockwise angle from the positive x-axis."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross2(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = cmp_to_key(angle_cmp)


def line_anchor(p: Sequence[Fraction], d: Sequence[Fraction]) -> Point:
    """Point of the line ``p + t d`` closest to the origin."""
    t = -dot(p, d) / dot(d, d)
    return add(p, scale(t, d))


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class Edge:
    """Segment ``a -> b`` or, when ``b`` is None, a ray from ``a`` along ``w``."""

    a: int
    b: int | None
    w: Vec

    @property
    def is_ray(self) -> bool:
        return self.b is None


@dataclass(frozen=True)
class PlanarComplex:
    vertices: tuple[Point, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        for e in self.edges:
            if e.w == ZERO:
                raise ValueError("edges must carry a nonzero weighted vector")
            if e.b is not None:
                d = sub(self.vertices[e.b], self.vertices[e.a])
                if not same_direction(d, e.w):
                    raise ValueError(f"weighted vector {e.w} does not run along segment {e.a}->{e.b}")

    @classmethod
    def empty(cls) -> PlanarComplex:
        return cls()

    @classmethod
    def from_parts(cls, points: Iterable[Sequence], segments=(), rays=(), lines=()) -> PlanarComplex:
        """Assemble from geometric parts.

        ``segments`` holds ``(p, q, w)``, ``rays`` holds ``(p, w)`` and
        ``lines`` holds ``(p, w)``; ``points`` are extra 0-cells.  Parts are
        taken as given; use :func:`overlay` to refine crossing parts.
        """
        verts: dict[Point, int] = {}

        def vid(p) -> int:
            p = as_point(p)
            if p not in verts:
                verts[p] = len(verts)
            return verts[p]

        edges = []
        for p in points:
            vid(p)
        for p, q, w in segments:
            w = as_point(w)
            a, b = vid(p), vid(q)
            if dot(sub(as_point(q), as_point(p)), w) < 0:
                w = neg(w)
            edges.append(Edge(a, b, w))
        for p, w in rays:
            edges.append(Edge(vid(p), None, as_point(w)))
        for p, w in lines:
            w = as_point(w)
            a = vid(line_anchor(as_point(p), w))
            edges.append(Edge(a, None, w))
            edges.append(Edge(a, None, neg(w)))
        order = sorted(verts, key=verts.get)
        return cls(tuple(order), tuple(edges))

    def is_empty(self) -> bool:
        return not self.vertices and not self.edges

    @property
    def rays(self) -> list[Edge]:
        return [e for e in self.edges if e.is_ray]

    @property
    def segments(self) -> list[Edge]:
        return [e for e in self.edges if not e.is_ray]

    def outgoing(self) -> dict[int, list[Vec]]:
        out: dict[int, list[Vec]] = {i: [] for i in range(len(self.vertices))}
        for e in self.edges:
            out[e.a].append(e.w)
            if e.b is not None:
                out[e.b].append(neg(e.w))
        return out

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def canonical(self) -> PlanarComplex:
        """Normal form: merged straight 2-valent vertices, sorted cells.

        Two complexes with the same weighted support have equal normal forms.
        """
        return _canonical(self)

    def same_as(self, other: PlanarComplex) -> bool:
        return self.canonical() == other.canonical()

    def to_json(self) -> dict:
        edges = []
        for e in self.edges:
            w = [str(c) for c in e.w]
            if e.is_ray:
                edges.append({"kind": "ray", "a": e.a, "b": [str(c) for c in primitive(e.w)], "w": w})
            else:
                edges.append({"kind": "segment", "a": e.a, "b": e.b, "w": w})
        return {"vertices": [[str(c) for c in v] for v in self.vertices], "edges": edges}

    @classmethod
    def from_json(cls, data: dict) -> PlanarComplex:
        verts = tuple(as_point(v) for v in data.get("vertices", []))
        edges = []
        for e in data.get("edges", []):
            w = as_point(e["w"])
            if e["kind"] == "ray":
                d = as_point(e.get("b", w))
                if not same_direction(d, w):
                    raise ValueError("ray direction and weighted vector disagree")
                edges.append(Edge(int(e["a"]), None, w))
            elif e["kind"] == "segment":
                edges.append(Edge(int(e["a"]), int(e["b"]), w))
            else:
                raise ValueError(f"unknown edge kind {e['kind']!r}")
        return cls(verts, tuple(edges))


@dataclass(frozen=True)
class SignedComplex:
    positive: PlanarComplex
    negative: PlanarComplex

    def canonical(self) -> SignedComplex:
        return SignedComplex(self.positive.canonical(), self.negative.canonical())

    def same_as(self, other: SignedComplex) -> bool:
        return self.canonical() == other.canonical()

    def support(self) -> PlanarComplex:
        return overlay(self.positive, self.negative)

    def is_empty(self) -> bool:
        return self.positive.is_empty() and self.negative.is_empty()

    def to_json(self) -> dict:
        return {"positive": self.positive.to_json(), "negative": self.negative.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> SignedComplex:
        return cls(PlanarComplex.from_json(data["positive"]), PlanarComplex.from_json(data["negative"]))


@dataclass(frozen=True)
class WeightedFan:
    """Rays from a common base point; rays with the same direction are merged."""

    base: Point
    rays: tuple[Vec, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "base", as_point(self.base))
        merged: dict[tuple[int, ...], Vec] = {}
        for r in self.rays:
            r = as_point(r)
            if r == ZERO:
                raise ValueError("fan rays must be nonzero")
            key = primitive(r)
            merged[key] = add(merged[key], r) if key in merged else r
        object.__setattr__(self, "rays", tuple(sorted(merged.values(), key=angle_key)))

    @classmethod
    def of(cls, base, rays: Iterable[Sequence]) -> WeightedFan:
        return cls(as_point(base), tuple(as_point(r) for r in rays))

    def __len__(self) -> int:
        return len(self.rays)

    def ray_sum(self) -> Vec:
        s = ZERO
        for r in self.rays:
            s = add(s, r)
        return s

    def to_complex(self) -> PlanarComplex:
        if not self.rays:
            return PlanarComplex()
        return PlanarComplex((self.base,), tuple(Edge(0, None, r) for r in self.rays))

    def translated(self, base) -> WeightedFan:
        return WeightedFan(as_point(base), self.rays)

    def to_json(self) -> dict:
        return {"base": [str(c) for c in self.base], "rays": [[str(c) for c in r] for r in self.rays]}

    @classmethod
    def from_json(cls, data: dict) -> WeightedFan:
        return cls.of(data["base"], data["rays"])


# ---------------------------------------------------------------------------
# refinement engine


@dataclass
class _Arrangement:
    points: set[Point]
    # piece key -> {input index: weight factor along the canonical direction}
    pieces: dict[tuple, dict[int, Fraction]]
    # input index -> points on that input's support
    on: list[set[Point]]


def _edge_geom(X: PlanarComplex, e: Edge):
    p = X.vertices[e.a]
    if e.b is None:
        return p, e.w, False
    return p, sub(X.vertices[e.b], p), True


def _crossing(g1, g2) -> Point | None:
    p1, d1, b1 = g1
    p2, d2, b2 = g2
    den = cross2(d1, d2)
    if den == 0:
        return None
    r = sub(p2, p1)
    t = cross2(r, d2) / den
    s = cross2(r, d1) / den
    if t < 0 or s < 0 or (b1 and t > 1) or (b2 and s > 1):
        return None
    return add(p1, scale(t, d1))


def _param_on(g, x: Point) -> Fraction | None:
    p, d, bounded = g
    r = sub(x, p)
    if cross2(r, d) != 0:
        return None
    t = dot(r, d) / dot(d, d)
    if t < 0 or (bounded and t > 1):
        return None
    return t


def _piece_key(p: Point, q: Point | None, w: Vec) -> tuple[tuple, Vec, Fraction]:
    """Canonical key, canonical direction and weight factor of a piece."""
    if q is None:
        u = tuple(Fraction(c) for c in primitive(w))
        return ("ray", p, u), u, dot(w, u) / dot(u, u)
    lo, hi = min(p, q), max(p, q)
    u = sub(hi, lo)
    return ("seg", lo, hi), u, dot(w, u) / dot(u, u)


def _arrange(complexes: Sequence[PlanarComplex]) -> _Arrangement:
    geoms = []
    points: set[Point] = set()
    for i, X in enumerate(complexes):
        points.update(X.vertices)
        for e in X.edges:
            geoms.append((i, e, _edge_geom(X, e)))
    for a in range(len(geoms)):
        for b in range(a + 1, len(geoms)):
            if geoms[a][0] == geoms[b][0]:
                continue
            x = _crossing(geoms[a][2], geoms[b][2])
            if x is not None:
                points.add(x)

    pieces: dict[tuple, dict[int, Fraction]] = defaultdict(dict)
    on = [set(X.vertices) for X in complexes]
    for i, e, g in geoms:
        p, d, bounded = g
        ts = sorted({t for x in points if (t := _param_on(g, x)) is not None} | {Fraction(0)})
        if bounded and ts[-1] != 1:
            ts.append(Fraction(1))
        stops = [add(p, scale(t, d)) for t in ts]
        on[i].update(stops)
        for s, t in zip(stops, stops[1:]):
            key, _, lam = _piece_key(s, t, e.w)
            pieces[key][i] = pieces[key].get(i, Fraction(0)) + abs(lam)
        if not bounded:
            key, _, lam = _piece_key(stops[-1], None, e.w)
            pieces[key][i] = pieces[key].get(i, Fraction(0)) + lam
    return _Arrangement(points, dict(pieces), on)


def _isolated(X: PlanarComplex) -> set[Point]:
    used = set()
    for e in X.edges:
        used.add(e.a)
        if e.b is not None:
            used.add(e.b)
    return {v for i, v in enumerate(X.vertices) if i not in used}


def _assemble(pieces: dict[tuple, Fraction], extra_points: Iterable[Point] = ()) -> PlanarComplex:
    """Complex from canonical pieces with positive weight factors."""
    pts = set(extra_points)
    for key in pieces:
        pts.add(key[1])
        if key[0] == "seg":
            pts.add(key[2])
    order = sorted(pts)
    index = {p: i for i, p in enumerate(order)}
    edges = []
    for key in sorted(pieces):
        lam = pieces[key]
        if key[0] == "seg":
            u = sub(key[2], key[1])
            edges.append(Edge(index[key[1]], index[key[2]], scale(lam, u)))
        else:
            edges.append(Edge(index[key[1]], None, scale(lam, key[2])))
    return PlanarComplex(tuple(order), tuple(edges))


def _signed_pieces(complexes: Sequence[PlanarComplex], signs: Sequence[int]):
    arr = _arrange(complexes)
    net = {}
    for key, contrib in arr.pieces.items():
        lam = sum(signs[i] * v for i, v in contrib.items())
        if lam != 0:
            net[key] = lam
    return arr, net


# ---------------------------------------------------------------------------
# operations


def overlay(*complexes: PlanarComplex) -> PlanarComplex:
    """Common refinement with weights added on shared cells."""
    if len(complexes) == 1 and isinstance(complexes[0], (list, tuple)):
        complexes = tuple(complexes[0])
    if not complexes:
        return PlanarComplex()
    arr, net = _signed_pieces(complexes, [1] * len(complexes))
    extra = set().union(*(_isolated(X) for X in complexes))
    return _assemble(net, extra)


def signed_overlay(plus: Sequence[PlanarComplex], minus: Sequence[PlanarComplex]) -> SignedComplex:
    """``sum(plus) - sum(minus)`` split by the sign of the net weight.

    Cells whose weights cancel are dropped from the support.
    """
    complexes = list(plus) + list(minus)
    signs = [1] * len(plus) + [-1] * len(minus)
    _, net = _signed_pieces(complexes, signs)
    pos = {k: v for k, v in net.items() if v > 0}
    negp = {k: -v for k, v in net.items() if v < 0}
    return SignedComplex(_assemble(pos), _assemble(negp))


def intersection_complex(A: PlanarComplex, B: PlanarComplex) -> PlanarComplex:
    """Common support of A and B; shared 1-cells carry the smaller weight."""
    arr = _arrange([A, B])
    shared = {k: min(c[0], c[1]) for k, c in arr.pieces.items() if 0 in c and 1 in c}
    return _assemble(shared, arr.on[0] & arr.on[1])


def union_complex(*complexes: PlanarComplex) -> PlanarComplex:
    return overlay(*complexes)


def tropical_curve(s: Signomial) -> PlanarComplex:
    """The corner locus of a two-variable signomial, dual to its regular subdivision."""
    if s.dim != 2:
        raise ValueError("tropical curves are computed for two variables only")
    r = reduce(s)
    if len(r) < 2:
        return PlanarComplex()
    coeff = {m.exp: m.coeff for m in r.monomials}
    sd = regular_subdivision(r)
    if sd.base.affine_dim == 1:
        lines = []
        for cell in sd.cells:
            e1, e2 = cell
            n = sub(e2, e1)
            p = scale((coeff[e1] - coeff[e2]) / dot(n, n), n)
            lines.append((p, rot_cw(n)))
        return overlay(*[PlanarComplex.from_parts((), lines=[ln]) for ln in lines])

    dual: list[Point] = []
    for cell in sd.cells:
        e0, e1, e2 = cell[0], cell[1], cell[2]
        d1, d2 = sub(e1, e0), sub(e2, e0)
        dual.append(solve2(d1[0], d1[1], d2[0], d2[1], coeff[e0] - coeff[e1], coeff[e0] - coeff[e2]))
    owners = sd.edges()
    segments, rays = [], []
    for i, cell in enumerate(sd.cells):
        for a, b in zip(cell, cell[1:] + cell[:1]):
            key = tuple(sorted((a, b)))
            cells = owners[key]
            t = sub(b, a)
            if len(cells) == 1:
                rays.append((dual[i], rot_cw(t)))
            elif cells[0] == i:
                j = cells[1]
                segments.append((dual[i], dual[j], rot_cw(t)))
    return PlanarComplex.from_parts((), segments=segments, rays=rays)


def corner_locus(r: RationalRep) -> SignedComplex:
    """Signed corner locus of ``numerator - denominator``.

    Uses one curve per factor; the curve of a product is the weighted sum of
    the factor curves.
    """
    if r.dim != 2:
        raise ValueError("corner loci are computed for two variables only")
    plus = [tropical_curve(f) for f in r.numerator.factors]
    minus = [tropical_curve(f) for f in r.denominator.factors]
    return signed_overlay(plus, minus)


def euler_characteristic(X: PlanarComplex) -> int:
    return len(X.vertices) - len(X.edges)


def is_balanced(X: PlanarComplex) -> bool:
    for vecs in X.outgoing().values():
        s = ZERO
        for v in vecs:
            s = add(s, v)
        if s != ZERO:
            return False
    return True


def is_balanced_fan(F: WeightedFan) -> bool:
    return F.ray_sum() == ZERO


def recession_fan(X: PlanarComplex) -> WeightedFan:
    return WeightedFan((Fraction(0), Fraction(0)), tuple(e.w for e in X.rays))


def dominates(Y: PlanarComplex, X: PlanarComplex) -> bool:
    """True when every cell of X lies in the support of Y with at least its weight."""
    arr = _arrange([X, Y])
    for contrib in arr.pieces.values():
        if 0 in contrib and contrib.get(1, Fraction(0)) < contrib[0]:
            return False
    return _isolated(X) <= arr.on[1]


def local_directions(X: PlanarComplex, p: Point) -> list[Vec]:
    """Outgoing directions of the support of X at a point (empty if p is off X)."""
    p = as_point(p)
    out = []
    for e in X.edges:
        g = _edge_geom(X, e)
        t = _param_on(g, p)
        if t is None:
            continue
        _, d, bounded = g
        if t == 0:
            out.append(d)
        elif bounded and t == 1:
            out.append(neg(d))
        else:
            out.extend([d, neg(d)])
    return out


# ---------------------------------------------------------------------------
# region oracle


def region_count_oracle(X: PlanarComplex) -> int:
    """Connected components of the plane minus the support of X.

    The complex is clipped to a box one unit beyond its vertices and the
    faces of the resulting planar graph are traced edge by edge.
    """
    if not X.edges:
        return 1
    x0, y0, x1, y1 = X.bounding_box()
    x0, y0, x1, y1 = x0 - 1, y0 - 1, x1 + 1, y1 + 1

    undirected: set[tuple[Point, Point]] = set()

    def link(p, q):
        if p != q:
            undirected.add((min(p, q), max(p, q)))

    boundary: set[Point] = {(x0, y0), (x1, y0), (x1, y1), (x0, y1)}
    for e in X.edges:
        p = X.vertices[e.a]
        if e.b is not None:
            link(p, X.vertices[e.b])
            continue
        d = e.w
        ts = []
        if d[0] > 0:
            ts.append((x1 - p[0]) / d[0])
        elif d[0] < 0:
            ts.append((x0 - p[0]) / d[0])
        if d[1] > 0:
            ts.append((y1 - p[1]) / d[1])
        elif d[1] < 0:
            ts.append((y0 - p[1]) / d[1])
        q = add(p, scale(min(ts), d))
        boundary.add(q)
        link(p, q)

    def perimeter_pos(q):
        x, y = q
        if y == y0:
            return (0, x)
        if x == x1:
            return (1, y)
        if y == y1:
            return (2, -x)
        return (3, -y)

    ring = sorted(boundary, key=perimeter_pos)
    for a, b in zip(ring, ring[1:] + ring[:1]):
        link(a, b)

    nbrs: dict[Point, list[Point]] = defaultdict(list)
    for p, q in undirected:
        nbrs[p].append(q)
        nbrs[q].append(p)
    rank: dict[tuple[Point, Point], int] = {}
    for v, ns in nbrs.items():
        ns.sort(key=lambda q: angle_key(sub(q, v)))
        for i, q in enumerate(ns):
            rank[(v, q)] = i

    seen: set[tuple[Point, Point]] = set()
    cycles = 0
    for p, q in undirected:
        for h in ((p, q), (q, p)):
            if h in seen:
                continue
            cycles += 1
            cur = h
            while cur not in seen:
                seen.add(cur)
                u, v = cur
                ns = nbrs[v]
                # turn to the neighbour just clockwise of the way back
                nxt = ns[(rank[(v, u)] - 1) % len(ns)]
                cur = (v, nxt)

    parent = {v: v for v in nbrs}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for p, q in undirected:
        parent[find(p)] = find(q)
    components = len({find(v) for v in nbrs})
    return cycles - components


# ---------------------------------------------------------------------------
# normal form


def _canonical(X: PlanarComplex) -> PlanarComplex:
    verts = list(X.vertices)
    # edge records: [a, b or None, w], endpoints as points
    recs = []
    for e in X.edges:
        recs.append([verts[e.a], None if e.b is None else verts[e.b], e.w])
    used_pts = {r[0] for r in recs} | {r[1] for r in recs if r[1] is not None}
    isolated = set(verts) - used_pts

    changed = True
    while changed:
        changed = False
        inc: dict[Point, list[int]] = defaultdict(list)
        for i, r in enumerate(recs):
            inc[r[0]].append(i)
            if r[1] is not None:
                inc[r[1]].append(i)
        for v, ids in inc.items():
            if len(ids) != 2:
                continue
            i, j = ids
            ri, rj = recs[i], recs[j]
            wi = ri[2] if ri[0] == v else neg(ri[2])
            wj = rj[2] if rj[0] == v else neg(rj[2])
            if add(wi, wj) != ZERO:
                continue
            ends = []
            for r in (ri, rj):
                if r[1] is None:
                    ends.append(None)
                else:
                    ends.append(r[1] if r[0] == v else r[0])
            if ends[0] is None and ends[1] is None:
                anchor = line_anchor(v, wi)
                if anchor == v:
                    continue
                recs[i] = [anchor, None, wi]
                recs[j] = [anchor, None, wj]
            elif ends[0] is None or ends[1] is None:
                far = ends[1] if ends[0] is None else ends[0]
                wray = wi if ends[0] is None else wj
                recs[i] = [far, None, wray]
                recs[j] = None
            else:
                p, q = ends
                recs[i] = [p, q, sub(q, p)]
                recs[i][2] = wj if same_direction(wj, sub(q, p)) else neg(wj)
                recs[j] = None
            recs = [r for r in recs if r is not None]
            changed = True
            break

    segs = [(r[0], r[1], r[2]) for r in recs if r[1] is not None]
    rays = [(r[0], r[2]) for r in recs if r[1] is None]
    pts = set(isolated)
    for p, q, _ in segs:
        pts.update((p, q))
    for p, _ in rays:
        pts.add(p)
    order = sorted(pts)
    index = {p: i for i, p in enumerate(order)}
    edges = []
    for p, q, w in segs:
        a, b = index[min(p, q)], index[max(p, q)]
        lo, hi = min(p, q), max(p, q)
        edges.append(Edge(a, b, w if same_direction(w, sub(hi, lo)) else neg(w)))
    for p, w in rays:
        edges.append(Edge(index[p], None, w))
    edges.sort(key=lambda e: (e.a, -1 if e.b is None else e.b, angle_key(e.w)))
    return PlanarComplex(tuple(order), tuple(edges))
