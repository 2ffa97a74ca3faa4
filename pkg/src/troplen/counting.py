"""Region counts of arrangements of planar tropical curves and the bounds they obey."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from .exactgeom import DimensionError, Polytope, convex_hull, minkowski_sum_all
from .plancomplex import (
    PlanarComplex,
    euler_characteristic,
    intersection_complex,
    local_directions,
    overlay,
    parallel,
    region_count_oracle,
    tropical_curve,
)
from .signomial import Factorization, RationalRep, Signomial, flen, mlen


@dataclass(frozen=True)
class CountReport:
    mlen_formula: int
    flen: int
    correction_terms: dict[tuple[int, ...], int]
    tight: bool
    generic: bool
    mlen_oracle: int | None = None

    def __post_init__(self):
        if self.mlen_formula != self.flen + sum(self.correction_terms.values()):
            raise AssertionError("count report is internally inconsistent")

    def to_json(self) -> dict:
        out = {
            "mlen_formula": self.mlen_formula,
            "flen": self.flen,
            "correction_terms": {",".join(map(str, k)): v for k, v in self.correction_terms.items()},
            "tight": self.tight,
            "generic": self.generic,
        }
        if self.mlen_oracle is not None:
            out["mlen_oracle"] = self.mlen_oracle
        return out


@dataclass(frozen=True)
class BoundReport:
    holds: bool
    tight: bool
    generic: bool
    mlen: int
    rhs: int
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"holds": self.holds, "tight": self.tight, "generic": self.generic,
                "mlen": self.mlen, "rhs": self.rhs, "witness": self.witness}


@dataclass(frozen=True)
class MinkowskiReport:
    vertices: int
    rhs: int
    zonotope_bound: int | None
    holds: bool
    degenerate: bool

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "rhs": self.rhs, "zonotope_bound": self.zonotope_bound,
                "holds": self.holds, "degenerate": self.degenerate}


def _curves(gs: Sequence[Signomial]) -> list[PlanarComplex]:
    for g in gs:
        if g.dim != 2:
            raise DimensionError("arrangement counts are computed for two variables only")
    return [tropical_curve(g) for g in gs]


def _transversal_point(curves: Sequence[PlanarComplex], p) -> bool:
    dirs = [local_directions(C, p) for C in curves]
    if any(len(d) != 2 for d in dirs):
        return False
    return not parallel(dirs[0][0], dirs[1][0])


def pairwise_intersections(curves: Sequence[PlanarComplex]) -> dict[tuple[int, int], PlanarComplex]:
    return {(i, j): intersection_complex(curves[i], curves[j]) for i, j in combinations(range(len(curves)), 2)}


def genericity(curves: Sequence[PlanarComplex]) -> tuple[bool, dict]:
    """Every pair meets in finitely many transversal points and no three meet.

    Returns the verdict and a witness describing the first failure.
    """
    pairs = pairwise_intersections(curves)
    for (i, j), X in pairs.items():
        if X.edges:
            return False, {"pair": [i, j], "reason": "shared 1-cells"}
        if not X.vertices:
            return False, {"pair": [i, j], "reason": "disjoint"}
        for p in X.vertices:
            if not _transversal_point((curves[i], curves[j]), p):
                return False, {"pair": [i, j], "reason": "non-transversal", "point": [str(c) for c in p]}
    for i, j, k in combinations(range(len(curves)), 3):
        common = set(pairs[(i, j)].vertices) & set(pairs[(i, k)].vertices)
        if common:
            p = min(common)
            return False, {"triple": [i, j, k], "reason": "triple point", "point": [str(c) for c in p]}
    return True, {}


def region_count_formula(gs: Sequence[Signomial], d: int = 2, oracle: bool = False) -> CountReport:
    if d != 2:
        raise DimensionError("the arrangement formula is evaluated for d = 2 only")
    curves = _curves(gs)
    f = flen(Factorization(tuple(gs)))
    terms: dict[tuple[int, ...], int] = {}
    inter: dict[tuple[int, ...], PlanarComplex] = {(i,): c for i, c in enumerate(curves)}
    for size in range(2, len(curves) + 1):
        for S in combinations(range(len(curves)), size):
            X = intersection_complex(inter[S[:-1]], curves[S[-1]])
            inter[S] = X
            terms[S] = (-1) ** (size + d) * euler_characteristic(X)
    generic, _ = genericity(curves)
    tight = all(len(inter[S].vertices) == 1 and not inter[S].edges for S in combinations(range(len(curves)), 2))
    report_oracle = region_count_oracle(overlay(*curves)) if oracle else None
    return CountReport(f + sum(terms.values()), f, terms, tight, generic, report_oracle)


def lower_bound_rhs(m: int, d: int, flen: int) -> int:
    if m < 1 or d < 1:
        raise ValueError("need m >= 1 and d >= 1")
    return flen + sum(comb(m, k) for k in range(2, d + 1))


def check_lower_bound(gs: Sequence[Signomial]) -> BoundReport:
    curves = _curves(gs)
    generic, witness = genericity(curves)
    actual = mlen(Factorization(tuple(gs)))
    f = flen(Factorization(tuple(gs)))
    rhs = lower_bound_rhs(len(gs), 2, f)
    pairs = pairwise_intersections(curves)
    tight = all(len(X.vertices) == 1 and not X.edges for X in pairs.values())
    return BoundReport(actual >= rhs, generic and tight and actual == rhs, generic, actual, rhs, witness)


def minkowski_lower_bound_rhs(vertex_counts: Sequence[int], m: int, d: int) -> int:
    if d not in (2, 3):
        raise DimensionError("the polytope bound is evaluated for d in {2, 3}")
    if m == 1:
        return vertex_counts[0]
    return sum(vertex_counts) + zonotope_bound(m, d) - 2 * m


def zonotope_bound(m: int, d: int) -> int:
    return 2 * sum(comb(m - 1, k) for k in range(d))


def check_minkowski_bound(polys: Sequence[Polytope]) -> MinkowskiReport:
    if not polys:
        raise ValueError("need at least one polytope")
    d = polys[0].dim
    total = minkowski_sum_all(list(polys))
    rhs = minkowski_lower_bound_rhs([len(P) for P in polys], len(polys), d)
    zb = zonotope_bound(len(polys), d) if all(P.affine_dim > 0 for P in polys) else None
    n = len(total)
    holds = n >= rhs and (zb is None or n >= zb)
    return MinkowskiReport(n, rhs, zb, holds, total.affine_dim < d)


def zonotope(segments: Sequence[Sequence]) -> Polytope:
    """Minkowski sum of segments ``[0, v]``."""
    d = len(segments[0])
    zero = (0,) * d
    return minkowski_sum_all([convex_hull([zero, v], d) for v in segments])


def linear_region_bound(r: RationalRep) -> int:
    if r.dim != 2:
        raise DimensionError("the linear-region bound is evaluated for d = 2 only")
    G = overlay(*[tropical_curve(f) for f in r.numerator.factors])
    H = overlay(*[tropical_curve(f) for f in r.denominator.factors])
    return mlen(r.numerator) + mlen(r.denominator) + euler_characteristic(intersection_complex(G, H))
