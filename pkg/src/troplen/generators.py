"""Seeded random instances: curves, line families, fans, signed fans, PL functions, polytopes."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import gcd

from .counting import genericity
from .exactgeom import Polytope, convex_hull, cross2, det
from .minimize import (
    PL1D,
    Breakpoint,
    NotGeneric,
    SignedFan,
    fan_is_generic,
    is_irreducible_fan,
    minimal_balancing_union,
)
from .plancomplex import PlanarComplex, WeightedFan, overlay, same_direction, tropical_curve
from .signomial import Signomial, reduce

DEFAULT_SEED = 20240607


def rng_for(seed: int | None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def random_signomial(rng: random.Random, terms: int, exp_range: int = 2, coeff_range: int = 3, dim: int = 2) -> Signomial:
    mons = [
        (rng.randint(-coeff_range, coeff_range), tuple(rng.randint(-exp_range, exp_range) for _ in range(dim)))
        for _ in range(terms)
    ]
    return Signomial.from_terms(mons, dim)


def random_curve_signomial(rng: random.Random, max_mlen: int = 5, exp_range: int = 2) -> Signomial:
    """Reduced two-variable signomial with 2..max_mlen monomials."""
    while True:
        s = reduce(random_signomial(rng, rng.randint(2, max_mlen + 2), exp_range))
        if 2 <= len(s) <= max_mlen:
            return s


def random_family(rng: random.Random, m: int, max_mlen: int = 5) -> list[Signomial]:
    return [random_curve_signomial(rng, max_mlen) for _ in range(m)]


def random_generic_family(rng: random.Random, m: int, max_mlen: int = 4, tries: int = 10_000) -> list[Signomial]:
    for _ in range(tries):
        gs = random_family(rng, m, max_mlen)
        if genericity([tropical_curve(g) for g in gs])[0]:
            return gs
    raise RuntimeError("no generic family found")


def _primitive_dirs(rng: random.Random, k: int, bound: int) -> list[tuple[int, int]]:
    dirs: list[tuple[int, int]] = []
    while len(dirs) < k:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (a, b) == (0, 0) or gcd(a, b) != 1:
            continue
        if any(cross2(d, (a, b)) == 0 for d in dirs):
            continue
        dirs.append((a, b))
    return dirs


def binomial_line(normal: tuple[int, int], offset) -> Signomial:
    """The line ``<normal, x> = offset`` as the binomial ``normal ⊕ offset``."""
    return Signomial.from_terms([(-Fraction(offset), normal), (0, (0, 0))])


def generic_binomial_lines(rng: random.Random, m: int, tries: int = 10_000) -> list[Signomial]:
    for _ in range(tries):
        normals = _primitive_dirs(rng, m, 4)
        gs = [binomial_line(n, rng.randint(-6, 6)) for n in normals]
        if genericity([tropical_curve(g) for g in gs])[0]:
            return gs
    raise RuntimeError("no generic line arrangement found")


def random_balanced_complex(rng: random.Random) -> PlanarComplex:
    """A tropical curve or an overlay of two or three of them."""
    k = rng.choice((1, 1, 2, 3))
    return overlay(*[tropical_curve(random_curve_signomial(rng, 5)) for _ in range(k)])


def _half_plane_rays(rng: random.Random, m: int, bound: int = 5, normal=None, avoid=()) -> list[tuple[int, int]]:
    if normal is None:
        normal = _primitive_dirs(rng, 1, 3)[0]
    rays: list[tuple[int, int]] = []
    while len(rays) < m:
        v = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if v[0] * normal[0] + v[1] * normal[1] <= 0:
            continue
        if any(same_direction(v, r) for r in [*rays, *avoid]):
            continue
        rays.append(v)
    return rays


def random_unbalanced_fan(rng: random.Random, m: int, base=(0, 0), check_partitions: bool = True) -> WeightedFan:
    """Fan of m rays in an open half-plane, generic for every block balancing."""
    while True:
        F = WeightedFan.of(base, _half_plane_rays(rng, m, 9))
        if len(F.rays) != m:
            continue
        if not check_partitions or fan_is_generic(F):
            return F


def random_fan_union(rng: random.Random, k: int, max_rays: int = 3, tries: int = 10_000) -> list[WeightedFan]:
    """Fans in general position whose rays all lie in one common open half-plane."""
    for _ in range(tries):
        normal = _primitive_dirs(rng, 1, 3)[0]
        fans, used = [], []
        for _ in range(k):
            rays = _half_plane_rays(rng, rng.randint(1, max_rays), 9, normal, used)
            used.extend(rays)
            fans.append(WeightedFan.of((rng.randint(-9, 9), rng.randint(-9, 9)), rays))
        try:
            minimal_balancing_union(fans, strict=True)
        except NotGeneric:
            continue
        return fans
    raise RuntimeError("no generic fan union found")


def random_signed_fan(rng: random.Random, m1: int, m2: int, tries: int = 10_000) -> SignedFan:
    """Sign-balanced irreducible fan with m1 positive and m2 negative rays (m1, m2 >= 1)."""
    for _ in range(tries):
        pos = _half_plane_rays(rng, m1)
        neg_ = _half_plane_rays(rng, m2 - 1) if m2 > 1 else []
        sx = sum(v[0] for v in pos) - sum(v[0] for v in neg_)
        sy = sum(v[1] for v in pos) - sum(v[1] for v in neg_)
        if (sx, sy) == (0, 0):
            continue
        neg_.append((sx, sy))
        try:
            S = SignedFan.of((rng.randint(-3, 3), rng.randint(-3, 3)), pos, neg_)
        except ValueError:
            continue
        if len(S.positive.rays) != m1 or len(S.negative.rays) != m2:
            continue
        if not is_irreducible_fan(S):
            continue
        extra = (-sum(v[0] for v in pos), -sum(v[1] for v in pos))
        if any(same_direction(extra, r) for r in S.positive.rays + S.negative.rays):
            continue
        return S
    raise RuntimeError("no irreducible signed fan found")


def random_pl1d(rng: random.Random, max_breakpoints: int = 6) -> PL1D:
    k = rng.randint(0, max_breakpoints)
    locs = sorted(rng.sample(range(-20, 21), k))
    bps = tuple(
        Breakpoint(Fraction(x, rng.choice((1, 2, 3))), Fraction(rng.randint(1, 6), rng.choice((1, 2))), rng.random() < 0.5)
        for x in locs
    )
    # distinct denominators can collide; drop duplicates
    seen, uniq = set(), []
    for b in bps:
        if b.location not in seen:
            seen.add(b.location)
            uniq.append(b)
    return PL1D(tuple(uniq), (Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-9, 9))), Fraction(rng.randint(-4, 4)))


def random_simplex(rng: random.Random, d: int, bound: int = 20) -> Polytope:
    while True:
        P = convex_hull([tuple(rng.randint(-bound, bound) for _ in range(d)) for _ in range(d + 1)], d)
        if P.affine_dim == d:
            return P


def random_generic_segments(rng: random.Random, m: int, d: int = 3, bound: int = 7) -> list[tuple[int, ...]]:
    """Segment vectors with every d of them linearly independent."""
    while True:
        vs = [tuple(rng.randint(-bound, bound) for _ in range(d)) for _ in range(m)]
        if all(det([[Fraction(c) for c in v] for v in sub]) != 0 for sub in combinations(vs, d)):
            return vs


def random_generic_triangle_pair(rng: random.Random, bound: int = 9) -> tuple[Polytope, Polytope]:
    """Two triangles without parallel edges."""
    while True:
        P, Q = random_simplex(rng, 2, bound), random_simplex(rng, 2, bound)

        def edges(T):
            v = T.vertices
            return [tuple(b - a for a, b in zip(v[i], v[(i + 1) % 3])) for i in range(3)]

        if all(cross2(e, f) != 0 for e in edges(P) for f in edges(Q)):
            return P, Q
