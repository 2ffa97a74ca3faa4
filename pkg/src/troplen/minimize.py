"""Minimal representations and minimal balancings.

One variable: a piecewise-linear function is rebuilt from its breakpoints,
one binomial factor per breakpoint.  Two variables: weighted fans are
balanced by adding rays, and balanced fans are turned back into signomials
through polygon duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Iterator, Sequence

from .exactgeom import Point, add, as_fraction, as_point, cross2, dot, primitive, scale, sub
from .plancomplex import (
    ZERO,
    PlanarComplex,
    SignedComplex,
    WeightedFan,
    angle_key,
    dominates,
    intersection_complex,
    line_anchor,
    neg,
    overlay,
    rot_ccw,
    same_direction,
    tropical_curve,
)
from .signomial import (
    Factorization,
    Monomial,
    RationalRep,
    Signomial,
    evaluate_rational,
    flen,
    mlen,
    reduce,
)

SUBSET_LIMIT = 20
PARTITION_LIMIT = 10


class NotCompletelyUnbalanced(ValueError):
    pass


class Reducible(ValueError):
    pass


class NotGeneric(ValueError):
    pass


class NotAFan(ValueError):
    pass


# ---------------------------------------------------------------------------
# one variable


@dataclass(frozen=True, order=True)
class Breakpoint:
    location: Fraction
    change: Fraction
    convex: bool

    def __post_init__(self):
        object.__setattr__(self, "location", as_fraction(self.location))
        object.__setattr__(self, "change", as_fraction(self.change))
        if self.change <= 0:
            raise ValueError("slope changes must be positive")


@dataclass(frozen=True)
class PL1D:
    """Continuous piecewise-linear function of one variable.

    ``slope`` is the slope left of every breakpoint; ``anchor`` is a pair
    ``(x0, value)`` fixing the additive constant.
    """

    breakpoints: tuple[Breakpoint, ...]
    anchor: tuple[Fraction, Fraction]
    slope: Fraction

    def __post_init__(self):
        bps = tuple(sorted(self.breakpoints))
        locs = [b.location for b in bps]
        if any(a >= b for a, b in zip(locs, locs[1:])):
            raise ValueError("breakpoint locations must be distinct")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "anchor", (as_fraction(self.anchor[0]), as_fraction(self.anchor[1])))
        object.__setattr__(self, "slope", as_fraction(self.slope))

    def _raw(self, x: Fraction) -> Fraction:
        v = self.slope * x
        for b in self.breakpoints:
            if x > b.location:
                v += (b.change if b.convex else -b.change) * (x - b.location)
        return v

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        x0, y0 = self.anchor
        return y0 + self._raw(x) - self._raw(x0)

    @property
    def convex_count(self) -> int:
        return sum(b.convex for b in self.breakpoints)

    @property
    def concave_count(self) -> int:
        return len(self.breakpoints) - self.convex_count

    @classmethod
    def from_rational(cls, r: RationalRep) -> PL1D:
        """Read off breakpoints of a one-variable tropical rational function."""
        if r.dim != 1:
            raise ValueError("PL1D needs a one-variable representation")
        net: dict[Fraction, Fraction] = {}
        slope = Fraction(0)
        for sign, fac in ((1, r.numerator), (-1, r.denominator)):
            for f in fac.factors:
                mons = reduce(f).monomials
                slope += sign * mons[0].exp[0]
                for m, n in zip(mons, mons[1:]):
                    loc = (m.coeff - n.coeff) / (n.exp[0] - m.exp[0])
                    net[loc] = net.get(loc, Fraction(0)) + sign * (n.exp[0] - m.exp[0])
        bps = tuple(Breakpoint(x, abs(c), c > 0) for x, c in sorted(net.items()) if c != 0)
        x0 = Fraction(0)
        return cls(bps, (x0, evaluate_rational(r, (x0,))), slope)

    def to_json(self) -> dict:
        return {
            "breakpoints": [
                {"location": str(b.location), "change": str(b.change), "convex": b.convex}
                for b in self.breakpoints
            ],
            "anchor": [str(self.anchor[0]), str(self.anchor[1])],
            "slope": str(self.slope),
        }

    @classmethod
    def from_json(cls, data: dict) -> PL1D:
        bps = tuple(
            Breakpoint(as_fraction(b["location"]), as_fraction(b["change"]), bool(b["convex"]))
            for b in data.get("breakpoints", [])
        )
        return cls(bps, tuple(data["anchor"]), as_fraction(data["slope"]))


def _binomial_root(location: Fraction, mult: Fraction) -> Signomial:
    # (x ⊕ location)^mult
    return Signomial.from_terms([(0, (mult,)), (mult * location, (0,))])


def minimal_representation_1d(f: PL1D) -> RationalRep:
    num = [_binomial_root(b.location, b.change) for b in f.breakpoints if b.convex]
    den = [_binomial_root(b.location, b.change) for b in f.breakpoints if not b.convex]
    # every binomial factor is flat on the far left, so the linear part has slope f.slope
    x0, y0 = f.anchor
    raw = sum((b.change * max(x0, b.location) * (1 if b.convex else -1) for b in f.breakpoints), Fraction(0))
    c = y0 - raw - f.slope * x0
    if f.slope >= 0:
        num.append(Signomial.from_terms([(c, (f.slope,))]))
    else:
        den.append(Signomial.from_terms([(-c, (-f.slope,))]))
    num = _fold_monomials(num)
    den = _fold_monomials(den)
    return RationalRep(Factorization(tuple(num)), Factorization(tuple(den)))


def _fold_monomials(factors: list[Signomial]) -> list[Signomial]:
    """Absorb single-monomial factors into the first genuine factor."""
    mono = [f for f in factors if len(f) == 1]
    rest = [f for f in factors if len(f) > 1]
    if not mono:
        return rest or [Signomial.constant(0, 1)]
    shift = mono[0]
    for m in mono[1:]:
        shift = shift * m
    if not rest:
        return [shift]
    m = shift.monomials[0]
    return [rest[0].shift(m.coeff, m.exp)] + rest[1:]


def differ_by_monomial(a: Signomial, b: Signomial) -> bool:
    """True when ``a`` equals ``b`` times one monomial, i.e. they differ by a linear function."""
    ra, rb = reduce(a), reduce(b)
    if len(ra) != len(rb):
        return False
    m, n = ra.monomials[0], rb.monomials[0]
    return rb.shift(m.coeff - n.coeff, tuple(p - q for p, q in zip(m.exp, n.exp))) == ra


def rep_mlen(r: RationalRep) -> tuple[int, int]:
    return mlen(r.numerator), mlen(r.denominator)


def rep_flen(r: RationalRep) -> tuple[int, int]:
    return flen(r.numerator), flen(r.denominator)


# ---------------------------------------------------------------------------
# subset sums over ray vectors


def _integer_vectors(vectors: Sequence[Sequence[Fraction]]) -> list[tuple[int, int]]:
    den = lcm(*(c.denominator for v in vectors for c in v)) if vectors else 1
    return [(int(v[0] * den), int(v[1] * den)) for v in vectors]


def _subset_sums(vectors: Sequence[tuple[int, int]]) -> dict[tuple[int, int], int]:
    sums: dict[tuple[int, int], int] = {(0, 0): 1}
    for vx, vy in vectors:
        nxt = dict(sums)
        for (sx, sy), c in sums.items():
            key = (sx + vx, sy + vy)
            nxt[key] = nxt.get(key, 0) + c
        sums = nxt
    return sums


def zero_subset_count(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Number of nonempty subsets summing to zero (meet in the middle)."""
    if len(vectors) > SUBSET_LIMIT:
        raise ValueError(f"subset enumeration is limited to {SUBSET_LIMIT} vectors")
    iv = _integer_vectors(vectors)
    half = len(iv) // 2
    left, right = _subset_sums(iv[:half]), _subset_sums(iv[half:])
    total = sum(c * left.get((-sx, -sy), 0) for (sx, sy), c in right.items())
    return total - 1


def _positively_dependent(vectors: Sequence[Sequence[Fraction]]) -> bool:
    """Some nonnegative nontrivial combination vanishes (no open half-plane holds them all)."""
    if not vectors:
        return False
    dirs = sorted({primitive(v) for v in vectors}, key=angle_key)
    if len(dirs) == 1:
        return False
    for u, v in zip(dirs, dirs[1:] + dirs[:1]):
        if cross2(u, v) < 0:
            return False
    return True


def is_completely_unbalanced(F: WeightedFan, fractional: bool = False) -> bool:
    """No nonempty subset of rays is balanced.

    The default check uses whole rays at their full weights.  With
    ``fractional=True`` rays may contribute any positive fraction of their
    weight, which amounts to all rays lying in an open half-plane.
    """
    if fractional:
        return not _positively_dependent(F.rays)
    return zero_subset_count(F.rays) == 0


# ---------------------------------------------------------------------------
# fan balancing


@dataclass(frozen=True)
class BalancingResult:
    balancing: WeightedFan | tuple[WeightedFan, ...]
    partition: tuple[tuple[int, ...], ...]
    added: tuple[tuple[Fraction, Fraction], ...]
    mlen: int
    flen: int
    degenerate: bool = False

    @property
    def fans(self) -> tuple[WeightedFan, ...]:
        return self.balancing if isinstance(self.balancing, tuple) else (self.balancing,)

    def to_json(self) -> dict:
        return {
            "partition": [list(b) for b in self.partition],
            "added": [[str(c) for c in v] for v in self.added],
            "fans": [F.to_json() for F in self.fans],
            "mlen": self.mlen,
            "flen": self.flen,
            "degenerate": self.degenerate,
        }


def _require_unbalanced(F: WeightedFan) -> None:
    if not F.rays or not is_completely_unbalanced(F):
        raise NotCompletelyUnbalanced("the fan has a balanced subfan")


def _balance_block(F: WeightedFan, block: Sequence[int]) -> tuple[WeightedFan, tuple, bool]:
    rays = [F.rays[i] for i in block]
    s = ZERO
    for r in rays:
        s = add(s, r)
    extra = neg(s)
    degenerate = any(same_direction(extra, r) for r in rays)
    return WeightedFan(F.base, tuple(rays) + (extra,)), extra, degenerate


def minimal_balancing_fan_mlen(F: WeightedFan) -> BalancingResult:
    _require_unbalanced(F)
    block = tuple(range(len(F.rays)))
    Y, extra, degenerate = _balance_block(F, block)
    return BalancingResult(Y, (block,), (extra,), len(Y.rays), len(Y.rays), degenerate)


def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of ``range(n)`` in lexicographic restricted-growth order."""
    if n == 0:
        yield ()
        return

    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for i, b in enumerate(prefix):
                blocks[b].append(i)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from grow(prefix, max(top, b))
            prefix.pop()

    yield from grow([0], 0)


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _fans_meet_only_at_base(fans: Sequence[WeightedFan]) -> bool:
    for A, B in combinations(fans, 2):
        if any(same_direction(u, v) for u in A.rays for v in B.rays):
            return False
    return True


def union_mlen(fans: Sequence[WeightedFan]) -> int:
    """Regions cut out by fans sharing one base point."""
    dirs = {primitive(r) for F in fans for r in F.rays}
    return max(len(dirs), 1)


def fan_is_generic(F: WeightedFan) -> bool:
    """No block balancing of any partition creates overlapping rays.

    Equivalent to: no added ray ``-sum(B)`` points along an input ray, and
    disjoint blocks never receive added rays of the same direction.
    """
    n = len(F.rays)
    extras = {}
    for mask in range(1, 1 << n):
        s = ZERO
        for i in range(n):
            if mask >> i & 1:
                s = add(s, F.rays[i])
        if s == ZERO or any(same_direction(neg(s), r) for r in F.rays):
            return False
        extras[mask] = primitive(neg(s))
    by_dir: dict[tuple[int, ...], list[int]] = {}
    for mask, d in extras.items():
        by_dir.setdefault(d, []).append(mask)
    for masks in by_dir.values():
        for a, b in combinations(masks, 2):
            if a & b == 0:
                return False
    return True


def enumerate_flen_minimal_balancings(F: WeightedFan) -> list[BalancingResult]:
    _require_unbalanced(F)
    if len(F.rays) > PARTITION_LIMIT:
        raise ValueError(f"partition enumeration is limited to {PARTITION_LIMIT} rays")
    out = []
    for part in set_partitions(len(F.rays)):
        fans, extras, degenerate = [], [], False
        for block in part:
            Y, extra, deg = _balance_block(F, block)
            fans.append(Y)
            extras.append(extra)
            degenerate |= deg
        degenerate |= not _fans_meet_only_at_base(fans)
        f = sum(len(Y.rays) for Y in fans) - (len(fans) - 1)
        out.append(BalancingResult(tuple(fans), part, tuple(extras), union_mlen(fans), f, degenerate))
    return out


# ---------------------------------------------------------------------------
# fans to signomials


def fan_to_signomial(F: WeightedFan) -> Signomial:
    """Signomial whose tropical curve is the balanced fan F.

    Edge vectors of the dual polygon are the rays rotated a quarter turn
    counterclockwise; chained in angular order from the origin they close up
    because the fan is balanced.  All monomials tie at the base point.
    """
    if F.ray_sum() != ZERO:
        raise ValueError("only balanced fans are curves")
    if not F.rays:
        return Signomial.constant(0, 2)
    edges = sorted((rot_ccw(r) for r in F.rays), key=angle_key)
    exps: list[Point] = [(Fraction(0), Fraction(0))]
    for e in edges[:-1]:
        exps.append(add(exps[-1], e))
    return Signomial(2, tuple(Monomial(e, -dot(e, F.base)) for e in exps))


@dataclass(frozen=True)
class SignedFan:
    base: Point
    positive: WeightedFan
    negative: WeightedFan

    def __post_init__(self):
        base = as_point(self.base)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "positive", self.positive.translated(base))
        object.__setattr__(self, "negative", self.negative.translated(base))
        for u in self.positive.rays:
            for v in self.negative.rays:
                if same_direction(u, v):
                    raise ValueError("positive and negative parts share a ray direction")

    @classmethod
    def of(cls, base, positive: Iterable, negative: Iterable) -> SignedFan:
        base = as_point(base)
        return cls(base, WeightedFan.of(base, positive), WeightedFan.of(base, negative))

    @classmethod
    def from_signed_complex(cls, S: SignedComplex) -> SignedFan:
        parts = (S.positive.canonical(), S.negative.canonical())
        verts = {v for X in parts for v in X.vertices}
        if len(verts) > 1 or any(X.segments for X in parts):
            raise NotAFan("the complex is not a fan")
        if not verts:
            raise NotAFan("the complex is empty")
        base = verts.pop()
        return cls(base, *(WeightedFan(base, tuple(e.w for e in X.edges)) for X in parts))

    def signed_rays(self) -> list[tuple[Fraction, Fraction]]:
        return list(self.positive.rays) + [neg(r) for r in self.negative.rays]

    def is_sign_balanced(self) -> bool:
        s = ZERO
        for v in self.signed_rays():
            s = add(s, v)
        return s == ZERO

    def to_signed_complex(self) -> SignedComplex:
        return SignedComplex(self.positive.to_complex(), self.negative.to_complex())

    def to_json(self) -> dict:
        return {
            "base": [str(c) for c in self.base],
            "positive": [[str(c) for c in r] for r in self.positive.rays],
            "negative": [[str(c) for c in r] for r in self.negative.rays],
        }

    @classmethod
    def from_json(cls, data: dict) -> SignedFan:
        return cls.of(data["base"], data.get("positive", []), data.get("negative", []))


def is_irreducible_fan(S: SignedFan) -> bool:
    """No proper nonempty subset of signed rays (at full weight) is sign-balanced."""
    vecs = S.signed_rays()
    count = zero_subset_count(vecs)
    if S.is_sign_balanced():
        count -= 1
    return count == 0


def _balance_part(F: WeightedFan) -> WeightedFan:
    if not F.rays or F.ray_sum() == ZERO:
        return F
    return minimal_balancing_fan_mlen(F).balancing


def minimal_representation_fan(S: SignedFan | SignedComplex) -> RationalRep:
    if isinstance(S, SignedComplex):
        S = SignedFan.from_signed_complex(S)
    if not is_irreducible_fan(S):
        raise Reducible("the signed fan decomposes into sign-balanced pieces")
    g = fan_to_signomial(_balance_part(S.positive))
    h = fan_to_signomial(_balance_part(S.negative))
    return RationalRep(Factorization.of(g), Factorization.of(h))


# ---------------------------------------------------------------------------
# canonical arrangements


@dataclass(frozen=True)
class Line:
    point: Point
    direction: tuple[int, int]
    w: tuple[Fraction, Fraction]

    def to_complex(self) -> PlanarComplex:
        return PlanarComplex.from_parts((), lines=[(self.point, self.w)])

    def to_signomial(self) -> Signomial:
        n = rot_ccw(self.w)
        return Signomial.from_terms([(0, (0, 0)), (-dot(n, self.point), n)])


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[Line, ...]

    @property
    def flen(self) -> int:
        return len(self.lines) + 1 if self.lines else 1

    def to_complex(self) -> PlanarComplex:
        return overlay(*[ln.to_complex() for ln in self.lines])

    def to_factorization(self) -> Factorization:
        if not self.lines:
            return Factorization.of(Signomial.constant(0, 2))
        return Factorization(tuple(ln.to_signomial() for ln in self.lines))

    def to_json(self) -> dict:
        return {
            "lines": [
                {"point": [str(c) for c in ln.point], "direction": list(ln.direction), "w": [str(c) for c in ln.w]}
                for ln in self.lines
            ],
            "flen": self.flen,
        }


def _span_direction(w) -> tuple[int, int]:
    d = primitive(w)
    return d if d > (0, 0) else (-d[0], -d[1])


def canonical_arrangement(X: PlanarComplex) -> Arrangement:
    best: dict[tuple, tuple[Fraction, Point]] = {}
    for e in X.edges:
        d = _span_direction(e.w)
        df = (Fraction(d[0]), Fraction(d[1]))
        p = X.vertices[e.a]
        key = (d, cross2(df, p))
        lam = abs(dot(e.w, df)) / dot(df, df)
        if key not in best or lam > best[key][0]:
            best[key] = (lam, line_anchor(p, df))
    lines = tuple(
        Line(pt, d, scale(lam, (Fraction(d[0]), Fraction(d[1])))) for (d, _), (lam, pt) in sorted(best.items())
    )
    return Arrangement(lines)


@dataclass(frozen=True)
class FlenBoundReport:
    arrangement_flen: int
    balancing_flen: int
    holds: bool
    balances: bool | None

    def to_json(self) -> dict:
        return {"arrangement_flen": self.arrangement_flen, "balancing_flen": self.balancing_flen,
                "bound": 3 * self.balancing_flen, "holds": self.holds, "balances": self.balances}


def verify_flen_bound(X: PlanarComplex, V: Factorization | int) -> FlenBoundReport:
    """Check ``flen(A_X) <= 3 flen(V)`` for a known minimal balancing V of X."""
    a = canonical_arrangement(X).flen
    balances = None
    if isinstance(V, Factorization):
        balances = dominates(overlay(*[tropical_curve(f) for f in V.factors]), X)
        v = flen(V)
    else:
        v = int(V)
    return FlenBoundReport(a, v, a <= 3 * v, balances)


def block_factorization(result: BalancingResult) -> Factorization:
    return Factorization(tuple(fan_to_signomial(F) for F in result.fans))


# ---------------------------------------------------------------------------
# unions of fans


def _ray_hits(base: Point, r, q: Point) -> bool:
    d = sub(q, base)
    return cross2(d, r) == 0 and dot(d, r) > 0


def minimal_balancing_union(fans: Sequence[WeightedFan], strict: bool = False) -> list[WeightedFan]:
    """Per-fan minimal balancings of fans in general position.

    General position: distinct bases, no ray of one balanced fan parallel to
    a ray of another or passing through another base.  ``strict`` also
    requires all input rays together to lie in an open half-plane, which is
    what makes every block of every cover need one extra ray.
    """
    for F in fans:
        _require_unbalanced(F)
    if strict and _positively_dependent([r for F in fans for r in F.rays]):
        raise NotGeneric("the combined recession fan is not completely unbalanced")
    bases = [F.base for F in fans]
    if len(set(bases)) != len(bases):
        raise NotGeneric("fan bases must be pairwise distinct")
    balanced = [minimal_balancing_fan_mlen(F).balancing for F in fans]
    for i, j in combinations(range(len(fans)), 2):
        A, B = balanced[i], balanced[j]
        for r in A.rays:
            if _ray_hits(A.base, r, B.base):
                raise NotGeneric(f"a ray of fan {i} passes through the base of fan {j}")
        for r in B.rays:
            if _ray_hits(B.base, r, A.base):
                raise NotGeneric(f"a ray of fan {j} passes through the base of fan {i}")
        if any(cross2(u, v) == 0 for u in A.rays for v in B.rays):
            raise NotGeneric(f"fans {i} and {j} have parallel rays")
    return balanced


def union_flen(balancings: Sequence[WeightedFan]) -> int:
    return sum(len(F.rays) for F in balancings) - (len(balancings) - 1)


def partition_lower_bound(fans: Sequence[WeightedFan], partition: Sequence[Sequence[tuple[int, int]]]) -> int:
    """Lower bound on flen for balancings whose factors cover the given blocks.

    Blocks are lists of ``(fan index, ray index)``.  A factor covering a block
    needs at least as many unbounded directions as a balancing of the
    block's recession fan, and regions are at least unbounded directions.
    """
    total = 0
    for block in partition:
        rays = [fans[k].rays[i] for k, i in block]
        R = WeightedFan((Fraction(0), Fraction(0)), tuple(rays))
        if R.ray_sum() == ZERO:
            need = len(R.rays)
        elif is_completely_unbalanced(R, fractional=True):
            need = len(R.rays) + 1
        else:
            need = len(R.rays)
        total += max(need, 2)
    return total - (len(partition) - 1)


def cheapest_partition_bound(fans: Sequence[WeightedFan]) -> int:
    labels = [(k, i) for k, F in enumerate(fans) for i in range(len(F.rays))]
    best = None
    for part in set_partitions(len(labels)):
        lb = partition_lower_bound(fans, [[labels[i] for i in b] for b in part])
        best = lb if best is None else min(best, lb)
    return best


# ---------------------------------------------------------------------------
# non-uniqueness witness


def witness_g() -> Signomial:
    return Signomial.from_terms([(1, (1, -1)), (1, (0, -2)), (1, (-1, -1)), (1, (0, 0)), (0, (0, 1))])


def witness_h_literal() -> Factorization:
    return Factorization.of(
        Signomial.from_terms([(0, (-1, -1)), (0, (0, 0))]),
        Signomial.from_terms([(-2, (1, -1)), (0, (0, 0))]),
        Signomial.from_terms([(0, (0, 1)), (0, (0, 0))]),
    )


def witness_h() -> Factorization:
    """Three lines spanning the bounded triangle of the curve of ``witness_g``."""
    return Factorization.of(
        Signomial.from_terms([(0, (-1, -1)), (0, (0, 0))]),
        Signomial.from_terms([(0, (1, -1)), (0, (0, 0))]),
        Signomial.from_terms([(0, (0, 1)), (1, (0, 0))]),
    )


@dataclass(frozen=True)
class Witness:
    X: PlanarComplex
    Y1: Signomial
    Y2: Factorization
    mlen_Y1: int
    mlen_Y2: int
    flen_Y1: int
    flen_Y2: int
    balances: tuple[bool, bool]

    @property
    def holds(self) -> bool:
        return all(self.balances) and self.mlen_Y1 < self.mlen_Y2 and self.flen_Y1 > self.flen_Y2

    def to_json(self) -> dict:
        return {
            "X": self.X.to_json(),
            "Y1": str(self.Y1),
            "Y2": str(self.Y2),
            "mlen": [self.mlen_Y1, self.mlen_Y2],
            "flen": [self.flen_Y1, self.flen_Y2],
            "balances": list(self.balances),
            "holds": self.holds,
        }


def balancing_not_unique_witness() -> Witness:
    g, h = witness_g(), witness_h()
    G = tropical_curve(g)
    H = overlay(*[tropical_curve(f) for f in h.factors])
    common = intersection_complex(G, H)
    X = PlanarComplex.from_parts(
        (), segments=[(common.vertices[e.a], common.vertices[e.b], e.w) for e in common.segments]
    ).canonical()
    return Witness(
        X, g, h, mlen(g), mlen(h), flen(g), flen(h), (dominates(G, X), dominates(H, X))
    )
