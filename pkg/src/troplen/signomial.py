"""Tropical signomials over the max-plus semiring with rational data.

A signomial is a finite max of affine forms ``c + <e, x>``; a factorization
is a tropical product of signomials and a rational representation is a
difference of two factorizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .exactgeom import (
    DimensionError,
    Point,
    Polytope,
    _ccw,
    as_fraction,
    as_point,
    convex_hull,
    upper_faces,
    upper_vertices,
)


@dataclass(frozen=True, order=True)
class Monomial:
    exp: Point
    coeff: Fraction

    @classmethod
    def of(cls, coeff, exp: Iterable) -> Monomial:
        return cls(as_point(exp), as_fraction(coeff))

    @property
    def lifted(self) -> Point:
        return self.exp + (self.coeff,)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return self.coeff + sum(e * xi for e, xi in zip(self.exp, x))


@dataclass(frozen=True)
class Signomial:
    """Tropical sum of monomials with pairwise distinct exponent vectors.

    Construct through :meth:`from_terms`, which merges repeated exponents by
    keeping the larger coefficient.
    """

    dim: int
    monomials: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.monomials:
            raise ValueError("a signomial needs at least one monomial")
        for m in self.monomials:
            if len(m.exp) != self.dim:
                raise DimensionError(f"monomial exponent {m.exp} does not have length {self.dim}")
        exps = [m.exp for m in self.monomials]
        if len(set(exps)) != len(exps) or exps != sorted(exps):
            best: dict[Point, Fraction] = {}
            for m in self.monomials:
                if m.exp not in best or m.coeff > best[m.exp]:
                    best[m.exp] = m.coeff
            object.__setattr__(
                self, "monomials", tuple(Monomial(e, c) for e, c in sorted(best.items()))
            )

    @classmethod
    def from_terms(cls, terms: Iterable[tuple], dim: int | None = None) -> Signomial:
        """Build from ``(coeff, exponents)`` pairs."""
        mons = [Monomial.of(c, e) for c, e in terms]
        if dim is None:
            if not mons:
                raise ValueError("cannot infer dimension of an empty signomial")
            dim = len(mons[0].exp)
        return cls(dim, tuple(mons))

    @classmethod
    def constant(cls, c=0, dim: int = 2) -> Signomial:
        return cls(dim, (Monomial((Fraction(0),) * dim, as_fraction(c)),))

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __mul__(self, other: Signomial) -> Signomial:
        return tropical_product(self, other)

    def coefficient(self, exp: Sequence) -> Fraction | None:
        exp = as_point(exp)
        for m in self.monomials:
            if m.exp == exp:
                return m.coeff
        return None

    def lifted_points(self) -> list[Point]:
        return [m.lifted for m in self.monomials]

    def shift(self, coeff=0, exp: Sequence | None = None) -> Signomial:
        """Tropical product with the single monomial ``coeff * x^exp``."""
        c = as_fraction(coeff)
        e = as_point(exp) if exp is not None else (Fraction(0),) * self.dim
        return Signomial(self.dim, tuple(
            Monomial(tuple(a + b for a, b in zip(m.exp, e)), m.coeff + c) for m in self.monomials
        ))

    def __str__(self) -> str:
        return format_signomial(self)


@dataclass(frozen=True)
class Factorization:
    """Tropical product of one or more signomials of equal dimension."""

    factors: tuple[Signomial, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a factorization needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))
        dims = {f.dim for f in self.factors}
        if len(dims) != 1:
            raise DimensionError(f"factors have mixed dimensions {sorted(dims)}")

    @classmethod
    def of(cls, *factors: Signomial) -> Factorization:
        return cls(tuple(factors))

    @property
    def dim(self) -> int:
        return self.factors[0].dim

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if len(self.factors) == 1:
            return str(self.factors[0])
        return "*".join(f"({f})" for f in self.factors)


@dataclass(frozen=True)
class RationalRep:
    """``numerator - denominator`` in ordinary arithmetic."""

    numerator: Factorization
    denominator: Factorization

    def __post_init__(self):
        if isinstance(self.numerator, Signomial):
            object.__setattr__(self, "numerator", Factorization.of(self.numerator))
        if isinstance(self.denominator, Signomial):
            object.__setattr__(self, "denominator", Factorization.of(self.denominator))
        if self.numerator.dim != self.denominator.dim:
            raise DimensionError("numerator and denominator dimensions differ")

    @property
    def dim(self) -> int:
        return self.numerator.dim

    def __str__(self) -> str:
        return f"{_paren(self.numerator)} / {_paren(self.denominator)}"


def _paren(f: Factorization) -> str:
    s = str(f)
    return f"({s})" if len(f.factors) == 1 and len(f.factors[0]) > 1 else s


# ---------------------------------------------------------------------------
# evaluation and algebra


def _check_point(dim: int, x) -> Point:
    x = as_point(x)
    if len(x) != dim:
        raise DimensionError(f"point of dimension {len(x)} for a signomial in {dim} variables")
    return x


def evaluate(s: Signomial | Factorization, x: Sequence) -> Fraction:
    if isinstance(s, Factorization):
        x = _check_point(s.dim, x)
        return sum((evaluate(f, x) for f in s.factors), Fraction(0))
    x = _check_point(s.dim, x)
    return max(m.value(x) for m in s.monomials)


def evaluate_rational(r: RationalRep, x: Sequence) -> Fraction:
    return evaluate(r.numerator, x) - evaluate(r.denominator, x)


def tropical_product(a: Signomial, b: Signomial) -> Signomial:
    if a.dim != b.dim:
        raise DimensionError("cannot multiply signomials of different dimensions")
    return Signomial(a.dim, tuple(
        Monomial(tuple(p + q for p, q in zip(m.exp, n.exp)), m.coeff + n.coeff)
        for m, n in product(a.monomials, b.monomials)
    ))


def tropical_sum(a: Signomial, b: Signomial) -> Signomial:
    if a.dim != b.dim:
        raise DimensionError("cannot add signomials of different dimensions")
    return Signomial(a.dim, a.monomials + b.monomials)


def expand(f: Factorization | Signomial, reduced: bool = False) -> Signomial:
    """Multiply out a factorization.

    With ``reduced=True`` every partial product is reduced on the way, which
    keeps the point count small; upper vertices of a Minkowski sum are sums
    of upper vertices of the summands, so the final reduced result is the same.
    """
    if isinstance(f, Signomial):
        return reduce(f) if reduced else f
    acc = reduce(f.factors[0]) if reduced else f.factors[0]
    for g in f.factors[1:]:
        acc = tropical_product(acc, reduce(g) if reduced else g)
        if reduced:
            acc = reduce(acc)
    return acc


def reduce(s: Signomial) -> Signomial:
    """Drop every monomial whose lifted point is not an upper vertex."""
    if len(s.monomials) == 1:
        return s
    keep = set(upper_vertices(s.lifted_points()))
    return Signomial(s.dim, tuple(m for m in s.monomials if m.lifted in keep))


def is_reduced(s: Signomial) -> bool:
    return len(reduce(s)) == len(s)


def mlen(s: Signomial | Factorization) -> int:
    """Monomial count of the reduced (expanded) signomial."""
    if isinstance(s, Factorization):
        return len(expand(s, reduced=True))
    return len(reduce(s))


def flen(f: Factorization | Signomial) -> int:
    if isinstance(f, Signomial):
        return mlen(f)
    return sum(mlen(g) for g in f.factors) - (len(f.factors) - 1)


def newton_polytope(s: Signomial) -> Polytope:
    if s.dim > 3:
        raise DimensionError("Newton polytopes are supported up to three variables")
    return convex_hull([m.exp for m in s.monomials], s.dim)


def lifted_newton(s: Signomial) -> Polytope:
    if s.dim > 3:
        raise DimensionError("lifted Newton polytopes are supported up to three variables")
    return convex_hull(s.lifted_points(), s.dim + 1)


# ---------------------------------------------------------------------------
# regular subdivision


@dataclass(frozen=True)
class Subdivision:
    """Regular subdivision of a planar Newton polygon.

    ``cells`` are the projected upper faces of the lifted Newton polytope;
    two-dimensional cells list their vertices counterclockwise.  When the
    Newton polytope is a segment the cells are consecutive segments.
    """

    base: Polytope
    cells: tuple[tuple[Point, ...], ...]
    vertices: tuple[Point, ...]

    @property
    def cell_dim(self) -> int:
        return min(max(len(c) for c in self.cells) - 1, 2)

    def edges(self) -> dict[tuple[Point, Point], list[int]]:
        """Map from each cell edge (sorted endpoint pair) to the 2-cells containing it."""
        out: dict[tuple[Point, Point], list[int]] = {}
        for i, cell in enumerate(self.cells):
            if len(cell) < 3:
                continue
            for a, b in zip(cell, cell[1:] + cell[:1]):
                out.setdefault(tuple(sorted((a, b))), []).append(i)
        return out


def regular_subdivision(s: Signomial) -> Subdivision:
    if s.dim != 2:
        raise DimensionError("regular subdivisions are computed for two variables only")
    r = reduce(s)
    base = newton_polytope(r)
    verts = tuple(sorted(m.exp for m in r.monomials))
    if len(r) == 1:
        return Subdivision(base, (verts,), verts)
    upper = {m.lifted for m in r.monomials}
    cells = []
    for face in upper_faces(s.lifted_points()):
        pts = [p[:-1] for p in face if p in upper]
        if base.affine_dim == 2:
            cells.append(tuple(_ccw(pts)))
        else:
            cells.append(tuple(sorted(pts)))
    cells.sort()
    return Subdivision(base, tuple(cells), verts)


# ---------------------------------------------------------------------------
# text rendering


_VARS = ("x", "y", "z")


def _var_names(dim: int) -> list[str]:
    return list(_VARS[:dim]) if dim <= 3 else [f"x{i + 1}" for i in range(dim)]


def _fmt_frac(q: Fraction) -> str:
    return str(q)


def format_monomial(m: Monomial) -> str:
    names = _var_names(len(m.exp))
    parts = []
    for name, e in zip(names, m.exp):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{_fmt_frac(e)}")
    if m.coeff != 0 or not parts:
        parts.insert(0, _fmt_frac(m.coeff))
    return "*".join(parts)


def format_signomial(s: Signomial) -> str:
    return " + ".join(format_monomial(m) for m in reversed(s.monomials))
