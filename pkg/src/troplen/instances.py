"""Fixed worked instances used by the verification suite, the CLI and the tests."""

from __future__ import annotations

from .minimize import SignedFan, witness_g, witness_h_literal
from .parser import parse_rational_rep, parse_signomial
from .signomial import Factorization, RationalRep, Signomial

# Two tropical curves with three-monomial Newton triangles meeting in three
# transversal points; their overlay has 5 vertices, 12 edges and 8 regions.
TRIPOD_PAIR_TEXT = ("x + y + 0", "0 + 1*x^-1 + x^-2*y^-1")

# Two triangles sharing two edge directions; their product has a 4-gon
# Newton polygon and the curves overlap along two rays.
OVERLAPPING_TRIANGLES_TEXT = ("x + y + 0", "x^2 + y + 0")

RATIONAL_REP_TEXT = ("(x + 0)*(y + 0) / (x + y + 0)", "(x*y + x + y) / (x + y)")

CORNER_EXAMPLE_TEXT = "(x + y + 0) / (x + y)"


def tripod_pair() -> list[Signomial]:
    return [parse_signomial(t, 2) for t in TRIPOD_PAIR_TEXT]


def overlapping_triangles() -> list[Signomial]:
    return [parse_signomial(t, 2) for t in OVERLAPPING_TRIANGLES_TEXT]


def rational_reps() -> tuple[RationalRep, RationalRep]:
    a, b = (parse_rational_rep(t, 2) for t in RATIONAL_REP_TEXT)
    return a, b


def corner_example() -> RationalRep:
    return parse_rational_rep(CORNER_EXAMPLE_TEXT, 2)


def corner_example_fan() -> SignedFan:
    """Signed fan of max(x, y, 0) - max(x, y)."""
    return SignedFan.of((0, 0), [(0, -1), (-1, 0)], [(-1, -1)])


def two_notions_pair() -> tuple[Signomial, Factorization]:
    return witness_g(), witness_h_literal()

