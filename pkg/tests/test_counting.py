from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import vertices_oracle
from troplen.counting import (
    check_lower_bound,
    check_minkowski_bound,
    genericity,
    linear_region_bound,
    lower_bound_rhs,
    minkowski_lower_bound_rhs,
    region_count_formula,
    zonotope,
    zonotope_bound,
)
from troplen.exactgeom import convex_hull
from troplen.generators import (
    generic_binomial_lines,
    random_curve_signomial,
    random_family,
    random_generic_family,
    random_generic_segments,
    random_generic_triangle_pair,
    random_simplex,
    rng_for,
)
from troplen.instances import overlapping_triangles, rational_reps, tripod_pair
from troplen.parser import parse_signomial
from troplen.plancomplex import (
    corner_locus,
    euler_characteristic,
    intersection_complex,
    region_count_oracle,
    tropical_curve,
)
from troplen.signomial import Factorization, RationalRep, Signomial, mlen

seeds = st.integers(0, 10**6)


def S(text):
    return parse_signomial(text, 2)


def test_two_tropical_lines():
    rep = region_count_formula(tripod_pair(), oracle=True)
    assert rep.mlen_formula == rep.mlen_oracle == 8
    assert rep.flen == 5
    assert rep.correction_terms == {(0, 1): 3}
    assert rep.generic and not rep.tight


def test_single_signomial():
    g = S("1*x*y^-1 + 1*y^-2 + 1*x^-1*y^-1 + 1 + y")
    rep = region_count_formula([g])
    assert rep.mlen_formula == mlen(g) == 5
    assert rep.correction_terms == {}


def test_three_ordinary_lines():
    gs = [S("x + 0"), S("y + 0"), S("x + -3*y")]  # x = 0, y = 0, x = y - 3
    assert genericity([tropical_curve(g) for g in gs])[0]
    rep = region_count_formula(gs, oracle=True)
    assert rep.mlen_formula == rep.mlen_oracle == 7 == 1 + 3 + comb(3, 2)
    assert rep.tight


def test_formula_rejects_other_dimensions():
    with pytest.raises(Exception):
        region_count_formula([S("x + 0")], d=3)


def test_lower_bound_rhs_examples():
    assert lower_bound_rhs(2, 2, 5) == 6
    for m in range(1, 7):
        assert lower_bound_rhs(m, 2, m + 1) == (m + 1) + comb(m, 2)
    assert lower_bound_rhs(1, 2, 7) == 7
    assert lower_bound_rhs(3, 3, 4) == 4 + 3 + 1


def test_check_lower_bound_examples():
    r = check_lower_bound(tripod_pair())
    assert r.holds and not r.tight and r.generic
    assert r.mlen == 8 and r.rhs == 6
    lines = check_lower_bound([S("x + 0"), S("y + 0")])
    assert lines.holds and lines.tight
    bad = check_lower_bound(overlapping_triangles())
    assert not bad.holds and not bad.generic
    assert bad.mlen == 4 and bad.rhs == 6


def test_minkowski_rhs_examples():
    assert minkowski_lower_bound_rhs([3, 3], 2, 2) == 6
    assert minkowski_lower_bound_rhs([2] * 4, 4, 3) == 14 == zonotope_bound(4, 3)
    assert minkowski_lower_bound_rhs([5], 1, 3) == 5


def test_check_minkowski_examples():
    rng = rng_for(3)
    P, Q = random_generic_triangle_pair(rng)
    rep = check_minkowski_bound([P, Q])
    assert rep.vertices == rep.rhs == 6 and rep.holds
    segs = [convex_hull([(0, 0), v]) for v in ((1, 0), (0, 1), (1, 1))]
    rep = check_minkowski_bound(segs)
    assert rep.vertices == 6 and rep.holds
    P3, Q3 = random_simplex(rng, 3), random_simplex(rng, 3)
    # triangles in three dimensions: drop one vertex of each simplex
    T1 = convex_hull(P3.vertices[:3], 3)
    T2 = convex_hull(Q3.vertices[:3], 3)
    rep = check_minkowski_bound([T1, T2])
    assert rep.holds and rep.vertices >= 6


def test_zonotope_vertices_match_brute_force():
    vs = random_generic_segments(rng_for(11), 4, 3)
    Z = zonotope(vs)
    sums = [tuple(sum(s * v[i] for s, v in zip(signs, vs)) for i in range(3)) for signs in product((0, 1), repeat=4)]
    assert Z.vertex_set() == vertices_oracle(sums)
    assert len(Z) == 14


def test_linear_region_bound_examples():
    _, r2 = rational_reps()
    G = tropical_curve(r2.numerator.factors[0])
    H = tropical_curve(r2.denominator.factors[0])
    assert linear_region_bound(r2) == 3 + 2 + euler_characteristic(intersection_complex(G, H))
    g = S("x^2 + x*y + 1 + y^-1")
    assert linear_region_bound(RationalRep(g, Signomial.constant(0))) == mlen(g) + 1


@settings(max_examples=25)
@given(seeds, st.integers(1, 4))
def test_formula_matches_oracle(seed, m):
    gs = random_family(rng_for(seed), m, 5)
    rep = region_count_formula(gs, oracle=True)
    assert rep.mlen_formula == rep.mlen_oracle == mlen(Factorization(tuple(gs)))


@settings(max_examples=15)
@given(seeds, st.integers(2, 3))
def test_generic_families_obey_bound(seed, m):
    gs = random_generic_family(rng_for(seed), m, 4)
    rep = region_count_formula(gs)
    assert rep.generic
    assert check_lower_bound(gs).holds
    assert rep.mlen_formula - rep.flen >= comb(m, 2)
    # subsets of size > 2 are empty for generic families
    assert all(v == 0 for k, v in rep.correction_terms.items() if len(k) > 2)


@settings(max_examples=10)
@given(seeds, st.integers(2, 5))
def test_binomial_lines_are_tight(seed, m):
    gs = generic_binomial_lines(rng_for(seed), m)
    rep = region_count_formula(gs, oracle=True)
    assert rep.tight
    assert rep.mlen_formula == rep.mlen_oracle == 1 + m + comb(m, 2)
    assert check_lower_bound(gs).tight


@settings(max_examples=25)
@given(seeds)
def test_linear_regions_within_bound(seed):
    rng = rng_for(seed)
    r = RationalRep(random_curve_signomial(rng, 4), random_curve_signomial(rng, 4))
    assert region_count_oracle(corner_locus(r).support()) <= linear_region_bound(r)


@settings(max_examples=20)
@given(seeds, st.integers(2, 4))
def test_generic_triangles_and_segments(seed, m):
    rng = rng_for(seed)
    P, Q = random_generic_triangle_pair(rng)
    assert check_minkowski_bound([P, Q]).vertices == 6
    vs = random_generic_segments(rng, m, 3)
    assert len(zonotope(vs)) == zonotope_bound(m, 3)
