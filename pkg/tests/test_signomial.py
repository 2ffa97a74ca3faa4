from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import signomials, upper_oracle, vertices_oracle
from troplen.exactgeom import DimensionError, minkowski_sum_all
from troplen.minimize import witness_g, witness_h_literal
from troplen.parser import parse_factorization, parse_rational_rep, parse_signomial
from troplen.signomial import (
    Factorization,
    Signomial,
    evaluate,
    evaluate_rational,
    expand,
    flen,
    is_reduced,
    lifted_newton,
    mlen,
    newton_polytope,
    reduce,
    regular_subdivision,
    tropical_product,
)

F = Fraction
GRID = [F(i, 4) for i in range(-12, 13)]


def grid_equal(a, b, dim=2, grid=GRID):
    return all(evaluate(a, x) == evaluate(b, x) for x in product(grid, repeat=dim))


def S(text, dim=2):
    return parse_signomial(text, dim)


def test_evaluate_univariate():
    s = S("x + 0", 1)
    assert evaluate(s, [3]) == 3
    assert evaluate(s, [-2]) == 0


def test_evaluate_witness_g_at_origin():
    g = witness_g()
    assert evaluate(g, (0, 0)) == max(1 + 0 - 0, 1 + 0, 1 - 0, 0, 0) == 1


def test_evaluate_rational_example():
    r1, r2 = (parse_rational_rep(t, 2) for t in ("(x + 0)*(y + 0) / (x + y + 0)", "(x*y + x + y) / (x + y)"))
    assert evaluate_rational(r1, (2, 1)) == 1
    assert evaluate_rational(r1, (-1, -1)) == 0
    assert evaluate_rational(r2, (2, 1)) == 1
    for x in product(GRID[::2], repeat=2):
        assert evaluate_rational(r1, x) == evaluate_rational(r2, x)


def test_evaluate_dimension_mismatch():
    with pytest.raises(DimensionError):
        evaluate(S("x + y"), (1, 2, 3))


def test_expand_examples():
    f = parse_factorization("(x + 0)*(y + 0)", 2)
    assert expand(f) == S("x*y + x + y + 0")
    single = parse_factorization("x + y + 0", 2)
    assert expand(single) == single.factors[0]


def test_expand_witness_h_has_eight_points():
    h = witness_h_literal()
    e = expand(h)
    assert len(e) == 8
    exps = {m.exp for m in e}
    assert exps == {
        tuple(F(a + b + c) for a, b, c in zip(p, q, r))
        for p in ((-1, -1), (0, 0)) for q in ((1, -1), (0, 0)) for r in ((0, 1), (0, 0))
    }


def test_reduce_examples():
    s = S("0 + -1*x + x^2", 1)
    r = reduce(s)
    assert r == S("0 + x^2", 1)
    assert grid_equal(s, r, 1)
    assert S("x + x", 1) == S("x", 1)
    assert reduce(S("x^2 + x + 0", 1)) == S("x^2 + 0", 1)
    assert grid_equal(S("x^2 + x + 0", 1), S("x^2 + 0", 1), 1)


def test_duplicate_exponents_keep_max():
    s = Signomial.from_terms([(1, (1, 0)), (3, (1, 0))])
    assert len(s) == 1 and s.monomials[0].coeff == 3


def test_mlen_examples():
    assert mlen(witness_g()) == 5
    assert mlen(Signomial.constant(4)) == 1
    assert mlen(expand(parse_factorization("(x + 0)*(y + 0)", 2))) == 4


def test_flen_examples():
    assert flen(parse_factorization("(x + y)*(x + 0)*(y + 0)", 2)) == 4
    assert flen(parse_factorization("(x + y + 0)*(x*y + x + y)", 2)) == 5
    one = parse_factorization("x*y + x + y + 0", 2)
    assert flen(one) == mlen(one.factors[0])


def test_newton_examples():
    P = newton_polytope(S("x + y + 0"))
    assert P.vertex_set() == {(0, 0), (1, 0), (0, 1)}
    assert len(newton_polytope(S("3*x^2*y"))) == 1
    f = parse_factorization("(x + y + 0)*(x^2 + y + 1)*(x*y^-1 + 0)", 2)
    assert newton_polytope(expand(f)).vertex_set() == minkowski_sum_all(
        [newton_polytope(g) for g in f.factors]).vertex_set()
    L = lifted_newton(S("x + y + 0"))
    assert L.dim == 3 and len(L) == 3


def test_regular_subdivision_examples():
    sub = regular_subdivision(S("x + y + 0"))
    assert len(sub.cells) == 1 and len(sub.vertices) == 3
    g = witness_g()
    assert len(regular_subdivision(g).vertices) == 5
    hs = regular_subdivision(expand(witness_h_literal()))
    assert len(hs.cells) == 3
    for cell in hs.cells:
        assert len(cell) == 4
        a, b, c, d = cell
        assert tuple(x - y for x, y in zip(b, a)) == tuple(x - y for x, y in zip(c, d))


def test_witness_h_lengths():
    h = witness_h_literal()
    assert flen(h) == 4
    assert mlen(h) > mlen(witness_g())


@given(signomials())
def test_reduce_preserves_function(s):
    r = reduce(s)
    assert is_reduced(r)
    assert len(r) <= len(s)
    assert grid_equal(s, r)


@given(signomials(dim=1, max_terms=8, exp_bound=4))
def test_reduce_preserves_function_at_ties(s):
    # breakpoints of a univariate max are where two monomials tie
    pts = set(GRID)
    for a in s:
        for b in s:
            if a.exp != b.exp:
                t = (b.coeff - a.coeff) / (a.exp[0] - b.exp[0])
                pts.update({t, t + F(1, 97), t - F(1, 97)})
    r = reduce(s)
    assert all(evaluate(s, [t]) == evaluate(r, [t]) for t in pts)


@given(signomials(max_terms=7))
def test_mlen_matches_upper_vertex_oracle(s):
    assert mlen(s) == len(upper_oracle(s.lifted_points()))


@given(st.lists(signomials(max_terms=3), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_flen_invariant_under_reorder(factors, rnd):
    f = Factorization(tuple(factors))
    shuffled = list(factors)
    rnd.shuffle(shuffled)
    assert flen(f) == flen(Factorization(tuple(shuffled)))


@given(st.lists(signomials(max_terms=3), min_size=1, max_size=3),
       st.integers(-3, 3), st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_flen_mlen_invariant_under_monomial_shift(factors, c, e):
    f = Factorization(tuple(factors))
    g = Factorization((factors[0].shift(c, e),) + tuple(factors[1:]))
    assert flen(f) == flen(g)
    assert mlen(f) == mlen(g)


@given(signomials(max_terms=4), signomials(max_terms=4))
def test_product_evaluates_as_sum(a, b):
    p = tropical_product(a, b)
    for x in product(GRID[::3], repeat=2):
        assert evaluate(p, x) == evaluate(a, x) + evaluate(b, x)
    assert mlen(p) <= mlen(a) * mlen(b)
    assert mlen(p) >= max(mlen(a), mlen(b))


@given(st.lists(signomials(max_terms=3), min_size=1, max_size=3))
def test_reduced_expansion_equals_full(factors):
    f = Factorization(tuple(factors))
    assert reduce(expand(f)) == expand(f, reduced=True)


@given(signomials(max_terms=6))
def test_newton_vertices_oracle(s):
    assert newton_polytope(s).vertex_set() == vertices_oracle([m.exp for m in s])


def test_subdivision_cell_dimension_and_edges():
    assert regular_subdivision(S("x + y + 0")).cell_dim == 2
    assert regular_subdivision(S("x^2 + x + 0")).cell_dim == 1
    assert regular_subdivision(S("3*x*y")).cell_dim == 0
    sub = regular_subdivision(expand(witness_h_literal()))
    shared = [e for e, cells in sub.edges().items() if len(cells) == 2]
    # three parallelograms around a common vertex share three interior edges
    assert len(shared) == 3
