import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import signomials
from troplen.parser import (
    ParseError,
    factorization_from_json,
    factorization_to_json,
    parse_factorization,
    parse_rational,
    parse_rational_rep,
    parse_signomial,
    rational_from_json,
    rational_to_json,
    signomial_from_json,
    signomial_to_json,
    tokenize,
)
from troplen.signomial import Factorization, RationalRep, Signomial


def test_terms_and_coefficients():
    s = parse_signomial("1/2*x + -3*y^-2 + 0")
    assert s == Signomial.from_terms([(Fraction(1, 2), (1, 0)), (-3, (0, -2)), (0, (0, 0))])


def test_dimension_inference_and_override():
    assert parse_signomial("x + y").dim == 2
    assert parse_signomial("x + 0").dim == 1
    assert parse_signomial("x + 0", 3).dim == 3
    assert parse_signomial("x1 + x3").dim == 3
    with pytest.raises(ParseError):
        parse_signomial("x + z", 2)


def test_products_and_rationals():
    f = parse_factorization("(x + 0)*(y + 0)*x")
    assert len(f.factors) == 3
    r = parse_rational("(x + 0)/(y + 0)")
    assert r.denominator is not None
    assert parse_rational("x + y").denominator is None
    rep = parse_rational_rep("x + y")
    assert rep.denominator == Factorization.of(Signomial.constant(0, 2))


def test_signomial_rejects_products():
    with pytest.raises(ParseError):
        parse_signomial("(x + 0)*(y + 0)")
    with pytest.raises(ParseError):
        parse_factorization("(x + 0) / (y + 0)")


@pytest.mark.parametrize(
    "text,col",
    [("x + ", 5), ("x + y)", 6), ("2*x^", 5), ("x + @", 5)],
)
def test_error_positions(text, col):
    with pytest.raises(ParseError) as e:
        parse_rational(text)
    assert e.value.line == 1 and e.value.col == col


def test_error_line_tracking():
    with pytest.raises(ParseError) as e:
        parse_rational("x +\n  y + #")
    assert e.value.line == 2 and e.value.col == 7


def test_tokens():
    kinds = [t.kind for t in tokenize("2*x^-1 + y")]
    assert kinds == ["num", "op", "var", "op", "num", "op", "var", "end"]


def test_json_forms():
    s = parse_signomial("x*y^-1 + 1/3")
    d = signomial_to_json(s)
    assert d == {"dim": 2, "monomials": [{"coeff": "1/3", "exp": ["0", "0"]}, {"coeff": "0", "exp": ["1", "-1"]}]}
    f = parse_factorization("(x + 0)*(y + 1)")
    assert factorization_to_json(f)["factors"][1][0] == {"coeff": "1", "exp": ["0", "0"]}
    assert factorization_from_json(d) == Factorization.of(s)
    # numbers are accepted as well as strings
    assert signomial_from_json({"monomials": [{"coeff": 2, "exp": [1, 0]}]}) == parse_signomial("2*x", 2)


@given(signomials(max_terms=5))
def test_text_round_trip(s):
    assert parse_signomial(str(s), s.dim) == s


@given(signomials(dim=4, max_terms=4))
def test_text_round_trip_many_variables(s):
    assert parse_signomial(str(s), 4) == s


@given(st.lists(signomials(max_terms=3), min_size=1, max_size=3), st.lists(signomials(max_terms=3), min_size=1, max_size=2))
def test_rational_round_trips(num, den):
    r = RationalRep(Factorization(tuple(num)), Factorization(tuple(den)))
    assert parse_rational_rep(str(r), 2) == r
    assert rational_from_json(json.loads(json.dumps(rational_to_json(r)))) == r
    f = r.numerator
    assert factorization_from_json(json.loads(json.dumps(factorization_to_json(f)))) == f
    assert parse_factorization(str(f), 2) == f
