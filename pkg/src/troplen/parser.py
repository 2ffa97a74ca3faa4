"""Text and JSON formats for signomials, factorizations and rational representations.

Text grammar (``+`` is the tropical sum, ``*`` the tropical product)::

    rational  := product ( "/" product )?
    product   := group ( "*" group )*  |  signomial
    group     := "(" signomial ")"  |  term
    signomial := term ( "+" term )*
    term      := atom ( "*" atom )*
    atom      := NUMBER  |  VAR ( "^" NUMBER )?

NUMBER is ``-?\\d+(/\\d+)?``; VAR is ``x``, ``y``, ``z`` or ``x1``, ``x2``, ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactgeom import as_fraction
from .signomial import Factorization, Monomial, RationalRep, Signomial

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>-?\d+(?:/\d+)?)|(?P<var>x\d+|[xyz])|(?P<op>[-+*/^()])"
)
_LETTERS = {"x": 1, "y": 2, "z": 3}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rfind("\n") + 1
        else:
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(Token("end", "", line, pos - line_start + 1))
    return out


def _var_index(name: str) -> int:
    if name in _LETTERS:
        return _LETTERS[name]
    return int(name[1:])


class _Parser:
    def __init__(self, text: str, dim: int | None):
        self.toks = tokenize(text)
        self.i = 0
        self.dim = dim
        self.max_var = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")

    def number(self) -> Fraction:
        if self.tok.kind != "num":
            self.error(f"expected a number, found {self.tok.text or 'end of input'!r}")
        t = self.tok.text
        self.i += 1
        if "/" in t and t.split("/")[1].strip("0") == "":
            self.error("zero denominator", self.toks[self.i - 1])
        return Fraction(t)

    # raw monomials are (coeff, {var index: exponent}) pairs until the dimension is known
    def term(self):
        coeff = Fraction(0)
        exps: dict[int, Fraction] = {}
        while True:
            if self.tok.kind == "num":
                coeff += self.number()
            elif self.tok.kind == "var":
                k = _var_index(self.tok.text)
                if k < 1:
                    self.error("variables are numbered from 1")
                self.i += 1
                e = Fraction(1)
                if self.accept("^"):
                    e = self.number()
                exps[k] = exps.get(k, Fraction(0)) + e
                self.max_var = max(self.max_var, k)
            else:
                self.error(f"expected a number or variable, found {self.tok.text or 'end of input'!r}")
            if not (self.tok.kind == "op" and self.tok.text == "*" and self.toks[self.i + 1].kind in ("num", "var")):
                return coeff, exps
            self.i += 1

    def signomial(self):
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return terms

    def group(self):
        if self.accept("("):
            s = self.signomial()
            self.expect(")")
            return s
        return [self.term()]

    def product(self):
        if self.tok.kind == "op" and self.tok.text == "(":
            groups = [self.group()]
            while self.accept("*"):
                groups.append(self.group())
            return groups
        return [self.signomial()]

    def rational(self):
        num = self.product()
        den = None
        if self.accept("/"):
            den = self.product()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return num, den

    def build(self, terms) -> Signomial:
        d = self.dim if self.dim is not None else max(self.max_var, 1)
        if self.max_var > d:
            raise ParseError(f"variable index {self.max_var} exceeds dimension {d}", 1, 1)
        mons = []
        for coeff, exps in terms:
            mons.append(Monomial(tuple(exps.get(k, Fraction(0)) for k in range(1, d + 1)), coeff))
        return Signomial(d, tuple(mons))


def parse_signomial(text: str, dim: int | None = None) -> Signomial:
    f = parse_factorization(text, dim)
    if len(f.factors) != 1:
        raise ParseError("expected a single signomial, found a product", 1, 1)
    return f.factors[0]


def parse_factorization(text: str, dim: int | None = None) -> Factorization:
    r = parse_rational(text, dim)
    if r.denominator is not None:
        raise ParseError("a factorization cannot contain '/'", 1, 1)
    return r.numerator


@dataclass(frozen=True)
class _Parsed:
    numerator: Factorization
    denominator: Factorization | None


def parse_rational(text: str, dim: int | None = None):
    """Parse ``num / den`` (or a bare factorization, with ``denominator`` None)."""
    p = _Parser(text, dim)
    num, den = p.rational()
    n = Factorization(tuple(p.build(g) for g in num))
    d = Factorization(tuple(p.build(g) for g in den)) if den is not None else None
    return _Parsed(n, d)


def parse_rational_rep(text: str, dim: int | None = None) -> RationalRep:
    r = parse_rational(text, dim)
    den = r.denominator or Factorization.of(Signomial.constant(0, r.numerator.dim))
    return RationalRep(r.numerator, den)


# ---------------------------------------------------------------------------
# JSON mirror


def signomial_to_json(s: Signomial) -> dict:
    return {"dim": s.dim, "monomials": _monomials_json(s)}


def signomial_from_json(data: dict) -> Signomial:
    items = data["monomials"]
    dim = int(data["dim"]) if "dim" in data else len(items[0]["exp"])
    return _monomials_from_json(items, dim)


def _monomials_json(s: Signomial) -> list[dict]:
    return [{"coeff": str(m.coeff), "exp": [str(e) for e in m.exp]} for m in s.monomials]


def _monomials_from_json(items: list, dim: int) -> Signomial:
    mons = [Monomial(tuple(as_fraction(e) for e in m["exp"]), as_fraction(m["coeff"])) for m in items]
    return Signomial(dim, tuple(mons))


def factorization_to_json(f: Factorization) -> dict:
    return {"dim": f.dim, "factors": [_monomials_json(g) for g in f.factors]}


def factorization_from_json(data: dict) -> Factorization:
    """Accepts the factorization form and, for convenience, a single signomial."""
    if "monomials" in data:
        return Factorization.of(signomial_from_json(data))
    factors = data["factors"]
    if not factors:
        raise ValueError("a factorization needs at least one factor")
    dim = int(data["dim"]) if "dim" in data else len(factors[0][0]["exp"])
    return Factorization(tuple(_monomials_from_json(g, dim) for g in factors))


def rational_to_json(r: RationalRep) -> dict:
    return {"numerator": factorization_to_json(r.numerator), "denominator": factorization_to_json(r.denominator)}


def rational_from_json(data: dict) -> RationalRep:
    return RationalRep(factorization_from_json(data["numerator"]), factorization_from_json(data["denominator"]))
