"""Command-line interface.

Every verb prints one JSON document on standard output.  Inputs are inline
expressions, paths to files holding one expression per line, or ``-`` for
standard input; with ``--json`` they are JSON documents instead.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .counting import (
    check_lower_bound,
    check_minkowski_bound,
    linear_region_bound,
    region_count_formula,
)
from .exactgeom import DimensionError, as_point, convex_hull
from .minimize import (
    PL1D,
    NotAFan,
    NotCompletelyUnbalanced,
    NotGeneric,
    Reducible,
    SignedFan,
    balancing_not_unique_witness,
    canonical_arrangement,
    enumerate_flen_minimal_balancings,
    minimal_balancing_fan_mlen,
    minimal_representation_1d,
    minimal_representation_fan,
    rep_flen,
    rep_mlen,
)
from .parser import (
    ParseError,
    factorization_from_json,
    factorization_to_json,
    parse_rational,
    rational_from_json,
    rational_to_json,
    signomial_to_json,
)
from .plancomplex import (
    PlanarComplex,
    WeightedFan,
    corner_locus,
    euler_characteristic,
    is_balanced,
    overlay,
    recession_fan,
    region_count_oracle,
    tropical_curve,
)
from .signomial import (
    Factorization,
    RationalRep,
    Signomial,
    evaluate,
    evaluate_rational,
    expand,
    flen,
    lifted_newton,
    mlen,
    newton_polytope,
    reduce,
    regular_subdivision,
)
from .svg import render, render_complex, render_signed

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2

_ERROR_CODES = (
    (ParseError, "parse_error"),
    (json.JSONDecodeError, "json_error"),
    (DimensionError, "dimension_error"),
    (NotCompletelyUnbalanced, "not_completely_unbalanced"),
    (Reducible, "reducible"),
    (NotGeneric, "not_generic"),
    (NotAFan, "not_a_fan"),
    (FileNotFoundError, "file_not_found"),
    (KeyError, "missing_field"),
    (ValueError, "invalid_input"),
    (ZeroDivisionError, "invalid_input"),
)


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input handling


def _read_texts(items: list[str]) -> list[str]:
    """Expand file paths and ``-`` into their non-empty, non-comment lines."""
    out: list[str] = []
    for item in items:
        if item == "-":
            lines = sys.stdin.read().splitlines()
        elif "\n" not in item and len(item) < 4096 and Path(item).is_file():
            lines = Path(item).read_text().splitlines()
        else:
            out.append(item)
            continue
        out.extend(ln for ln in (s.strip() for s in lines) if ln and not ln.startswith("#"))
    return out


def _read_json_docs(items: list[str]) -> list:
    docs = []
    for item in items:
        if item == "-":
            docs.append(json.load(sys.stdin))
        elif not item.lstrip().startswith(("{", "[")) and Path(item).is_file():
            docs.append(json.loads(Path(item).read_text()))
        else:
            docs.append(json.loads(item))
    return docs


def _rationals(args) -> list:
    """Parsed inputs: Factorization, or RationalRep when a '/' was present."""
    if args.json:
        out = []
        for d in _read_json_docs(args.inputs):
            out.append(rational_from_json(d) if "numerator" in d else factorization_from_json(d))
        return out
    out = []
    for text in _read_texts(args.inputs):
        p = parse_rational(text, args.dim)
        out.append(RationalRep(p.numerator, p.denominator) if p.denominator is not None else p.numerator)
    if not out:
        raise InputError("no input given")
    return out


def _factorizations(args) -> list[Factorization]:
    out = []
    for r in _rationals(args):
        if isinstance(r, RationalRep):
            raise InputError("expected a signomial or factorization, found a quotient")
        out.append(r)
    return out


def _one(items: list, what: str):
    if len(items) != 1:
        raise InputError(f"expected exactly one {what}, found {len(items)}")
    return items[0]


def _signomials(args) -> list[Signomial]:
    return [expand(f) if len(f.factors) > 1 else f.factors[0] for f in _factorizations(args)]


def _point(text: str) -> tuple:
    return as_point(c.strip() for c in text.split(","))


def _complexes(args) -> list[PlanarComplex]:
    if args.json:
        return [PlanarComplex.from_json(d) for d in _read_json_docs(args.inputs)]
    return [overlay(*[tropical_curve(g) for g in f.factors]) for f in _factorizations(args)]


def _write_svg(args, svg: str) -> None:
    if getattr(args, "svg", None):
        Path(args.svg).write_text(svg)


# ---------------------------------------------------------------------------
# verbs


def cmd_eval(args) -> tuple[dict, int]:
    x = _point(args.at)
    values = []
    for r in _rationals(args):
        v = evaluate_rational(r, x) if isinstance(r, RationalRep) else evaluate(r, x)
        values.append(str(v))
    return {"value": values[0] if len(values) == 1 else values}, EXIT_OK


def cmd_reduce(args):
    s = _one(_signomials(args), "signomial")
    r = reduce(s)
    return {"reduced": str(r), "signomial": signomial_to_json(r), "removed": len(s) - len(r)}, EXIT_OK


def cmd_mlen(args):
    vals = []
    for r in _rationals(args):
        vals.append(list(rep_mlen(r)) if isinstance(r, RationalRep) else mlen(r))
    return {"mlen": vals[0] if len(vals) == 1 else vals}, EXIT_OK


def cmd_flen(args):
    vals = []
    for r in _rationals(args):
        vals.append(list(rep_flen(r)) if isinstance(r, RationalRep) else flen(r))
    return {"flen": vals[0] if len(vals) == 1 else vals}, EXIT_OK


def cmd_newton(args):
    s = _one(_signomials(args), "signomial")
    P = lifted_newton(s) if args.lifted else newton_polytope(s)
    return P.to_json(), EXIT_OK


def cmd_subdivision(args):
    s = _one(_signomials(args), "signomial")
    sd = regular_subdivision(s)
    return {
        "vertices": [[str(c) for c in v] for v in sd.vertices],
        "cells": [[[str(c) for c in v] for v in cell] for cell in sd.cells],
    }, EXIT_OK


def _complex_report(X: PlanarComplex) -> dict:
    return {"complex": X.to_json(), "euler_characteristic": euler_characteristic(X),
            "regions": region_count_oracle(X), "balanced": is_balanced(X)}


def cmd_curve(args):
    f = _one(_factorizations(args), "signomial")
    X = overlay(*[tropical_curve(g) for g in f.factors])
    _write_svg(args, render_complex(X))
    return _complex_report(X), EXIT_OK


def cmd_overlay(args):
    X = overlay(*_complexes(args))
    _write_svg(args, render_complex(X))
    return _complex_report(X), EXIT_OK


def cmd_cornerlocus(args):
    r = _one(_rationals(args), "rational function")
    if isinstance(r, Factorization):
        r = RationalRep(r, Factorization.of(Signomial.constant(0, r.dim)))
    S = corner_locus(r).canonical()
    _write_svg(args, render_signed(S))
    out = S.to_json()
    out["linear_region_bound"] = linear_region_bound(r)
    out["regions"] = region_count_oracle(S.support())
    return out, EXIT_OK


def cmd_regions(args):
    gs = _signomials(args)
    rep = region_count_formula(gs, oracle=args.oracle)
    out = {"formula": rep.mlen_formula}
    if args.oracle:
        out["oracle"] = rep.mlen_oracle
    out["report"] = rep.to_json()
    status = EXIT_VERIFY if args.oracle and rep.mlen_oracle != rep.mlen_formula else EXIT_OK
    return out, status


def cmd_bounds(args):
    gs = _signomials(args)
    return {"lower_bound": check_lower_bound(gs).to_json(), "count": region_count_formula(gs).to_json()}, EXIT_OK


def cmd_minkowski(args):
    polys = [convex_hull([as_point(p) for p in doc]) for doc in _read_json_docs(args.inputs)]
    return check_minkowski_bound(polys).to_json(), EXIT_OK


def cmd_min1d(args):
    if args.json:
        f = PL1D.from_json(_one(_read_json_docs(args.inputs), "function"))
    else:
        r = _one(_rationals(args), "function")
        if isinstance(r, Factorization):
            r = RationalRep(r, Factorization.of(Signomial.constant(0, r.dim)))
        f = PL1D.from_rational(r)
    rep = minimal_representation_1d(f)
    return {"function": f.to_json(), "representation": str(rep), "rational": rational_to_json(rep),
            "mlen": list(rep_mlen(rep)), "flen": list(rep_flen(rep))}, EXIT_OK


def _fan_input(args) -> WeightedFan:
    doc = _one(_read_json_docs(args.inputs), "fan")
    if "rays" in doc:
        return WeightedFan.from_json(doc)
    return recession_fan(PlanarComplex.from_json(doc))


def cmd_balancefan(args):
    F = _fan_input(args)
    if args.length == "mlen":
        return minimal_balancing_fan_mlen(F).to_json(), EXIT_OK
    results = enumerate_flen_minimal_balancings(F)
    return {"count": len(results), "results": [r.to_json() for r in results]}, EXIT_OK


def cmd_minrepfan(args):
    if args.json:
        S = SignedFan.from_json(_one(_read_json_docs(args.inputs), "signed fan"))
    else:
        r = _one(_rationals(args), "rational function")
        if isinstance(r, Factorization):
            r = RationalRep(r, Factorization.of(Signomial.constant(0, r.dim)))
        S = SignedFan.from_signed_complex(corner_locus(r))
    rep = minimal_representation_fan(S)
    return {"representation": str(rep), "rational": rational_to_json(rep),
            "mlen": list(rep_mlen(rep)), "flen": list(rep_flen(rep))}, EXIT_OK


def cmd_canonical(args):
    X = _one(_complexes(args), "complex")
    A = canonical_arrangement(X)
    _write_svg(args, render([(A.to_complex(), "gray"), (X, "black")]))
    out = A.to_json()
    out["factorization"] = str(A.to_factorization())
    return out, EXIT_OK


def cmd_witness(args):
    w = balancing_not_unique_witness()
    _write_svg(args, render([(tropical_curve(w.Y1), "black"), (w.X, "red")]))
    out = w.to_json()
    out["Y2_factorization"] = factorization_to_json(w.Y2)
    return out, EXIT_OK if w.holds else EXIT_VERIFY


def cmd_verify_all(args):
    from .generators import DEFAULT_SEED
    from .verify import run_all

    seed = DEFAULT_SEED if args.seed is None else args.seed
    results = run_all(seed)
    ok = all(r.passed for r in results)
    if not args.quiet:
        for r in results:
            print(r.line(), file=sys.stderr)
    return {"seed": seed, "passed": ok, "results": [r.to_json() for r in results]}, EXIT_OK if ok else EXIT_VERIFY


VERBS = {
    "eval": (cmd_eval, "evaluate at a point (--at x,y)"),
    "reduce": (cmd_reduce, "drop redundant monomials"),
    "mlen": (cmd_mlen, "monomial length"),
    "flen": (cmd_flen, "factorization length"),
    "newton": (cmd_newton, "Newton polytope (--lifted for the lifted one)"),
    "subdivision": (cmd_subdivision, "regular subdivision of a planar Newton polygon"),
    "curve": (cmd_curve, "tropical curve"),
    "overlay": (cmd_overlay, "common refinement of several curves or complexes"),
    "cornerlocus": (cmd_cornerlocus, "signed corner locus of num / den"),
    "regions": (cmd_regions, "region count of an arrangement of curves"),
    "bounds": (cmd_bounds, "lower bound report for an arrangement"),
    "minkowski": (cmd_minkowski, "Minkowski sum vertex bound (inputs: JSON point lists)"),
    "min1d": (cmd_min1d, "minimal representation of a one-variable function"),
    "balancefan": (cmd_balancefan, "minimal balancings of a fan"),
    "minrepfan": (cmd_minrepfan, "minimal representation of a signed fan"),
    "canonical": (cmd_canonical, "canonical line arrangement of a complex"),
    "witness": (cmd_witness, "two balancings minimal for different lengths"),
    "verify-all": (cmd_verify_all, "run the acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="troplen", description="Exact tropical signomial lengths and balancings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    for name, (_, help_text) in VERBS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("inputs", nargs="*", help="expressions, files, or - for stdin")
        p.add_argument("--json", action="store_true", help="inputs are JSON documents")
        p.add_argument("--svg", metavar="PATH", help="also write an SVG picture")
        p.add_argument("--oracle", action="store_true", help="cross-check against the region oracle")
        p.add_argument("--seed", type=int, help="seed for randomized suites")
        p.add_argument("--length", choices=("mlen", "flen"), default="mlen")
        p.add_argument("--dim", type=int, help="number of variables (default: highest variable used)")
        p.add_argument("--at", default="0,0", help="evaluation point, comma separated")
        p.add_argument("--lifted", action="store_true")
        p.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
        p.add_argument("--indent", type=int, default=None, help="pretty-print the JSON output")
    return parser


def _error_payload(exc: BaseException) -> dict:
    code = next((c for cls, c in _ERROR_CODES if isinstance(exc, cls)), "invalid_input")
    err = {"code": code, "message": str(exc)}
    if isinstance(exc, ParseError):
        err.update(line=exc.line, column=exc.col, message=exc.message)
    return {"error": err}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = VERBS[args.verb][0]
    try:
        out, status = handler(args)
    except (ValueError, KeyError, FileNotFoundError, ZeroDivisionError, TypeError) as exc:
        print(json.dumps(_error_payload(exc)), file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(out, indent=args.indent, default=_default))
    return status


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


if __name__ == "__main__":
    sys.exit(main())
