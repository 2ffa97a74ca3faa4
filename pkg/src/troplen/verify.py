"""The acceptance suite: twelve exact checks, each returning a pass/fail record."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from . import generators as gen
from .counting import (
    check_lower_bound,
    check_minkowski_bound,
    pairwise_intersections,
    region_count_formula,
    zonotope,
    zonotope_bound,
)
from .exactgeom import convex_hull
from .instances import (
    corner_example,
    corner_example_fan,
    overlapping_triangles,
    rational_reps,
    tripod_pair,
    two_notions_pair,
)
from .minimize import (
    PL1D,
    balancing_not_unique_witness,
    bell,
    block_factorization,
    cheapest_partition_bound,
    differ_by_monomial,
    enumerate_flen_minimal_balancings,
    fan_to_signomial,
    minimal_balancing_fan_mlen,
    minimal_balancing_union,
    minimal_representation_1d,
    minimal_representation_fan,
    rep_mlen,
    union_flen,
    verify_flen_bound,
)
from .plancomplex import (
    corner_locus,
    euler_characteristic,
    intersection_complex,
    is_balanced,
    is_balanced_fan,
    overlay,
    region_count_oracle,
    tropical_curve,
)
from .signomial import Factorization, RationalRep, Signomial, evaluate_rational, expand, flen, mlen


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    details: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def check(self, cond: bool, message: str) -> None:
        if not cond:
            self.passed = False
            if len(self.failures) < 10:
                self.failures.append(message)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} criterion {self.number}: {self.title}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "details": self.details, "failures": self.failures}


def _grid(n: int, lo: Fraction, hi: Fraction) -> list[Fraction]:
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def criterion_1(seed: int) -> CriterionResult:
    res = CriterionResult(1, "two lengths disagree on a fixed pair")
    g, h = two_notions_pair()
    mg, fg, mh, fh = mlen(g), flen(g), mlen(h), flen(h)
    res.details = {"mlen_g": mg, "flen_g": fg, "mlen_h": mh, "flen_h": fh}
    res.check(mg == 5, f"mlen(g) = {mg}")
    res.check(fg == 5, f"flen(g) = {fg}")
    res.check(fh == 4, f"flen(h) = {fh}")
    res.check(mh > mg, "mlen(h) <= mlen(g)")
    res.check(fh < fg, "flen(h) >= flen(g)")
    # independent route: regions of the dual curves
    res.check(region_count_oracle(tropical_curve(g)) == mg, "curve regions of g disagree")
    H = overlay(*[tropical_curve(f) for f in h.factors])
    res.check(region_count_oracle(H) == mh, "curve regions of h disagree")
    return res


def criterion_2(seed: int) -> CriterionResult:
    res = CriterionResult(2, "region formula equals the arrangement oracle")
    rep = region_count_formula(tripod_pair(), oracle=True)
    res.details["pair"] = rep.to_json()
    res.check(rep.mlen_formula == 8 and rep.mlen_oracle == 8, f"pair gives {rep.mlen_formula}/{rep.mlen_oracle}")
    rng = random.Random(seed)
    for k in range(200):
        gs = gen.random_family(rng, rng.randint(1, 4), 5)
        r = region_count_formula(gs, oracle=True)
        res.check(r.mlen_formula == r.mlen_oracle, f"family {k}: {r.mlen_formula} != {r.mlen_oracle}")
        res.check(r.mlen_formula == mlen(Factorization(tuple(gs))), f"family {k}: product mlen differs")
    res.details["families"] = 200
    return res


def criterion_3(seed: int) -> CriterionResult:
    res = CriterionResult(3, "classical line-arrangement count")
    rng = random.Random(seed)
    for m in range(2, 7):
        gs = gen.generic_binomial_lines(rng, m)
        r = region_count_formula(gs, oracle=True)
        want = 1 + m + comb(m, 2)
        res.details[str(m)] = [r.mlen_formula, r.mlen_oracle, want]
        res.check(r.mlen_formula == want and r.mlen_oracle == want, f"m={m}: {r.mlen_formula}/{r.mlen_oracle} vs {want}")
    return res


def criterion_4(seed: int) -> CriterionResult:
    res = CriterionResult(4, "lower bound and its equality case")
    rng = random.Random(seed)
    tight_seen = 0
    for k in range(100):
        m = 2 + k % 2
        if rng.random() < 0.25:
            gs = gen.generic_binomial_lines(rng, m)
        else:
            gs = gen.random_generic_family(rng, m, 4)
        rep = check_lower_bound(gs)
        pairs = pairwise_intersections([tropical_curve(g) for g in gs])
        single = all(len(X.vertices) == 1 and not X.edges for X in pairs.values())
        res.check(rep.generic, f"family {k} not generic")
        res.check(rep.holds, f"family {k}: {rep.mlen} < {rep.rhs}")
        res.check((rep.mlen == rep.rhs) == single, f"family {k}: equality {rep.mlen == rep.rhs} vs single points {single}")
        tight_seen += rep.mlen == rep.rhs
    res.details["families"] = 100
    res.details["tight"] = tight_seen
    gs = overlapping_triangles()
    rep = check_lower_bound(gs)
    f = flen(Factorization(tuple(gs)))
    res.details["overlapping_triangles"] = {"mlen": rep.mlen, "flen": f, "generic": rep.generic}
    res.check(not rep.generic, "overlapping triangles not flagged")
    res.check(rep.mlen == 4 and f == 5, f"overlapping triangles: mlen {rep.mlen}, flen {f}")
    res.check(len(convex_hull([m.exp for m in expand(Factorization(tuple(gs)))], 2)) == 4, "Newton polygon is not a 4-gon")
    return res


def criterion_5(seed: int) -> CriterionResult:
    res = CriterionResult(5, "Minkowski sum vertex bounds")
    rng = random.Random(seed)
    for k in range(20):
        P, Q = gen.random_generic_triangle_pair(rng)
        rep = check_minkowski_bound([P, Q])
        res.check(rep.vertices == 6 and rep.rhs == 6 and rep.holds, f"triangle pair {k}: {rep}")
    segs = gen.random_generic_segments(rng, 4, 3)
    Z = zonotope(segs)
    res.details["zonotope"] = {"vertices": len(Z), "bound": zonotope_bound(4, 3)}
    res.check(len(Z) == 14 == zonotope_bound(4, 3), f"zonotope has {len(Z)} vertices")
    for k in range(50):
        m = 2 + k % 2
        polys = [gen.random_simplex(rng, 3) for _ in range(m)]
        rep = check_minkowski_bound(polys)
        res.check(rep.holds and not rep.degenerate, f"simplices {k}: {rep}")
    return res


def criterion_6(seed: int) -> CriterionResult:
    res = CriterionResult(6, "Euler-Poincare relation and inclusion-exclusion")
    rng = random.Random(seed)
    for k in range(200):
        X = gen.random_balanced_complex(rng)
        res.check(is_balanced(X), f"complex {k} not balanced")
        res.check(euler_characteristic(X) + region_count_oracle(X) == 1, f"complex {k}: chi + regions != 1")
        A, B = gen.random_balanced_complex(rng), gen.random_balanced_complex(rng)
        U, I = overlay(A, B), intersection_complex(A, B)
        lhs = euler_characteristic(U)
        rhs = euler_characteristic(A) + euler_characteristic(B) - euler_characteristic(I)
        res.check(lhs == rhs, f"pair {k}: {lhs} != {rhs}")
    res.details["complexes"] = 200
    return res


def criterion_7(seed: int) -> CriterionResult:
    res = CriterionResult(7, "fan balancings and the Bell-number count")
    rng = random.Random(seed)
    for m in range(1, 7):
        F = gen.random_unbalanced_fan(rng, m)
        b = minimal_balancing_fan_mlen(F)
        res.check(len(b.balancing.rays) == m + 1 and is_balanced_fan(b.balancing), f"m={m}: mlen-minimal balancing")
        results = enumerate_flen_minimal_balancings(F)
        res.details[str(m)] = len(results)
        res.check(len(results) == bell(m) == (1, 2, 5, 15, 52, 203)[m - 1], f"m={m}: {len(results)} balancings")
        for r in results:
            res.check(r.flen == m + 1, f"m={m}: flen {r.flen}")
            res.check(not r.degenerate, f"m={m}: degenerate partition {r.partition}")
            res.check(all(is_balanced_fan(Y) for Y in r.fans), f"m={m}: unbalanced block")
            res.check(flen(block_factorization(r)) == m + 1, f"m={m}: factorization flen")
    return res


def criterion_8(seed: int) -> CriterionResult:
    res = CriterionResult(8, "one-variable minimal representations")
    rng = random.Random(seed)
    grid = _grid(1000, Fraction(-25), Fraction(25))
    for k in range(100):
        f = gen.random_pl1d(rng)
        r = minimal_representation_1d(f)
        bad = next((x for x in grid if evaluate_rational(r, (x,)) != f(x)), None)
        res.check(bad is None, f"function {k} differs at {bad}")
        want = (f.convex_count + 1, f.concave_count + 1)
        res.check(rep_mlen(r) == want, f"function {k}: mlen {rep_mlen(r)} vs {want}")
        # a padded, non-minimal representation of the same function
        pad = gen.random_curve_signomial(rng, 3, 2)
        pad = Signomial.from_terms([(m.coeff, (m.exp[0],)) for m in pad.monomials], 1)
        lin = Signomial.from_terms([(rng.randint(-3, 3), (rng.randint(-2, 2),))], 1)
        padded = RationalRep(
            Factorization(r.numerator.factors + (pad, lin)), Factorization(r.denominator.factors + (pad, lin))
        )
        r2 = minimal_representation_1d(PL1D.from_rational(padded))
        res.check(differ_by_monomial(expand(r.numerator), expand(r2.numerator)), f"function {k}: numerators differ")
        res.check(differ_by_monomial(expand(r.denominator), expand(r2.denominator)), f"function {k}: denominators differ")
    res.details["functions"] = 100
    return res


def criterion_9(seed: int) -> CriterionResult:
    res = CriterionResult(9, "fan minimal representations")
    S = corner_example_fan()
    r = minimal_representation_fan(S)
    res.details["example"] = {"rep": str(r), "mlen": list(rep_mlen(r))}
    res.check(rep_mlen(r) == (3, 2), f"example mlen {rep_mlen(r)}")
    res.check(corner_locus(r).same_as(S.to_signed_complex()), "example corner locus differs")
    res.check(corner_locus(r).same_as(corner_locus(corner_example())), "example differs from the direct formula")
    rng = random.Random(seed)
    count = 0
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            if m1 == m2 == 1:
                continue  # a single positive ray can only be balanced by an equal negative one, which cancels
            for _ in range(2):
                S = gen.random_signed_fan(rng, m1, m2)
                r = minimal_representation_fan(S)
                res.check(corner_locus(r).same_as(S.to_signed_complex()), f"({m1},{m2}): corner locus differs")
                res.check(rep_mlen(r) == (m1 + 1, m2 + 1), f"({m1},{m2}): mlen {rep_mlen(r)}")
                count += 1
    res.details["signed_fans"] = count
    return res


def criterion_10(seed: int) -> CriterionResult:
    res = CriterionResult(10, "canonical arrangement bound")
    rng = random.Random(seed)
    n = 0
    for m in range(1, 7):
        F = gen.random_unbalanced_fan(rng, m)
        X = F.to_complex()
        for r in enumerate_flen_minimal_balancings(F):
            rep = verify_flen_bound(X, block_factorization(r))
            res.check(rep.holds and rep.balances, f"m={m} partition {r.partition}: {rep}")
            n += 1
    w = balancing_not_unique_witness()
    rep = verify_flen_bound(w.X, w.Y2)
    res.details["triangle"] = rep.to_json()
    res.check(rep.holds and rep.balances, f"triangle: {rep}")
    res.details["instances"] = n + 1
    return res


def criterion_11(seed: int) -> CriterionResult:
    res = CriterionResult(11, "minimal balancing of a union of fans")
    rng = random.Random(seed)
    for k in range(30):
        fans = gen.random_fan_union(rng, 2 + k % 2)
        Y = minimal_balancing_union(fans)
        total = sum(len(F.rays) for F in fans)
        f = union_flen(Y)
        res.check(f == total + 1, f"union {k}: flen {f} vs {total + 1}")
        fac = Factorization(tuple(fan_to_signomial(B) for B in Y))
        res.check(flen(fac) == f, f"union {k}: factorization flen")
        res.check(cheapest_partition_bound(fans) >= f, f"union {k}: a cheaper candidate exists")
    res.details["unions"] = 30
    return res


def criterion_12(seed: int) -> CriterionResult:
    res = CriterionResult(12, "two representations of one function")
    a, b = rational_reps()
    pts = _grid(21, Fraction(-5), Fraction(5))
    bad = [(x, y) for x in pts for y in pts if evaluate_rational(a, (x, y)) != evaluate_rational(b, (x, y))]
    res.check(not bad, f"values differ at {bad[:3]}")
    ca, cb = corner_locus(a), corner_locus(b)
    res.check(ca.same_as(cb), "corner loci differ")
    res.details["corner_locus"] = ca.canonical().to_json()
    res.details["mlen"] = [list(rep_mlen(a)), list(rep_mlen(b))]
    return res


CRITERIA: tuple[Callable[[int], CriterionResult], ...] = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
)


def run_all(seed: int | None = None) -> list[CriterionResult]:
    s = gen.DEFAULT_SEED if seed is None else seed
    out = []
    for i, crit in enumerate(CRITERIA, start=1):
        try:
            out.append(crit(s + i))
        except Exception as exc:  # a crash is a failure, not an abort of the suite
            r = CriterionResult(i, crit.__name__)
            r.check(False, f"{type(exc).__name__}: {exc}")
            out.append(r)
    return out
