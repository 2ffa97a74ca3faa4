from fractions import Fraction
from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from troplen.signomial import Signomial

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_int = st.integers(min_value=-3, max_value=3)


def points(dim: int, min_size: int = 1, max_size: int = 12, bound: int = 4):
    coord = st.integers(min_value=-bound, max_value=bound)
    return st.lists(st.tuples(*[coord] * dim), min_size=min_size, max_size=max_size)


@st.composite
def signomials(draw, dim: int = 2, min_terms: int = 1, max_terms: int = 6, exp_bound: int = 2):
    terms = draw(
        st.lists(
            st.tuples(small_int, st.tuples(*[st.integers(-exp_bound, exp_bound)] * dim)),
            min_size=min_terms,
            max_size=max_terms,
        )
    )
    return Signomial.from_terms(terms, dim)


def solve_exact(columns, target):
    """Unique solution of sum(l_i * columns[i]) = target, or None if inconsistent.

    Columns must be linearly independent.
    """
    rows = len(target)
    k = len(columns)
    m = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(rows)]
    r = 0
    piv = []
    for c in range(k):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            return None
        m[r], m[p] = m[p], m[r]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    if any(m[i][k] != 0 for i in range(r, rows)):
        return None
    return [m[i][k] / m[i][i] for i in range(k)]


def affinely_independent(pts) -> bool:
    if len(pts) <= 1:
        return True
    base = pts[0]
    vecs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in pts[1:]]
    # rank via elimination
    rank, cols = 0, len(vecs[0])
    m = [list(v) for v in vecs]
    for c in range(cols):
        p = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank == len(vecs)


def barycentric(simplex, p):
    """Affine coordinates of p in an affinely independent point list, or None."""
    cols = [list(q) + [1] for q in simplex]
    return solve_exact(cols, list(p) + [1])


def in_hull_oracle(p, pts) -> bool:
    """Caratheodory brute force: p lies in some simplex spanned by the points."""
    pts = list(dict.fromkeys(tuple(Fraction(c) for c in q) for q in pts))
    p = tuple(Fraction(c) for c in p)
    d = len(p)
    for k in range(1, min(d + 1, len(pts)) + 1):
        for sub in combinations(pts, k):
            if not affinely_independent(sub):
                continue
            lam = barycentric(sub, p)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def vertices_oracle(pts):
    uniq = list(dict.fromkeys(tuple(Fraction(c) for c in q) for q in pts))
    return {p for p in uniq if not in_hull_oracle(p, [q for q in uniq if q != p])}


def upper_oracle(pts):
    """Points not dominated from above by a convex combination of the others."""
    uniq = list(dict.fromkeys(tuple(Fraction(c) for c in q) for q in pts))
    out = set()
    for p in uniq:
        others = [q for q in uniq if q != p]
        dominated = False
        for k in range(1, min(len(p), len(others)) + 1):
            for sub in combinations(others, k):
                proj = [q[:-1] for q in sub]
                if not affinely_independent(proj):
                    continue
                lam = barycentric(proj, p[:-1])
                if lam is not None and all(x >= 0 for x in lam):
                    if sum(l * q[-1] for l, q in zip(lam, sub)) >= p[-1]:
                        dominated = True
                        break
            if dominated:
                break
        if not dominated:
            out.add(p)
    return out
