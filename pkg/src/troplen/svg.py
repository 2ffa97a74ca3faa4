"""Minimal SVG rendering of planar complexes (output only)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .plancomplex import PlanarComplex, SignedComplex

SIZE = 400


def _box(complexes: Sequence[PlanarComplex]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    pts = [v for X in complexes for v in X.vertices] or [(Fraction(0), Fraction(0))]
    x0, x1 = min(p[0] for p in pts) - 2, max(p[0] for p in pts) + 2
    y0, y1 = min(p[1] for p in pts) - 2, max(p[1] for p in pts) + 2
    side = max(x1 - x0, y1 - y0)
    return x0, y0, x0 + side, y0 + side


def _ray_end(p, d, box):
    x0, y0, x1, y1 = box
    ts = []
    for c, lo, hi in ((0, x0, x1), (1, y0, y1)):
        if d[c] > 0:
            ts.append((hi - p[c]) / d[c])
        elif d[c] < 0:
            ts.append((lo - p[c]) / d[c])
    t = min(ts)
    return (p[0] + t * d[0], p[1] + t * d[1])


def render(layers: Sequence[tuple[PlanarComplex, str]]) -> str:
    box = _box([X for X, _ in layers])
    x0, y0, x1, _ = box
    k = Fraction(SIZE) / (x1 - x0)

    def tx(p):
        return float((p[0] - x0) * k), float(SIZE - (p[1] - y0) * k)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    for X, color in layers:
        for e in X.edges:
            p = X.vertices[e.a]
            q = X.vertices[e.b] if e.b is not None else _ray_end(p, e.w, box)
            w = max(1.0, min(6.0, float(e.w[0] ** 2 + e.w[1] ** 2) ** 0.5))
            (ax, ay), (bx, by) = tx(p), tx(q)
            out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="{color}" stroke-width="{w:.2f}"/>')
        for v in X.vertices:
            cx, cy = tx(v)
            out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_complex(X: PlanarComplex, color: str = "black") -> str:
    return render([(X, color)])


def render_signed(S: SignedComplex) -> str:
    return render([(S.positive, "black"), (S.negative, "red")])
