"""SVG drawings of lattice polygons with their surrounding lattice points."""

from math import atan2
from xml.sax.saxutils import escape

from .errors import BadDimensionError
from .polytope import Polytope

SPACING = 40


def render_svg(P: Polytope, title: str = "") -> str:
    """Standalone SVG 1.1: lattice dots over the bounding box grown by one,
    lattice points of ``P`` filled, boundary outlined."""
    if P.ambient_dim != 2:
        raise BadDimensionError("only planar polytopes can be drawn")
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    width, height = (x1 - x0 + 1) * SPACING, (y1 - y0 + 1) * SPACING

    def px(p):
        return ((p[0] - x0) * SPACING + SPACING // 2, (y1 - p[1]) * SPACING + SPACING // 2)

    inside = set(P.lattice_points())
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<rect width="100%" height="100%" fill="white"/>')
    if P.dim == 2:
        hull = _ccw(P.vertices)
        path = " ".join(f"{a},{b}" for a, b in map(px, hull))
        out.append(f'<polygon points="{path}" fill="#dde8f6" stroke="black" stroke-width="2"/>')
    elif P.dim == 1:
        (a, b), (c, d) = map(px, P.vertices)
        out.append(f'<line x1="{a}" y1="{b}" x2="{c}" y2="{d}" stroke="black" stroke-width="2"/>')
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            cx, cy = px((x, y))
            if (x, y) in inside:
                out.append(f'<circle cx="{cx}" cy="{cy}" r="5" fill="black"/>')
            else:
                out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="#999999"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _ccw(verts):
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)
    return sorted(verts, key=lambda v: atan2(v[1] - cy, v[0] - cx))
