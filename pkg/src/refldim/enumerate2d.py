"""Exhaustive search for reflexive polygons up to lattice equivalence.

A polygon whose only interior lattice point is the origin has primitive
vertices: a vertex ``k u`` with ``k >= 2`` would put ``u`` in the open segment
from 0 to the vertex, hence in the interior.  The search therefore grows
vertex sets in convex position from the primitive points of the box, one
point at a time in index order, so every convex-position set is visited
exactly once.  Adding points only enlarges the hull, so a set is pruned as
soon as its hull has an interior lattice point other than the origin.
Interior points are counted with Pick's formula.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .equivalence import fingerprint, normal_form
from .polytope import Polytope, edge_lattice_length
from .reflexive import is_reflexive


@dataclass(frozen=True)
class ClassificationResult:
    classes: list
    search_box: int
    raw_hits: int


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(points):
    """Counter-clockwise hull with collinear points dropped (monotone chain)."""
    pts = sorted(points)
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _status(hull) -> int:
    """0: no interior points yet, 1: origin is the unique interior point,
    -1: some other interior lattice point (prune)."""
    n = len(hull)
    if n < 3:
        return 0
    area2 = sum(_cross((0, 0), hull[i], hull[(i + 1) % n]) for i in range(n))
    boundary = sum(gcd(hull[(i + 1) % n][0] - hull[i][0], hull[(i + 1) % n][1] - hull[i][1])
                   for i in range(n))
    interior = (area2 - boundary + 2) // 2
    if interior == 0:
        return 0
    if interior == 1 and all(_cross(hull[i], hull[(i + 1) % n], (0, 0)) > 0 for i in range(n)):
        return 1
    return -1


def _candidates(B: int) -> list:
    return [(x, y) for x in range(-B, B + 1) for y in range(-B, B + 1)
            if gcd(x, y) == 1]


def _search(B: int) -> list:
    pts = _candidates(B)
    hits = []

    def grow(chosen, start):
        for j in range(start, len(pts)):
            nxt = chosen + [pts[j]]
            hull = _hull(nxt)
            if len(hull) != len(nxt):
                continue
            status = _status(hull)
            if status < 0:
                continue
            if status == 1:
                hits.append(tuple(hull))
            grow(nxt, j + 1)

    grow([], 0)
    return hits


def classify_reflexive_polygons(B: int = 4) -> ClassificationResult:
    """All reflexive polygons with vertices in ``[-B, B]^2``, up to equivalence.

    Representatives have the origin as interior point and are listed by
    vertex count, then normalized volume, then vertices.
    """
    if B < 1:
        raise ValueError("search box must be at least 1")
    hits = _search(B)
    buckets: dict = {}
    for verts in hits:
        P = Polytope.from_vertices(verts)
        if not is_reflexive(P).is_reflexive:
            continue
        key = fingerprint(P)
        forms = buckets.setdefault(key, {})
        nf = normal_form(P)
        if nf not in forms:
            forms[nf] = P
    classes = [P for forms in buckets.values() for P in forms.values()]
    classes.sort(key=lambda P: (len(P.vertices), P.normalized_volume, P.vertices))
    return ClassificationResult(classes, B, len(hits))


def edge_length_spectrum(polytopes: Iterable[Polytope]) -> set:
    """Lattice lengths of all edges of all inputs."""
    out = set()
    for P in polytopes:
        if P.dim >= 1:
            out.update(edge_lattice_length(P, e) for e in P.faces(1))
    return out
