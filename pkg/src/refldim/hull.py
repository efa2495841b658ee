"""Double-description conversion between vertex and facet descriptions.

Integer arithmetic throughout.  Zero sets are stored as int bitmasks over
the processed constraints.
"""

from fractions import Fraction

from .errors import EmptyPolytopeError, UnboundedError
from .lattice import dot, vector_gcd


def _prim(v):
    g = vector_gcd(v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _comb(a, u, b, w):
    return _prim([a * x + b * y for x, y in zip(u, w)])


def cone_generators(constraints, n):
    """Generators of the cone ``{z in Q^n : <h, z> >= 0 for every h}``.

    Returns ``(lineality, rays)``: a basis of the lineality space and one
    representative per extreme ray of the pointed quotient.  Each ray is a
    pair ``(vector, zero_mask)`` where bit ``i`` of the mask is set when
    constraint ``i`` is tight.
    """
    lin = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays = []
    seen = 0
    for idx, h in enumerate(constraints):
        bit = 1 << idx
        if not any(h):
            continue
        vals = [dot(h, l) for l in lin]
        piv = next((i for i, v in enumerate(vals) if v), None)
        if piv is not None:
            l0, a0 = lin[piv], vals[piv]
            if a0 < 0:
                l0, a0 = tuple(-x for x in l0), -a0
            lin = [l if not v else _comb(a0, l, -v, l0)
                   for i, (l, v) in enumerate(zip(lin, vals)) if i != piv]
            new = []
            for vec, zero in rays:
                v = dot(h, vec)
                new.append((_comb(a0, vec, -v, l0) if v else vec, zero | bit))
            new.append((l0, seen))
            rays = new
            seen |= bit
            continue

        pos, neg, zer = [], [], []
        for vec, zero in rays:
            v = dot(h, vec)
            if v > 0:
                pos.append((vec, zero, v))
            elif v < 0:
                neg.append((vec, zero, v))
            else:
                zer.append((vec, zero | bit))
        new = [(vec, zero) for vec, zero, _ in pos] + zer
        if pos and neg:
            need = n - len(lin) - 2
            masks = [zero for _, zero in rays]
            for pv, pz, ps in pos:
                for nv, nz, ns in neg:
                    common = pz & nz
                    if common.bit_count() < need:
                        continue
                    hits = 0
                    for z in masks:
                        if z & common == common:
                            hits += 1
                            if hits > 2:
                                break
                    if hits > 2:
                        continue
                    new.append((_comb(ps, nv, -ns, pv), common | bit))
        rays = new
        seen |= bit
    return lin, rays


def facets_of_points(points, dim):
    """Facet inequalities ``<y, x> >= c`` of a full-dimensional hull.

    ``points`` are integer points spanning ``Z^dim`` affinely.  Returns a
    list of ``(normal, offset)`` with primitive normals.
    """
    constraints = [tuple(p) + (1,) for p in points]
    lin, rays = cone_generators(constraints, dim + 1)
    if lin:
        raise ValueError("point set is not full-dimensional")
    out = []
    for vec, _ in rays:
        normal = vec[:dim]
        g = vector_gcd(normal)
        out.append((tuple(x // g for x in normal), -vec[dim] // g))
    return out


def vertices_of_inequalities(A, c):
    """Vertices (as Fraction tuples) of ``{x : A x >= c}``.

    Raises:
        UnboundedError: if the region is nonempty and unbounded.
        EmptyPolytopeError: if the region is empty.
    """
    d = len(A[0])
    constraints = [tuple(row) + (-b,) for row, b in zip(A, c)]
    constraints.append((0,) * d + (1,))
    lin, rays = cone_generators(constraints, d + 1)
    finite = [vec for vec, _ in rays if vec[d] > 0]
    if not finite:
        raise EmptyPolytopeError("inequality system has no solution")
    if lin or any(vec[d] == 0 for vec, _ in rays):
        raise UnboundedError("inequality system defines an unbounded region")
    verts = {tuple(Fraction(x, vec[d]) for x in vec[:d]) for vec in finite}
    return sorted(verts)
