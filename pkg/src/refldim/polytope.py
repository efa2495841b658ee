"""Lattice polytopes in dual description.

A :class:`Polytope` stores its vertices and an irredundant list of facet
inequalities ``<normal, x> >= offset``.  Lower-dimensional polytopes are
handled in lattice coordinates of their affine span (see
:func:`refldim.lattice.affine_lattice`); their ambient facet normals are
pulled back from those coordinates, so they are primitive with respect to
the lattice of the span.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as _cartesian
from math import gcd, lcm
from typing import Optional, Sequence, Union

from .errors import (BadDimensionError, BadScaleError, DimensionMismatchError,
                     EmptyInputError, NotAnEdgeError, NotFullDimError,
                     OriginNotInteriorError)
from .hull import facets_of_points, vertices_of_inequalities
from .lattice import (AffineLattice, IntVector, affine_lattice, affine_rank,
                      determinant, dot, identity, vector_gcd)

Facet = tuple[IntVector, int]


def _check_points(points) -> list[IntVector]:
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise EmptyInputError("no points given")
    d = len(pts[0])
    if d == 0 or any(len(p) != d for p in pts):
        raise DimensionMismatchError("points have differing or zero length")
    return pts


@dataclass(frozen=True)
class _Intrinsic:
    lattice: AffineLattice
    vertices: tuple[IntVector, ...]
    normals: tuple[IntVector, ...]
    offsets: tuple[int, ...]


@dataclass(frozen=True)
class Polytope:
    """A lattice polytope ``conv(vertices) = {x : <y_i, x> >= c_i}``.

    Vertices and facets are sorted lexicographically.  Construct through
    :meth:`from_vertices` or :meth:`from_inequalities`; the constructor
    itself performs no checks.
    """

    ambient_dim: int
    vertices: tuple[IntVector, ...]
    facets: tuple[Facet, ...]
    dim: int

    # construction

    @classmethod
    def from_vertices(cls, points: Sequence[Sequence[int]]) -> "Polytope":
        """Convex hull of lattice points.

        Raises:
            EmptyInputError: no points.
            DimensionMismatchError: points of different lengths.
        """
        pts = sorted(set(_check_points(points)))
        d = len(pts[0])
        lat = affine_lattice(pts)
        r = lat.dim
        if r == 0:
            return cls(d, (pts[0],), (), 0)
        lam = [lat.coords(p) for p in pts]
        ifacets = facets_of_points(lam, r)
        masks = [sum(1 << i for i, q in enumerate(lam) if dot(y, q) == c)
                 for y, c in ifacets]
        full = (1 << len(pts)) - 1
        verts = []
        for i, p in enumerate(pts):
            inter = full
            for m in masks:
                if m >> i & 1:
                    inter &= m
            if inter == 1 << i:
                verts.append(p)
        facets = []
        for y, c in ifacets:
            normal = tuple(dot(row, y) for row in lat.projection)
            facets.append((normal, c + dot(normal, lat.origin)))
        return cls(d, tuple(verts), tuple(sorted(facets)), r)

    @classmethod
    def from_inequalities(cls, A, c) -> Union["Polytope", "RationalPolytope"]:
        """Polytope ``{x : A x >= c}``.

        Returns a :class:`RationalPolytope` when some vertex is not integral.

        Raises:
            UnboundedError, EmptyPolytopeError
        """
        A = [tuple(int(x) for x in row) for row in A]
        c = [int(x) for x in c]
        if not A or len(A) != len(c) or len({len(r) for r in A}) != 1:
            raise DimensionMismatchError("inconsistent inequality system")
        verts = vertices_of_inequalities(A, c)
        if any(x.denominator != 1 for v in verts for x in v):
            return RationalPolytope.from_vertices(verts)
        ipts = [tuple(int(x) for x in v) for v in verts]
        d = len(A[0])
        if affine_rank(ipts) < d:
            return cls.from_vertices(ipts)
        facets = set()
        for row, b in zip(A, c):
            tight = [p for p in ipts if dot(row, p) == b]
            if len(tight) >= d and affine_rank(tight) == d - 1:
                g = vector_gcd(row)
                facets.add((tuple(x // g for x in row), b // g))
        return cls(d, tuple(ipts), tuple(sorted(facets)), d)

    # basic data

    @property
    def normals(self) -> tuple[IntVector, ...]:
        return tuple(y for y, _ in self.facets)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.facets)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def lattice(self) -> AffineLattice:
        d = self.ambient_dim
        if self.is_full_dimensional:
            return AffineLattice((0,) * d, identity(d), identity(d))
        return affine_lattice(self.vertices)

    @cached_property
    def intrinsic(self) -> _Intrinsic:
        """The polytope in lattice coordinates of its affine span."""
        lat = self.lattice
        normals = tuple(tuple(dot(b, y) for b in lat.basis) for y, _ in self.facets)
        offsets = tuple(c - dot(y, lat.origin) for y, c in self.facets)
        verts = tuple(lat.coords(v) for v in self.vertices)
        return _Intrinsic(lat, verts, normals, offsets)

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        """Bitmask of the vertices lying on each facet."""
        return tuple(sum(1 << i for i, v in enumerate(self.vertices) if dot(y, v) == c)
                     for y, c in self.facets)

    def contains(self, x) -> bool:
        x = tuple(x)
        if not self.is_full_dimensional and not self.lattice.contains(x):
            return False
        return all(dot(y, x) >= c for y, c in self.facets)

    def __repr__(self):
        return (f"Polytope(dim={self.dim}, ambient_dim={self.ambient_dim}, "
                f"vertices={list(self.vertices)})")

    # faces

    @cached_property
    def _vertex_facets(self) -> tuple[int, ...]:
        """Bitmask of the facets through each vertex."""
        return tuple(sum(1 << j for j, fm in enumerate(self.facet_masks) if fm >> i & 1)
                     for i in range(len(self.vertices)))

    def _span(self, tight: int) -> int:
        """Vertices on every facet in ``tight``."""
        out = (1 << len(self.vertices)) - 1
        fms = self.facet_masks
        while tight:
            low = tight & -tight
            out &= fms[low.bit_length() - 1]
            tight ^= low
        return out

    def _tight(self, mask: int) -> int:
        t = (1 << len(self.facets)) - 1
        for i, vf in enumerate(self._vertex_facets):
            if mask >> i & 1:
                t &= vf
        return t

    def _closure(self, mask: int) -> int:
        return self._span(self._tight(mask))

    def _face(self, mask: int, dim: int) -> "Face":
        tight = frozenset(i for i, fm in enumerate(self.facet_masks) if fm & mask == mask)
        idx = frozenset(i for i in range(len(self.vertices)) if mask >> i & 1)
        return Face(self, tight, idx, dim)

    def _subfacets(self, mask: int) -> set[int]:
        cands = {mask & fm for fm in self.facet_masks}
        cands.discard(mask)
        cands.discard(0)
        return {g for g in cands if not any(g != h and g & h == g for h in cands)}

    def _covers(self, g: int, limit: int, spans: dict) -> set[int]:
        """Faces covering face ``g`` with at most ``limit`` vertices.

        The closure ``c`` of ``g + v`` covers ``g`` iff every vertex of
        ``c - g`` has closure ``c`` together with ``g``.
        """
        tg = self._tight(g)
        vf = self._vertex_facets
        closure_of = {}
        for i in range(len(vf)):
            if not g >> i & 1:
                t = tg & vf[i]
                c = spans.get(t)
                if c is None:
                    c = spans[t] = self._span(t)
                closure_of[i] = c
        out = set()
        for c in set(closure_of.values()):
            if c.bit_count() > limit:
                continue
            rest = c & ~g
            while rest:
                low = rest & -rest
                if closure_of[low.bit_length() - 1] != c:
                    break
                rest ^= low
            else:
                out.add(c)
        return out

    def face_masks(self, k: int, max_vertices: Optional[int] = None,
                   prune=None) -> list[int]:
        if not 0 <= k <= self.dim:
            raise BadDimensionError(f"face dimension {k} outside [0, {self.dim}]")
        m = len(self.vertices)
        limit = m if max_vertices is None else max_vertices
        if k == self.dim:
            level = {(1 << m) - 1}
        elif k <= self.dim // 2 or max_vertices is not None:
            level = {1 << i for i in range(m)}
            spans: dict = {}
            for j in range(k):
                nxt = set()
                for g in level:
                    nxt |= self._covers(g, limit, spans)
                level = nxt if prune is None else {g for g in nxt if prune(g, j + 1)}
        else:
            level = set(self.facet_masks)
            for _ in range(self.dim - 1 - k):
                nxt = set()
                for g in level:
                    nxt |= self._subfacets(g)
                level = nxt
        level = {g for g in level if g.bit_count() <= limit}
        return sorted(level, key=lambda g: [i for i in range(m) if g >> i & 1])

    def faces(self, k: int, max_vertices: Optional[int] = None, prune=None) -> list["Face"]:
        """All ``k``-dimensional faces; ``k == dim`` gives the improper face.

        With ``max_vertices`` only faces with at most that many vertices are
        listed.  ``prune(mask, j)`` may discard ``j``-faces on the way up;
        it must keep every face of a face that is wanted.  Both keep the
        search small on large polytopes.

        Raises:
            BadDimensionError: ``k`` outside ``[0, dim]``.
        """
        return [self._face(g, k) for g in self.face_masks(k, max_vertices, prune)]

    def face_with_vertices(self, points) -> Optional["Face"]:
        """The face whose vertex set is exactly ``points``, if there is one."""
        index = {v: i for i, v in enumerate(self.vertices)}
        try:
            mask = sum(1 << index[tuple(p)] for p in points)
        except KeyError:
            return None
        if self._closure(mask) != mask:
            return None
        pts = [self.vertices[i] for i in range(len(self.vertices)) if mask >> i & 1]
        return self._face(mask, affine_rank(pts))

    # lattice points and volume

    def _scan(self, k: int = 1, shift: int = 0, collect: bool = True):
        intr = self.intrinsic
        r = self.dim
        if r == 0:
            pts = [tuple(k * x for x in self.vertices[0])] if shift <= 0 else []
            return pts if collect else len(pts)
        lo = [k * min(v[i] for v in intr.vertices) for i in range(r)]
        hi = [k * max(v[i] for v in intr.vertices) for i in range(r)]
        offsets = [k * c + shift for c in intr.offsets]
        found = _box_scan(intr.normals, offsets, lo, hi, collect)
        if not collect:
            return found
        lat = intr.lattice
        origin = tuple(k * x for x in lat.origin)
        kl = AffineLattice(origin, lat.basis, lat.projection)
        return [kl.point(lam) for lam in found]

    def lattice_points(self) -> list[IntVector]:
        """All lattice points, sorted."""
        return sorted(self._scan())

    def interior_lattice_points(self) -> list[IntVector]:
        """Lattice points strictly inside every facet.

        Raises:
            NotFullDimError: for lower-dimensional polytopes.
        """
        if not self.is_full_dimensional:
            raise NotFullDimError("interior points need a full-dimensional polytope")
        return sorted(self._scan(shift=1))

    def count_points(self, k: int = 1, interior: bool = False) -> int:
        """Number of lattice points of ``kP`` (or of its relative interior)."""
        if k == 0:
            return 0 if interior else 1
        return self._scan(k, 1 if interior else 0, collect=False)

    @cached_property
    def normalized_volume(self) -> int:
        """Volume normalized so that a unimodular simplex of the span has 1."""
        r = self.dim
        if r == 0:
            return 1
        pts = self.intrinsic.vertices
        total = 0
        for simplex in self._triangulation():
            idx = [i for i in range(len(pts)) if simplex >> i & 1]
            base = pts[idx[0]]
            total += abs(determinant([[a - b for a, b in zip(pts[i], base)] for i in idx[1:]]))
        return total

    def _triangulation(self) -> list[int]:
        """Pulling triangulation from the lowest-index vertex of each face."""
        memo = {}

        def tri(mask, k):
            if mask.bit_count() == k + 1:
                return [mask]
            if mask in memo:
                return memo[mask]
            apex = mask & -mask
            out = []
            for g in self._subfacets(mask):
                if not g & apex:
                    out.extend(t | apex for t in tri(g, k - 1))
            memo[mask] = out
            return out

        return tri((1 << len(self.vertices)) - 1, self.dim)


def _box_scan(normals, offsets, lo, hi, collect):
    """Lattice points of ``{x : <y_f, x> >= c_f}`` inside the box ``[lo, hi]``.

    Coordinates are fixed one at a time.  Each coordinate's range is cut down
    by bounding the remaining coordinates with the box, and the last
    coordinate is an exact interval, so counting never visits points one by
    one.
    """
    d = len(lo)
    nf = len(normals)
    cols = [[y[i] for y in normals] for i in range(d)]
    smax = [[0] * nf for _ in range(d + 1)]
    for i in range(d - 1, -1, -1):
        for f in range(nf):
            a = normals[f][i]
            smax[i][f] = smax[i + 1][f] + max(a * lo[i], a * hi[i])
    out = []
    total = 0
    prefix = [0] * d

    def rec(i, partial):
        nonlocal total
        a_lo, a_hi = lo[i], hi[i]
        rest = smax[i + 1]
        col = cols[i]
        for f in range(nf):
            a = col[f]
            need = offsets[f] - partial[f] - rest[f]
            if a > 0:
                a_lo = max(a_lo, -(-need // a))
            elif a < 0:
                a_hi = min(a_hi, need // a)
            elif need > 0:
                return
        if a_lo > a_hi:
            return
        if i == d - 1:
            if collect:
                for x in range(a_lo, a_hi + 1):
                    prefix[i] = x
                    out.append(tuple(prefix))
            else:
                total += a_hi - a_lo + 1
            return
        for x in range(a_lo, a_hi + 1):
            prefix[i] = x
            rec(i + 1, [p + a * x for p, a in zip(partial, col)])

    rec(0, [0] * nf)
    return out if collect else total


@dataclass(frozen=True)
class Face:
    """A face of ``parent``, identified by the facets tight on it."""

    parent: Polytope = field(compare=False, repr=False)
    tight_facets: frozenset
    vertex_indices: frozenset
    dim: int

    @property
    def vertices(self) -> list[IntVector]:
        return [self.parent.vertices[i] for i in sorted(self.vertex_indices)]

    def polytope(self) -> Polytope:
        return Polytope.from_vertices(self.vertices)


@dataclass(frozen=True)
class RationalPolytope:
    """A polytope whose vertices may be rational, e.g. a polar dual."""

    ambient_dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[tuple[IntVector, Fraction], ...]
    dim: int

    @classmethod
    def from_vertices(cls, points) -> "RationalPolytope":
        pts = sorted({tuple(Fraction(x) for x in p) for p in points})
        den = lcm(*(x.denominator for p in pts for x in p))
        scaled = Polytope.from_vertices([[int(x * den) for x in p] for p in pts])
        verts = tuple(tuple(Fraction(x, den) for x in v) for v in scaled.vertices)
        facets = tuple((y, Fraction(c, den)) for y, c in scaled.facets)
        return cls(scaled.ambient_dim, verts, facets, scaled.dim)

    @property
    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def to_polytope(self) -> Polytope:
        if not self.is_lattice:
            raise ValueError("polytope has non-integral vertices")
        return Polytope.from_vertices([[int(x) for x in v] for v in self.vertices])


# edges and combinators

def edge_lattice_length(P: Polytope, e: Face) -> int:
    """Lattice length of an edge: lattice points on it minus one."""
    if e.dim != 1:
        raise NotAnEdgeError(f"face has dimension {e.dim}")
    u, v = e.vertices
    return vector_gcd([a - b for a, b in zip(u, v)])


def dilate(P: Polytope, k: int) -> Polytope:
    if k <= 0:
        raise BadScaleError(f"dilation factor {k} must be positive")
    verts = tuple(tuple(k * x for x in v) for v in P.vertices)
    return Polytope(P.ambient_dim, verts, tuple((y, k * c) for y, c in P.facets), P.dim)


def product(P: Polytope, Q: Polytope) -> Polytope:
    return Polytope.from_vertices([u + v for u, v in _cartesian(P.vertices, Q.vertices)])


def join(P: Polytope, Q: Polytope) -> Polytope:
    """``conv(P x {0} x {0}  ∪  {0} x Q x {1})``."""
    zp, zq = (0,) * P.ambient_dim, (0,) * Q.ambient_dim
    pts = [v + zq + (0,) for v in P.vertices] + [zp + w + (1,) for w in Q.vertices]
    return Polytope.from_vertices(pts)


def _origin_in_relative_interior(P: Polytope) -> bool:
    origin = (0,) * P.ambient_dim
    if not P.lattice.contains(origin):
        return False
    return all(dot(y, origin) > c for y, c in P.facets)


def free_sum(P: Polytope, Q: Polytope) -> Polytope:
    """``conv(P x {0}  ∪  {0} x Q)``; both must contain 0 in their interior.

    Raises:
        OriginNotInteriorError
    """
    for X in (P, Q):
        if not _origin_in_relative_interior(X):
            raise OriginNotInteriorError(f"origin is not interior to {X!r}")
    zp, zq = (0,) * P.ambient_dim, (0,) * Q.ambient_dim
    return Polytope.from_vertices([v + zq for v in P.vertices] + [zp + w for w in Q.vertices])


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatchError("Minkowski sum needs equal ambient dimensions")
    return Polytope.from_vertices([tuple(a + b for a, b in zip(u, v))
                                   for u, v in _cartesian(P.vertices, Q.vertices)])


def segment(a: int, b: int) -> Polytope:
    """The one-dimensional polytope ``[a, b]``."""
    return Polytope.from_vertices([(a,), (b,)])


def translate(P: Polytope, t) -> Polytope:
    t = tuple(t)
    verts = tuple(tuple(a + b for a, b in zip(v, t)) for v in P.vertices)
    facets = tuple((y, c + dot(y, t)) for y, c in P.facets)
    return Polytope(P.ambient_dim, verts, facets, P.dim)
