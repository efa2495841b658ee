"""Affine unimodular equivalence of lattice polytopes.

Polytopes are compared in lattice coordinates of their affine spans, so a
segment in the plane and a segment on the line can be equivalent.  The
normal form is the lexicographically smallest Hermite normal form of the
translated vertex matrix over all vertex orderings, found by extending
orderings one column at a time and keeping only minimal prefixes (a prefix
of columns of an HNF is the HNF of that column prefix).
"""

from dataclasses import dataclass
from typing import Optional

from .lattice import (IntMatrix, IntVector, determinant, hermite_normal_form,
                      inverse_unimodular, matmul, matvec, vector_gcd)
from .polytope import Face, Polytope


@dataclass(frozen=True)
class AffineUnimodularMap:
    """``x -> linear @ x + translation``.

    Only the restriction to the affine span of the source matters; see
    :func:`is_lattice_bijection`.
    """

    linear: IntMatrix
    translation: IntVector

    def __call__(self, x) -> IntVector:
        return tuple(a + b for a, b in zip(matvec(self.linear, x), self.translation))

    def compose(self, inner: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """``self ∘ inner``."""
        return AffineUnimodularMap(matmul(self.linear, inner.linear), self(inner.translation))

    @classmethod
    def identity(cls, d: int) -> "AffineUnimodularMap":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)), (0,) * d)


@dataclass(frozen=True)
class _Canonical:
    matrix: IntMatrix
    order: tuple[int, ...]
    transform: IntMatrix  # matrix == transform @ (translated intrinsic vertices)


def _canonical(P: Polytope) -> _Canonical:
    pts = P.intrinsic.vertices
    m, r = len(pts), P.dim
    if r == 0:
        return _Canonical((), (0,), ())
    eye = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    zero = tuple((0,) for _ in range(r))
    states = [((i,), zero, eye) for i in range(m)]
    for _ in range(m - 1):
        best, nxt = None, []
        for order, H, U in states:
            base = pts[order[0]]
            used = set(order)
            for v in range(m):
                if v in used:
                    continue
                col = matvec(U, [a - b for a, b in zip(pts[v], base)])
                Hn, step = hermite_normal_form([row + (c,) for row, c in zip(H, col)])
                key = tuple(row[-1] for row in Hn)
                if best is None or key < best:
                    best, nxt = key, []
                if key == best:
                    nxt.append((order + (v,), Hn, step, U))
        states = [(order, Hn, matmul(step, U)) for order, Hn, step, U in nxt]
    order, H, U = min(states, key=lambda s: s[0])
    return _Canonical(H, order, U)


def normal_form(P: Polytope) -> IntMatrix:
    """Canonical vertex matrix, invariant under lattice equivalence."""
    return _canonical(P).matrix


def reduced_map(P: Polytope) -> "AffineUnimodularMap":
    """Lattice coordinates on ``aff P`` in which ``P`` has its normal form.

    The first vertex of the canonical order goes to the origin and the
    others to the columns of :func:`normal_form`.
    """
    cp = _canonical(P)
    lat = P.lattice
    if P.dim == 0:
        return AffineUnimodularMap((), ())
    pit = tuple(zip(*lat.projection))
    w = P.intrinsic.vertices[cp.order[0]]
    linear = matmul(cp.transform, pit)
    shift = matvec(cp.transform, [a + b for a, b in zip(matvec(pit, lat.origin), w)])
    return AffineUnimodularMap(linear, tuple(-x for x in shift))


def fingerprint(P: Polytope) -> tuple[int, int, int, int]:
    """Cheap equivalence invariants: dim, vertex count, volume, point count."""
    return (P.dim, len(P.vertices), P.normalized_volume, P.count_points())


def _witness(P: Polytope, cp: _Canonical, Q: Polytope, cq: _Canonical) -> AffineUnimodularMap:
    lp, lq = P.lattice, Q.lattice
    r = P.dim
    if r == 0:
        linear = tuple((0,) * P.ambient_dim for _ in range(Q.ambient_dim))
        return AffineUnimodularMap(linear, Q.vertices[0])
    N = matmul(inverse_unimodular(cq.transform), cp.transform)
    wp = P.intrinsic.vertices[cp.order[0]]
    wq = Q.intrinsic.vertices[cq.order[0]]
    # ambient x -> o_Q + B_Q^T (N (Pi_P^T (x - o_P) - w_P) + w_Q)
    BqT = tuple(zip(*lq.basis))
    PipT = tuple(zip(*lp.projection))
    linear = matmul(matmul(BqT, N), PipT)
    shift = [a - b for a, b in zip(wq, matvec(N, wp))]
    translation = tuple(a + b - c for a, b, c in
                        zip(lq.origin, matvec(BqT, shift), matvec(linear, lp.origin)))
    return AffineUnimodularMap(linear, translation)


def is_lattice_bijection(f: AffineUnimodularMap, P: Polytope, Q: Polytope) -> bool:
    """Whether ``f`` maps the lattice of ``aff P`` bijectively onto that of ``aff Q``."""
    if P.dim != Q.dim:
        return False
    lp, lq = P.lattice, Q.lattice
    o = f(lp.origin)
    if not lq.contains(o):
        return False
    cols = []
    for b in lp.basis:
        img = f(tuple(x + y for x, y in zip(lp.origin, b)))
        if not lq.contains(img):
            return False
        cols.append([a - c for a, c in zip(lq.coords(img), lq.coords(o))])
    return P.dim == 0 or abs(determinant(cols)) == 1


def maps_onto(f: AffineUnimodularMap, P: Polytope, vertices) -> bool:
    return {f(v) for v in P.vertices} == {tuple(v) for v in vertices}


def are_equivalent(P: Polytope, Q: Polytope) -> Optional[AffineUnimodularMap]:
    """A verified lattice equivalence carrying ``P`` onto ``Q``, or None."""
    if (P.dim, len(P.vertices)) != (Q.dim, len(Q.vertices)):
        return None
    if P.normalized_volume != Q.normalized_volume:
        return None
    cp, cq = _canonical(P), _canonical(Q)
    if cp.matrix != cq.matrix:
        return None
    f = _witness(P, cp, Q, cq)
    if not (maps_onto(f, P, Q.vertices) and is_lattice_bijection(f, P, Q)):
        raise AssertionError("equivalence witness failed verification")
    return f


def _pair_lengths(vertices) -> list[int]:
    """Sorted lattice lengths of all vertex pairs, an equivalence invariant."""
    vs = list(vertices)
    return sorted(vector_gcd([a - b for a, b in zip(u, w)])
                  for i, u in enumerate(vs) for w in vs[i + 1:])


def find_equivalent_face(P: Polytope, Q: Polytope) -> Optional[tuple[Face, AffineUnimodularMap]]:
    """First face of ``Q`` lattice equivalent to ``P``, with the witness.

    The improper face ``Q`` itself is included.
    """
    if P.dim > Q.dim:
        return None
    target = fingerprint(P)
    cp = None
    lengths = {vector_gcd([a - b for a, b in zip(*e.vertices)]) for e in P.faces(1)} if P.dim > 1 else set()

    def prune(mask, j):
        # edges of a face equivalent to P have lattice lengths found in P
        if j != 1 or P.dim <= 1:
            return True
        u, v = (Q.vertices[i] for i in range(len(Q.vertices)) if mask >> i & 1)
        return vector_gcd([a - b for a, b in zip(u, v)]) in lengths

    distances = _pair_lengths(P.vertices)
    m = target[1]
    for mask in Q.face_masks(P.dim, max_vertices=m, prune=prune):
        if mask.bit_count() != m:
            continue
        verts = [v for i, v in enumerate(Q.vertices) if mask >> i & 1]
        if _pair_lengths(verts) != distances:
            continue
        face = Q._face(mask, P.dim)
        F = face.polytope()
        if fingerprint(F) != target:
            continue
        cp = cp or _canonical(P)
        cf = _canonical(F)
        if cf.matrix == cp.matrix:
            f = _witness(P, cp, F, cf)
            if not (maps_onto(f, P, F.vertices) and is_lattice_bijection(f, P, F)):
                raise AssertionError("face witness failed verification")
            return face, f
    return None
