"""Reflexive polytopes containing a given polytope as a face.

Four constructions are provided:

* iterated wedges over facets at lattice distance > 1 from an interior
  point (:func:`embed_reflexive_wedge`),
* the simplices ``S(a) = conv(0, a_1 e_1, ..., a_d e_d)``, in particular the
  Sylvester simplices (:func:`pwz_simplex`) and the divisor-sum simplices
  realizing a long edge (:func:`segment_embed`),
* dilated reflexive polytopes as faces of a simplex-based join
  (:func:`dilation_embed`),

and :func:`refldim_upper` picks the smallest host among them.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt, lcm
from typing import Iterator, Optional

from .equivalence import (AffineUnimodularMap, are_equivalent,
                          is_lattice_bijection, maps_onto, reduced_map)
from .errors import (BadDimensionError, BadFacetError, BadLengthError,
                     NotDecomposableError, NotFullDimError,
                     NotReflexiveInputError)
from .lattice import dot
from .polytope import Face, Polytope, dilate, segment, translate
from .reflexive import is_reflexive


@dataclass(frozen=True)
class SimplexSpec:
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a or any(x < 1 for x in self.a):
            raise ValueError(f"simplex parameters must be positive, got {self.a}")


@dataclass(frozen=True)
class EmbeddingWitness:
    """``map`` carries ``source`` onto ``face`` of the reflexive ``host``."""

    source: Polytope
    host: Polytope
    map: AffineUnimodularMap
    face: Face
    construction: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @property
    def dimension(self) -> int:
        return self.host.dim

    def verify(self, check_host: bool = True) -> bool:
        if check_host and not is_reflexive(self.host).is_reflexive:
            return False
        if not maps_onto(self.map, self.source, self.face.vertices):
            return False
        return is_lattice_bijection(self.map, self.source, self.face.polytope())


def _witness(source, host, f, construction, **details) -> EmbeddingWitness:
    face = host.face_with_vertices([f(v) for v in source.vertices])
    if face is None:
        raise AssertionError(f"{construction}: image of the source is not a face")
    return EmbeddingWitness(source, host, f, face, construction, details)


# simplices

def simplex_S(spec) -> Polytope:
    """``conv(0, a_1 e_1, ..., a_d e_d)``."""
    a = spec.a if isinstance(spec, SimplexSpec) else SimplexSpec(tuple(spec)).a
    d = len(a)
    pts = [(0,) * d] + [tuple(x if i == j else 0 for j in range(d)) for i, x in enumerate(a)]
    return Polytope.from_vertices(pts)


def s_reflexive_test(spec) -> bool:
    """Closed-form reflexivity of ``S(a)``: ``sum L/a_i == L - 1``, ``L = lcm(a)``.

    The slanted facet has primitive normal ``(L/a_1, ..., L/a_d)`` and
    offset ``L``; the coordinate facets are at distance one from the
    all-ones point, which is the only candidate.
    """
    a = spec.a if isinstance(spec, SimplexSpec) else tuple(spec)
    L = lcm(*a)
    return sum(L // x for x in a) == L - 1


def sylvester(d: int) -> list[int]:
    """``t_1 = 2``, ``t_{i+1} = t_i^2 - t_i + 1``."""
    if d < 1:
        raise BadDimensionError("need at least one term")
    out = [2]
    while len(out) < d:
        t = out[-1]
        out.append(t * t - t + 1)
    return out


def pwz_simplex(d: int, modified: bool = False) -> Polytope:
    """``S(t_1, ..., t_d)``, or ``S(t_1, ..., t_{d-1}, 2 t_d - 2)`` if modified."""
    if d < 1 or (modified and d < 2):
        raise BadDimensionError(f"d = {d} is too small")
    t = sylvester(d)
    if modified:
        t[-1] = 2 * t[-1] - 2
    return simplex_S(SimplexSpec(tuple(t)))


# wedges

def wedge(P: Polytope, facet_index: int) -> Polytope:
    """Wedge of ``P`` over facet ``k``.

    Facet ``<y_k, x> >= c_k`` is replaced by ``<y_k, x> - t >= c_k + 1`` and
    ``t >= -1`` is added.  The result has ``P x {-1}`` as a facet; with 0 in
    the interior, the distance of facet ``k`` from the origin drops by one
    and the new facet is at distance one.

    Raises:
        NotFullDimError, BadFacetError
    """
    if not P.is_full_dimensional:
        raise NotFullDimError("wedges are taken over facets of full-dimensional polytopes")
    if not 0 <= facet_index < len(P.facets):
        raise BadFacetError(f"facet index {facet_index} out of range")
    # W = {(x, t) : x in P, -1 <= t <= g(x)} with g(x) = <y_k, x> - c_k - 1,
    # so its vertices sit over those of P and the system above is irredundant
    yk, ck = P.facets[facet_index]
    verts = {v + (-1,) for v in P.vertices}
    verts |= {v + (dot(yk, v) - ck - 1,) for v in P.vertices}
    facets = [(y + (0,), off) for i, (y, off) in enumerate(P.facets) if i != facet_index]
    facets += [(yk + (-1,), ck + 1), ((0,) * P.ambient_dim + (1,), -1)]
    W = Polytope(P.ambient_dim + 1, tuple(sorted(verts)), tuple(sorted(facets)), P.dim + 1)
    bottom = W.face_with_vertices([v + (-1,) for v in P.vertices])
    if bottom is None or bottom.dim != P.dim:
        raise AssertionError("wedge lost the facet P x {-1}")
    return W


def pad_with_interior(P: Polytope) -> tuple[Polytope, Face]:
    """``conv(B x {-1}  ∪  P x {1})`` with ``B`` the bounding box of ``P``
    grown by one in every direction.

    ``(p, 0)`` is an interior lattice point for every lattice point ``p`` of
    ``P``, and ``P x {1}`` is a face.
    """
    d = P.ambient_dim
    lo = [min(v[i] for v in P.vertices) - 1 for i in range(d)]
    hi = [max(v[i] for v in P.vertices) + 1 for i in range(d)]
    corners = [()]
    for a, b in zip(lo, hi):
        corners = [c + (x,) for c in corners for x in (a, b)]
    Pp = Polytope.from_vertices([c + (-1,) for c in corners] + [v + (1,) for v in P.vertices])
    top = Pp.face_with_vertices([v + (1,) for v in P.vertices])
    return Pp, top


def _affine(linear, translation) -> AffineUnimodularMap:
    return AffineUnimodularMap(tuple(tuple(r) for r in linear), tuple(translation))


def _excess(P: Polytope, x0) -> int:
    return sum(dot(y, x0) - c - 1 for y, c in P.facets)


def embed_reflexive_wedge(P: Polytope) -> EmbeddingWitness:
    """Embed ``P`` as a face of a reflexive polytope by iterated wedges.

    ``P`` is moved to lattice coordinates of its span, padded by
    :func:`pad_with_interior` if it has no interior lattice point (in
    whichever of two coordinate systems gives fewer wedges), and
    translated so that the interior point with the fewest wedge steps sits
    at the origin.  Each wedge over a facet at distance ``> 1`` lowers the
    total excess ``||1 + c||_1`` by one.
    """
    lat = P.lattice
    d = P.ambient_dim
    pit = [list(col) for col in zip(*lat.projection)] if lat.basis else []
    f = _affine(pit, [-dot(row, lat.origin) for row in pit])
    if P.dim == 0:
        host = segment(-1, 1)
        g = _affine([[0] * d], [1])
        return _witness(P, host, g, "wedge", start_dim=1, wedges=0)
    cur = Polytope.from_vertices([f(v) for v in P.vertices])
    padded = not cur.interior_lattice_points()
    if padded:
        # the padding depends on the coordinates; also try the reduced ones
        best = None
        for g in (f, reduced_map(P)):
            top = Polytope.from_vertices([g(v) for v in P.vertices])
            Pp, _ = pad_with_interior(top)
            x0 = min(Pp.interior_lattice_points(), key=lambda x: (_excess(Pp, x), x))
            if best is None or _excess(Pp, x0) < best[0]:
                best = (_excess(Pp, x0), Pp, g, x0)
        _, cur, g, x0 = best
        f = _affine([list(r) for r in g.linear] + [[0] * d], list(g.translation) + [1])
    else:
        x0 = min(cur.interior_lattice_points(), key=lambda x: (_excess(cur, x), x))
    cur = translate(cur, [-x for x in x0])
    f = _affine(f.linear, [a - b for a, b in zip(f.translation, x0)])
    start_dim, excess = cur.dim, _excess(cur, (0,) * cur.ambient_dim)
    steps = 0
    while True:
        k = next((i for i, c in enumerate(cur.offsets) if c < -1), None)
        if k is None:
            break
        cur = wedge(cur, k)
        f = _affine([list(r) for r in f.linear] + [[0] * d], list(f.translation) + [-1])
        steps += 1
    return _witness(P, cur, f, "wedge", start_dim=start_dim, excess=excess,
                    wedges=steps, padded=padded)


# divisor-sum simplices for segments

@lru_cache(maxsize=None)
def divisors(N: int) -> tuple[int, ...]:
    small = [k for k in range(1, isqrt(N) + 1) if N % k == 0]
    return tuple(sorted(set(small + [N // k for k in small])))


def is_practical(N: int) -> bool:
    """Every ``1 <= m <= sigma(N)`` is a sum of distinct divisors of ``N``.

    Equivalent to each sorted divisor being at most one more than the sum
    of the smaller ones.
    """
    total = 0
    for x in divisors(N):
        if x > total + 1:
            return False
        total += x
    return True


def practical_numbers(start: int = 1) -> Iterator[int]:
    N = start
    while True:
        if is_practical(N):
            yield N
        N += 1


def divisor_decompose(m: int, N: int) -> list[int]:
    """Greedy largest-first split of ``m`` into distinct divisors of ``N``.

    Greedy succeeds for every ``m <= sigma(N)`` when ``N`` is practical.

    Raises:
        NotDecomposableError
    """
    divs = divisors(N)
    if m < 0 or m > sum(divs):
        raise NotDecomposableError(f"{m} exceeds the divisor sum of {N}")
    out = []
    for x in reversed(divs):
        if x <= m:
            out.append(x)
            m -= x
    if m:
        raise NotDecomposableError(f"greedy split failed; {N} is not practical")
    return out


def _split(N: int, ell: int) -> tuple[int, int]:
    return divmod(N * ell - N - 1, ell)


def choose_practical_N(ell: int) -> int:
    """Smallest practical ``N >= 2`` with ``N*ell - N - 1 = m*ell + n``,
    ``0 <= n < ell`` and both ``m, n < N``."""
    if ell < 2:
        raise BadLengthError(f"length {ell} < 2")
    for N in practical_numbers(2):
        m, n = _split(N, ell)
        if m < N and n < N:
            return N


@dataclass(frozen=True)
class SegmentDecomposition:
    ell: int
    N: int
    m: int
    n: int
    m_parts: tuple[int, ...]
    n_parts: tuple[int, ...]

    @property
    def spec(self) -> SimplexSpec:
        a = [self.N // x for x in self.m_parts]
        b = [self.N * self.ell // x for x in self.n_parts]
        return SimplexSpec(tuple(a + b + [self.ell]))

    def identity_holds(self) -> bool:
        """``sum m_i * ell + sum n_j + N == N * ell - 1``."""
        return sum(self.m_parts) * self.ell + sum(self.n_parts) + self.N == self.N * self.ell - 1


def segment_decomposition(ell: int) -> SegmentDecomposition:
    N = choose_practical_N(ell)
    m, n = _split(N, ell)
    # smallest parts first, so the simplex lists its largest entries first
    m_parts = tuple(sorted(divisor_decompose(m, N)))
    n_parts = tuple(sorted(divisor_decompose(n, N)))
    return SegmentDecomposition(ell, N, m, n, m_parts, n_parts)


def segment_spec(k: int) -> SimplexSpec:
    """A reflexive ``S(a_1, ..., a_r)`` with ``a_r == k`` (``k >= 2``)."""
    if k == 2:
        return SimplexSpec((2,))
    return segment_decomposition(k).spec


def segment_embed(ell: int, check: bool = True) -> EmbeddingWitness:
    """Reflexive host with an edge of lattice length ``ell``.

    Raises:
        BadLengthError: for ``ell < 1``.
    """
    if ell < 1:
        raise BadLengthError(f"length {ell} < 1")
    source = segment(0, ell)
    if ell == 1:
        host = Polytope.from_vertices([(1, 0), (0, 1), (-1, -1)])
        return _witness(source, host, _affine([[1], [-1]], [0, 1]), "segment")
    if ell == 2:
        return _witness(source, segment(-1, 1), _affine([[1]], [-1]), "segment")
    dec = segment_decomposition(ell)
    if not dec.identity_holds():
        raise AssertionError(f"divisor identity fails for ell = {ell}")
    spec = dec.spec
    if check and not s_reflexive_test(spec):
        raise AssertionError(f"S{spec.a} is not reflexive")
    host = simplex_S(spec)
    D = len(spec.a)
    f = _affine([[int(i == D - 1)] for i in range(D)], [0] * D)
    return _witness(source, host, f, "segment", decomposition=dec)


# dilations

def dilation_embed(spec: SimplexSpec, P: Polytope) -> EmbeddingWitness:
    """Reflexive host containing ``a_r P`` as a face.

    ``Q = conv(0, (a_i e_i, 0) for i < r, (a_r e_r, a_r P))``.  The vertex
    description is checked against ``{(x, y) : x in S(a), x_r 1 + A y >= 0}``
    on every call.

    Raises:
        NotReflexiveInputError: if ``S(a)`` is not reflexive or ``P`` is not
            reflexive with interior point 0.
    """
    a = spec.a
    r = len(a)
    if not s_reflexive_test(spec):
        raise NotReflexiveInputError(f"S{a} is not reflexive")
    if not P.is_full_dimensional:
        raise NotReflexiveInputError("P must be full-dimensional")
    s = P.ambient_dim
    origin = (0,) * s
    if not all(c == -1 for c in P.offsets) or not P.contains(origin):
        raise NotReflexiveInputError("P must be reflexive with interior point 0")
    ar = a[-1]
    unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    pts = [(0,) * (r + s)]
    pts += [tuple(a[i] * x for x in unit[i]) + origin for i in range(r - 1)]
    pts += [tuple(ar * x for x in unit[-1]) + tuple(ar * y for y in v) for v in P.vertices]
    Q1 = Polytope.from_vertices(pts)

    L = lcm(*a)
    A = [unit[i] + origin for i in range(r)]
    c = [0] * r
    A.append(tuple(-(L // x) for x in a) + origin)
    c.append(-L)
    for y, _ in P.facets:
        A.append(unit[-1] + y)
        c.append(0)
    Q2 = Polytope.from_inequalities(A, c)
    if (Q1.vertices, Q1.facets) != (Q2.vertices, Q2.facets):
        raise AssertionError("vertex and inequality descriptions disagree")

    source = dilate(P, ar)
    linear = [[0] * s for _ in range(r)] + [[int(i == j) for j in range(s)] for i in range(s)]
    shift = tuple(ar * x for x in unit[-1]) + origin
    return _witness(source, Q1, _affine(linear, shift), "dilation", spec=spec,
                    inequality_form_agrees=True)


def _segment_length(P: Polytope) -> int:
    (u, v) = P.vertices
    from math import gcd
    from functools import reduce
    return reduce(gcd, (a - b for a, b in zip(u, v)), 0)


def refldim_upper(P: Polytope, k: int = 1) -> EmbeddingWitness:
    """Lowest-dimensional reflexive host for ``kP`` among the constructions.

    The achieved dimension is an upper bound for the reflexive dimension of
    ``kP``, never a claim of optimality.
    """
    kP = dilate(P, k) if k > 1 else P
    candidates = [embed_reflexive_wedge(kP)]
    if P.dim == 1:
        ell = _segment_length(kP)
        seg = segment_embed(ell)
        g = are_equivalent(kP, seg.source)
        candidates.append(_witness(kP, seg.host, seg.map.compose(g), "segment",
                                   **seg.details))
    if k > 1 and P.dim >= 1:
        base = embed_reflexive_wedge(P)
        Q = base.host
        dil = dilation_embed(segment_spec(k), Q)
        L, t = base.map.linear, base.map.translation
        scaled = AffineUnimodularMap(L, tuple(k * x for x in t))
        candidates.append(_witness(kP, dil.host, dil.map.compose(scaled), "dilation",
                                   base_dim=Q.dim, spec=dil.details["spec"]))
    return min(candidates, key=lambda w: w.host.dim)
