"""Reflexivity certificates, polar duality and the equivalent criteria.

A full-dimensional lattice polytope ``{x : A x >= c}`` is reflexive when it
has an interior lattice point ``x0`` with ``A x0 - c`` equal to the all-ones
vector.  This module evaluates that definition and four other criteria that
must agree with it whenever the interior lattice point is unique:
integrality of the polar dual, the facet-volume identity, the shifted
Ehrhart identity and h*-palindromicity.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .ehrhart import (check_hstar_palindrome, check_shifted_duality,
                      ehrhart_polynomial)
from .errors import (BadDimensionError, InteriorNotUniqueError, NotFullDimError,
                     NotInteriorError)
from .lattice import IntVector, dot, solve
from .polytope import Polytope, RationalPolytope


@dataclass(frozen=True)
class ReflexivityReport:
    interior_point: Optional[IntVector]
    facet_distances: tuple[int, ...]
    is_reflexive: bool
    interior_count: int

    def __bool__(self):
        return self.is_reflexive


def _distance_one_point(P: Polytope) -> Optional[IntVector]:
    """The lattice point with ``A x0 - c == 1``, if one exists."""
    sol = solve(P.normals, [c + 1 for c in P.offsets])
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    x0 = tuple(int(x) for x in sol)
    if all(dot(y, x0) - c == 1 for y, c in P.facets):
        return x0
    return None


def is_reflexive(P: Polytope) -> ReflexivityReport:
    """Evaluate the reflexivity certificate.

    If the facet system ``A x = c + 1`` has an integral solution ``x0``,
    then ``x0`` is the unique interior lattice point: any interior lattice
    point ``x`` has ``A (x - x0) >= 0``, which forces ``x = x0`` in a
    bounded polytope.  Otherwise the interior points are enumerated.

    Raises:
        NotFullDimError: for lower-dimensional input.
    """
    if not P.is_full_dimensional:
        raise NotFullDimError("reflexivity is defined for full-dimensional polytopes")
    x0 = _distance_one_point(P)
    if x0 is not None:
        return ReflexivityReport(x0, (1,) * len(P.facets), True, 1)
    interior = P.interior_lattice_points()
    if len(interior) != 1:
        return ReflexivityReport(None, (), False, len(interior))
    x0 = interior[0]
    dist = tuple(dot(y, x0) - c for y, c in P.facets)
    return ReflexivityReport(x0, dist, False, 1)


def polar_dual(P: Polytope, x0=None) -> RationalPolytope:
    """Polar dual of ``P - x0``: ``{y : <y, x> >= -1 for x in P - x0}``.

    Its vertices are ``y_i / (-c_i)`` for the translated facet data.

    Raises:
        NotInteriorError: if ``x0`` is not an interior point.
    """
    if not P.is_full_dimensional:
        raise NotFullDimError("polar duality needs a full-dimensional polytope")
    x0 = tuple(x0) if x0 is not None else (0,) * P.ambient_dim
    shifted = [(y, c - dot(y, x0)) for y, c in P.facets]
    if any(c >= 0 for _, c in shifted):
        raise NotInteriorError(f"{x0} is not in the interior")
    dual = RationalPolytope.from_vertices(
        [tuple(Fraction(a, -c) for a in y) for y, c in shifted])
    return dual


def _unique_interior(P: Polytope) -> IntVector:
    report = is_reflexive(P)
    if report.interior_count != 1:
        raise InteriorNotUniqueError(f"{report.interior_count} interior lattice points")
    return report.interior_point


def check_dual_integrality(P: Polytope) -> bool:
    """Whether the polar dual about the interior point is a lattice polytope."""
    return polar_dual(P, _unique_interior(P)).is_lattice


def check_facet_volume_identity(P: Polytope) -> bool:
    """``vol(P) == sum of vol(F)`` over facets, each in its own lattice."""
    _unique_interior(P)
    return P.normalized_volume == sum(F.polytope().normalized_volume
                                      for F in P.faces(P.dim - 1))


@dataclass(frozen=True)
class SuiteReport:
    distance_one: bool
    dual_integral: bool
    facet_volumes: bool
    shifted_ehrhart: bool
    hstar_palindromic: bool

    @property
    def values(self) -> tuple[bool, ...]:
        return (self.distance_one, self.dual_integral, self.facet_volumes,
                self.shifted_ehrhart, self.hstar_palindromic)

    @property
    def consistent(self) -> bool:
        return len(set(self.values)) == 1


def equivalence_suite(P: Polytope) -> SuiteReport:
    """Evaluate the five equivalent reflexivity criteria independently."""
    report = is_reflexive(P)
    if report.interior_count != 1:
        raise InteriorNotUniqueError(f"{report.interior_count} interior lattice points")
    return SuiteReport(
        distance_one=report.is_reflexive,
        dual_integral=check_dual_integrality(P),
        facet_volumes=check_facet_volume_identity(P),
        shifted_ehrhart=check_shifted_duality(P),
        hstar_palindromic=check_hstar_palindrome(P, ehrhart_polynomial(P)),
    )


def volume_upper_bound(D: int) -> int:
    """``14 ** (2**(D+1) * D) * D!``: the volume bound for D-polytopes with
    exactly one interior lattice point."""
    if D < 1:
        raise BadDimensionError("dimension must be at least 1")
    return 14 ** (2 ** (D + 1) * D) * factorial(D)


def refldim_lower_bound(P: Polytope) -> int:
    """Smallest ``D >= dim P`` whose volume bound admits ``vol(P)``.

    Any reflexive polytope having ``P`` as a face has at least this
    dimension, since ``vol(P) <= vol(Q)`` for a face ``P`` of ``Q``.
    """
    vol = P.normalized_volume
    D = max(P.dim, 1)
    while volume_upper_bound(D) < vol:
        D += 1
    return D
