"""Ehrhart polynomials, h*-vectors and the identities they satisfy."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NotFullDimError
from .polytope import Polytope


@dataclass(frozen=True)
class EhrhartData:
    """Ehrhart polynomial (ascending coefficients) and h*-vector."""

    dim: int
    coefficients: tuple[Fraction, ...]
    hstar: tuple[int, ...]

    def __call__(self, k: int) -> Fraction:
        return sum(c * k**i for i, c in enumerate(self.coefficients))


def count(P: Polytope, k: int) -> int:
    """Lattice points in ``kP``."""
    return P.count_points(k)


def count_interior(P: Polytope, k: int) -> int:
    """Lattice points in the interior of ``kP``."""
    if not P.is_full_dimensional:
        raise NotFullDimError("interior counts need a full-dimensional polytope")
    return P.count_points(k, interior=True)


def interpolate(values) -> tuple[Fraction, ...]:
    """Monomial coefficients of the polynomial through ``(k, values[k])``.

    Uses Newton forward differences: f(k) = sum_j diff_j(0) binom(k, j).
    """
    diffs = []
    row = [Fraction(v) for v in values]
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    n = len(values)
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # binom(k, j) as a polynomial in k
    for j, dj in enumerate(diffs):
        for i, b in enumerate(basis):
            coeffs[i] += dj * b
        # binom(k, j+1) = binom(k, j) * (k - j) / (j + 1)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b / (j + 1)
            nxt[i] -= b * j / (j + 1)
        basis = nxt
    return tuple(coeffs)


def hstar_from_counts(values, d: int) -> tuple[int, ...]:
    """Numerator of ``sum_k ehr(k) t^k = h*(t) / (1 - t)^(d+1)``."""
    return tuple(sum((-1) ** i * comb(d + 1, i) * values[j - i] for i in range(j + 1))
                 for j in range(d + 1))


def ehrhart_polynomial(P: Polytope) -> EhrhartData:
    d = P.dim
    values = [count(P, k) for k in range(d + 1)]
    return EhrhartData(d, interpolate(values), hstar_from_counts(values, d))


def check_reciprocity(P: Polytope, data: EhrhartData = None) -> bool:
    """``ehrint(P, k) == (-1)^dim ehr(P, -k)`` for ``k = 1 .. dim + 2``."""
    data = data or ehrhart_polynomial(P)
    d = P.dim
    return all((-1) ** d * data(-k) == count_interior(P, k) for k in range(1, d + 3))


def check_shifted_duality(P: Polytope) -> bool:
    """``ehr(P, k) == ehrint(P, k + 1)``, compared by direct counts.

    Both sides are polynomials of degree ``dim``, so ``dim + 2`` sample
    points decide equality.
    """
    return all(count(P, k) == count_interior(P, k + 1) for k in range(P.dim + 2))


def check_hstar_palindrome(P: Polytope, data: EhrhartData = None) -> bool:
    if not P.is_full_dimensional:
        raise NotFullDimError("palindromicity is tested on full-dimensional polytopes")
    h = (data or ehrhart_polynomial(P)).hstar
    return h == h[::-1]
