import random
from fractions import Fraction
from math import factorial

import pytest

from corpus import random_polytope
from refldim.ehrhart import (check_hstar_palindrome, check_reciprocity, check_shifted_duality,
                             count, count_interior, ehrhart_polynomial, interpolate)
from refldim.errors import NotFullDimError
from refldim.polytope import Polytope, segment

SQUARE = Polytope.from_vertices([(-1, -1), (1, -1), (-1, 1), (1, 1)])
UNIT_TRI = Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])
UNIT_SQ = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
S237 = Polytope.from_vertices([(0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 7)])


def test_counts():
    assert count(SQUARE, 1) == 9
    assert count(S237, 0) == 1 and count(segment(3, 5), 0) == 1
    assert count(segment(0, 1), 7) == 8
    assert count_interior(SQUARE, 1) == 1
    assert count_interior(UNIT_TRI, 3) == 1
    assert count_interior(segment(0, 1), 1) == 0
    with pytest.raises(NotFullDimError):
        count_interior(Polytope.from_vertices([(0, 0), (1, 0)]), 1)


def test_count_of_translated_dilation():
    # kP for P not containing the origin
    P = Polytope.from_vertices([(1, 1), (2, 1), (1, 2)])
    assert [count(P, k) for k in range(5)] == [(k + 1) * (k + 2) // 2 for k in range(5)]


def test_polynomial_examples():
    e = ehrhart_polynomial(segment(0, 1))
    assert e.coefficients == (1, 1) and e.hstar == (1, 0)
    e = ehrhart_polynomial(segment(-1, 1))
    assert e.coefficients == (1, 2) and e.hstar == (1, 1)
    e = ehrhart_polynomial(SQUARE)
    assert e.coefficients == (1, 4, 4) and e.hstar == (1, 6, 1)


def test_interpolate_exact():
    assert interpolate([0, 1, 4, 9]) == (0, 0, 1, 0)
    assert interpolate([1, 4, 10]) == (1, Fraction(3, 2), Fraction(3, 2))


def test_reciprocity_examples():
    assert check_reciprocity(SQUARE) and check_reciprocity(UNIT_TRI)


def test_shifted_duality_examples():
    assert check_shifted_duality(SQUARE)
    assert check_shifted_duality(S237)
    assert not check_shifted_duality(Polytope.from_vertices([(-1, -1), (2, -1), (-1, 3)]))


def test_palindrome_examples():
    assert check_hstar_palindrome(segment(-1, 1))
    assert check_hstar_palindrome(SQUARE)
    assert ehrhart_polynomial(UNIT_SQ).hstar == (1, 1, 0)
    assert not check_hstar_palindrome(UNIT_SQ)


@pytest.mark.parametrize("seed", range(6))
def test_invariants_random(seed):
    rng = random.Random(seed)
    for d in (1, 2, 3):
        P = random_polytope(rng, d, -2, 2)
        e = ehrhart_polynomial(P)
        assert e.coefficients[0] == 1
        assert e.coefficients[-1] * factorial(d) == P.normalized_volume
        assert all(h >= 0 for h in e.hstar) and sum(e.hstar) == P.normalized_volume
        assert all(e(k) == count(P, k) for k in range(d + 1, 2 * d + 3))
        assert check_reciprocity(P, e)
