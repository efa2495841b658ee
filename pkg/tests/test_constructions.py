import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import polygons, random_polytope
from refldim import constructions as C
from refldim.equivalence import are_equivalent, find_equivalent_face
from refldim.errors import (BadDimensionError, BadFacetError, BadLengthError,
                            NotDecomposableError, NotReflexiveInputError)
from refldim.polytope import (Polytope, dilate, edge_lattice_length, free_sum, join,
                              product, segment)
from refldim.reflexive import is_reflexive

SQUARE = Polytope.from_vertices([(-1, -1), (1, -1), (-1, 1), (1, 1)])


def longest_edge(P):
    return max(edge_lattice_length(P, e) for e in P.faces(1))


def test_simplex_S():
    assert C.simplex_S(C.SimplexSpec((1, 1))).vertices == ((0, 0), (0, 1), (1, 0))
    assert is_reflexive(C.simplex_S(C.SimplexSpec((2, 3, 7)))).is_reflexive
    r = is_reflexive(C.simplex_S(C.SimplexSpec((4, 2, 5))))
    assert r.is_reflexive and r.interior_point == (1, 1, 1)
    with pytest.raises(ValueError):
        C.SimplexSpec((2, 0))


def test_s_reflexive_test_examples():
    assert C.s_reflexive_test(C.SimplexSpec((2, 3, 7)))
    assert C.s_reflexive_test(C.SimplexSpec((2, 3, 12)))
    assert not C.s_reflexive_test(C.SimplexSpec((2, 2)))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=3))
def test_s_reflexive_test_matches_oracle(a):
    S = C.simplex_S(C.SimplexSpec(tuple(a)))
    assert C.s_reflexive_test(C.SimplexSpec(tuple(a))) == is_reflexive(S).is_reflexive


def test_sylvester():
    assert C.sylvester(1) == [2]
    assert C.sylvester(4) == [2, 3, 7, 43]
    assert C.sylvester(5) == [2, 3, 7, 43, 1807]
    with pytest.raises(BadDimensionError):
        C.sylvester(0)


def test_pwz():
    S = C.pwz_simplex(3, modified=True)
    assert S.vertices == C.simplex_S((2, 3, 12)).vertices and longest_edge(S) == 12
    S = C.pwz_simplex(4, modified=True)
    assert S.vertices == C.simplex_S((2, 3, 7, 84)).vertices and longest_edge(S) == 84
    S = C.pwz_simplex(3)
    assert longest_edge(S) == 7 > 2 ** 2 ** 1
    with pytest.raises(BadDimensionError):
        C.pwz_simplex(1, modified=True)


@pytest.mark.parametrize("d", range(2, 6))
def test_pwz_properties(d):
    S = C.pwz_simplex(d)
    t = C.sylvester(d)
    assert longest_edge(S) == t[-1] > 2 ** 2 ** (d - 2)
    assert is_reflexive(S).interior_point == (1,) * d


def test_wedge_segment():
    P = segment(-1, 2)
    k = P.facets.index(((-1,), -2))
    assert C.wedge(P, k).vertices == ((-1, -1), (-1, 2), (2, -1))
    with pytest.raises(BadFacetError):
        C.wedge(P, 5)


def test_wedge_has_bottom_facet():
    rng = random.Random(2)
    for _ in range(10):
        P = random_polytope(rng, 2, -3, 3)
        for k in range(len(P.facets)):
            W = C.wedge(P, k)
            F = W.face_with_vertices([v + (-1,) for v in P.vertices])
            assert F.dim == P.dim and are_equivalent(F.polytope(), P) is not None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_wedge_matches_vertex_enumeration(seed):
    rng = random.Random(seed)
    P = random_polytope(rng, rng.choice((1, 2, 3)), -3, 3)
    k = rng.randrange(len(P.facets))
    A = [y + (-int(i == k),) for i, y in enumerate(P.normals)] + [(0,) * P.ambient_dim + (1,)]
    c = [off + int(i == k) for i, off in enumerate(P.offsets)] + [-1]
    W, Q = C.wedge(P, k), Polytope.from_inequalities(A, c)
    assert (W.vertices, W.facets, W.dim) == (Q.vertices, Q.facets, Q.dim)


def test_pad_with_interior():
    P, top = C.pad_with_interior(Polytope.from_vertices([(0,)]))
    assert P.vertices == ((-1, -1), (0, 1), (1, -1)) and P.interior_lattice_points() == [(0, 0)]
    P, top = C.pad_with_interior(segment(0, 1))
    assert P.vertices == ((-1, -1), (0, 1), (1, 1), (2, -1))
    assert P.interior_lattice_points() == [(0, 0), (1, 0)]
    assert top.vertices == [(0, 1), (1, 1)]


def test_embed_wedge_examples():
    w = C.embed_reflexive_wedge(segment(-1, 1))
    assert w.dimension == 1 and w.verify()
    w = C.embed_reflexive_wedge(segment(-1, 3))
    assert w.dimension == 3 and w.details["wedges"] == 2 and w.verify()
    assert find_equivalent_face(segment(0, 4), w.host) is not None
    w = C.embed_reflexive_wedge(segment(0, 1))
    assert w.details["padded"] and w.verify()
    assert 1 in {edge_lattice_length(w.host, e) for e in w.host.faces(1)}


def test_embed_wedge_lower_dimensional_and_point():
    for P in (Polytope.from_vertices([(1, 2, 0), (3, 5, 0)]), Polytope.from_vertices([(4, 4)]),
              Polytope.from_vertices([(0, 0, 0), (2, 0, 0), (0, 2, 0)])):
        w = C.embed_reflexive_wedge(P)
        assert w.verify()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_embed_wedge_dimension_count(seed):
    P = random_polytope(random.Random(seed), 2, -3, 3)
    w = C.embed_reflexive_wedge(P)
    assert w.verify()
    assert w.dimension == w.details["start_dim"] + w.details["excess"]


def test_practical_numbers():
    assert [N for N in range(1, 30) if C.is_practical(N)] == [1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28]
    assert C.choose_practical_N(5) == 4
    assert C.choose_practical_N(3) == 2


def test_divisor_decompose():
    assert C.divisor_decompose(3, 4) == [2, 1]
    assert C.divisor_decompose(0, 12) == []
    # greedy over {1, 2, 3, 4, 6, 12}: 12, then 3
    assert C.divisor_decompose(15, 12) == [12, 3]
    with pytest.raises(NotDecomposableError):
        C.divisor_decompose(29, 12)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 200).filter(C.is_practical).flatmap(
    lambda N: st.tuples(st.just(N), st.integers(0, sum(C.divisors(N))))))
def test_divisor_decompose_property(args):
    N, m = args
    parts = C.divisor_decompose(m, N)
    assert sum(parts) == m and all(N % x == 0 for x in parts)
    assert parts == sorted(set(parts), reverse=True)


def test_segment_embed_examples():
    w = C.segment_embed(5)
    assert w.host.vertices == C.simplex_S((4, 2, 5)).vertices and w.dimension == 3 and w.verify()
    w = C.segment_embed(2)
    assert w.host.vertices == ((-1,), (1,)) and w.dimension == 1
    w = C.segment_embed(1)
    assert w.dimension == 2 and w.verify()
    # smallest practical N for 12 is 6: 65 = 5*12 + 5 with 5 = 3 + 2 twice
    w = C.segment_embed(12)
    assert w.details["decomposition"].spec.a == (3, 2, 36, 24, 12) and w.dimension == 5
    with pytest.raises(BadLengthError):
        C.segment_embed(0)


def test_dilation_examples():
    w = C.dilation_embed(C.SimplexSpec((2,)), segment(-1, 1))
    assert w.host.vertices == ((0, 0), (2, -2), (2, 2)) and w.verify()
    assert are_equivalent(w.face.polytope(), segment(-2, 2)) is not None
    w = C.dilation_embed(C.SimplexSpec((2, 3, 12)), segment(-1, 1))
    assert w.dimension == 4 and w.verify()
    assert are_equivalent(w.face.polytope(), segment(-12, 12)) is not None


def test_dilation_rejects_bad_input():
    with pytest.raises(NotReflexiveInputError):
        C.dilation_embed(C.SimplexSpec((2, 2)), segment(-1, 1))
    with pytest.raises(NotReflexiveInputError):
        C.dilation_embed(C.SimplexSpec((2,)), segment(0, 2))


def test_refldim_upper_examples():
    w = C.refldim_upper(segment(0, 1), 2)
    assert w.dimension == 1 and w.verify()
    w = C.refldim_upper(segment(0, 1), 5)
    assert w.dimension <= 3 and w.verify()
    w = C.refldim_upper(SQUARE, 2)
    assert w.dimension == 3 and w.construction == "dilation" and w.verify()


def test_product_and_free_sum_closure():
    ps = polygons()
    for P, Q in [(ps[0], ps[5]), (ps[3], segment(-1, 1)), (ps[15], ps[15])]:
        assert is_reflexive(product(P, Q)).is_reflexive
        assert is_reflexive(free_sum(P, Q)).is_reflexive


def test_join_is_face_of_free_sum_of_hosts():
    for P, Q in [(segment(0, 1), segment(0, 3)), (Polytope.from_vertices([(0, 0), (1, 0), (0, 1)]), segment(0, 2))]:
        wp, wq = C.embed_reflexive_wedge(P), C.embed_reflexive_wedge(Q)
        host = free_sum(wp.host, wq.host)
        assert is_reflexive(host).is_reflexive
        assert find_equivalent_face(join(P, Q), host) is not None
