from corpus import polygons
from refldim.constructions import pwz_simplex
from refldim.enumerate2d import classify_reflexive_polygons, edge_length_spectrum
from refldim.equivalence import are_equivalent
from refldim.polytope import Polytope
from refldim.reflexive import equivalence_suite, is_reflexive, polar_dual


def test_sixteen_classes():
    res = classify_reflexive_polygons(3)
    assert len(res.classes) == 16 and res.search_box == 3 and res.raw_hits > 16
    assert all(is_reflexive(P).interior_point == (0, 0) for P in res.classes)


def test_class_statistics():
    ps = polygons()
    counts = sorted(len(P.lattice_points()) for P in ps)
    assert counts == [4, 5, 5, 5, 6, 6, 7, 7, 7, 7, 8, 8, 9, 9, 9, 10]
    (big,) = [P for P in ps if len(P.lattice_points()) == 10]
    assert are_equivalent(big, Polytope.from_vertices([(-1, -1), (2, -1), (-1, 2)])) is not None
    assert sorted(len(P.vertices) for P in ps) == [3] * 5 + [4] * 7 + [5] * 3 + [6]


def test_duality_closure():
    ps = polygons()
    for P in ps:
        D = polar_dual(P).to_polytope()
        assert sum(are_equivalent(D, Q) is not None for Q in ps) == 1


def test_suite_on_classes():
    assert all(equivalence_suite(P).consistent for P in polygons())


def test_spectrum():
    assert edge_length_spectrum(polygons()) == {1, 2, 3, 4}
    assert edge_length_spectrum([pwz_simplex(3, modified=True)]) == {1, 2, 3, 12}
    assert edge_length_spectrum([]) == set()
