from itertools import combinations

import networkx as nx
import pytest

from cliquetopo import homotopy as H
from cliquetopo.errors import InvalidArgument
from cliquetopo.graphs import (Graph, complement, cycle_complement, cycle_graph, path_complement,
                               star_graph, wheel_graph)


def test_small_classes():
    assert str(H.classify_homotopy_type(complement(star_graph(4)))) == "Sphere(0)"
    assert str(H.classify_homotopy_type(cycle_graph(5))) == "Sphere(1)"
    assert str(H.classify_homotopy_type(wheel_graph(6))) == "Point"
    assert str(H.classify_homotopy_type(Graph.from_edges(0, []))) == "Sphere(-1)"
    assert str(H.classify_homotopy_type(cycle_complement(6))) == "Wedge(1,2)"


def test_certificate_verifies():
    for g in (wheel_graph(7), path_complement(10), path_complement(13)):
        seq = H.contraction_sequence(g)
        assert seq is not None and H.verify_contraction(g, seq)
    assert not H.verify_contraction(cycle_graph(5), [0, 1, 2, 3])


def test_spheres_are_not_contractible():
    for g in (cycle_graph(6), cycle_complement(8)):
        assert not H.is_contractible(g)


def test_join_calculus():
    assert H.join_classes([H.Sphere(0), H.Sphere(1)]) == H.Sphere(2)
    assert H.join_classes([H.Sphere(2), H.Point()]) == H.Point()
    assert H.join_classes([H.Wedge(1, 2), H.Sphere(0)]) is None


def test_expected_classes_by_formula():
    assert H.expected_cycle_complement_class(9) == H.Wedge(2, 2)
    assert H.expected_cycle_complement_class(10) == H.Sphere(2)
    assert H.expected_cycle_complement_class(11) == H.Sphere(3)
    assert H.expected_path_complement_class(10) == H.Point()
    assert H.expected_path_complement_class(11) == H.Sphere(3)
    assert H.expected_path_complement_class(12) == H.Sphere(3)


def test_forest_prediction_on_paths_and_unions():
    f = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (5, 6)])
    # complement is the join of complements of P2, P3, P2: S0 * S0 * S0
    assert H.predict_forest(f).result == H.Sphere(2)
    assert H.same_class(H.predict_forest(f).result, H.classify_homotopy_type(complement(f)))
    with pytest.raises(InvalidArgument):
        H.predict_forest(cycle_graph(4))


def test_forest_prediction_small_trees():
    for n in range(1, 8):
        for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            g = Graph.from_edges(n, t.edges())
            assert H.same_class(H.predict_forest(g).result, H.classify_homotopy_type(complement(g)))


def test_induced_census_of_path_complement():
    census = H.induced_subgraph_census(path_complement(7))
    assert set(census) <= {"Point", "Sphere(0)", "Sphere(1)", "Sphere(2)"}
    assert sum(census.values()) == 2 ** 7 - 2


def test_homotopy_manifolds():
    r = H.homotopy_manifold_report(cycle_complement(7), 1)
    assert r.result is True and set(r.per_vertex) == {"Point"}
    assert H.is_homotopy_manifold(wheel_graph(6), 2)
    assert not H.is_homotopy_manifold(star_graph(3), 1)


def test_space_form_genus():
    for n in range(8, 12):
        g = cycle_complement(n)
        for k in (1, 2, 3):
            for vs in combinations(range(n), k):
                genus = H.sphere_intersection_genus(g, list(vs))
                assert genus is H.EMPTY or genus in (-1, 0, 1)
    assert H.sphere_intersection_genus(cycle_complement(11), [0]) == -1
    with pytest.raises(InvalidArgument):
        H.sphere_intersection_genus(cycle_complement(8), [1, 1])


def test_two_non_adjacent_spheres_meet_in_path_complement():
    g = cycle_complement(9)
    inter = g.induced(g.adj[0] & g.adj[1])
    assert H.same_class(H.classify_homotopy_type(inter), H.expected_path_complement_class(5))
