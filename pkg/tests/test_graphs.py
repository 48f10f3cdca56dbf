from fractions import Fraction
from itertools import product
import networkx as nx
import pytest

from cliquetopo import graphs as G
from cliquetopo.errors import InvalidArgument
from cliquetopo.hodge import betti_numbers
from cliquetopo.complexes import clique_complex


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_cycle_complement_edges():
    for n in range(4, 15):
        g = G.cycle_complement(n)
        assert g.edge_count == n * (n - 3) // 2
        assert all(g.degree(v) == n - 3 for v in range(n))


def test_path_complement_edges():
    for n in range(2, 15):
        assert G.path_complement(n).edge_count == (n - 1) * (n - 2) // 2


def test_complement_is_involution():
    g = G.wheel_graph(6)
    assert G.complement(G.complement(g)).adj == g.adj


def test_join_is_complement_of_union():
    a, b = G.cycle_graph(4), G.path_graph(3)
    left = G.zykov_join(a, b)
    right = G.complement(G.disjoint_union(G.complement(a), G.complement(b)))
    assert left.adj == right.adj


def test_circulant_edge_count():
    assert G.circulant_graph(20, [2, 3, 4, 7, 13]).edge_count == 80
    assert G.circulant_graph(8, [4]).edge_count == 4


def test_paley_is_strongly_regular():
    assert G.is_strongly_regular(G.paley_graph(13)) == (13, 6, 2, 3)
    with pytest.raises(InvalidArgument):
        G.paley_graph(7)


def test_strongly_regular_against_petersen():
    pet = nx.petersen_graph()
    g = G.Graph.from_edges(10, pet.edges())
    assert G.is_strongly_regular(g) == (10, 3, 0, 1)
    assert G.is_strongly_regular(G.path_graph(4)) is None


def test_prime_graph_vertices_are_squarefree():
    g = G.prime_graph(30)
    assert list(g.meta["labels"]) == G.squarefree_numbers(30)
    assert 1 not in g.meta["labels"]


def test_hypercube_complement_betti():
    # complement of the 4-cube
    b = betti_numbers(clique_complex(G.complement(G.hypercube_graph(4))))
    assert b[:4] == (1, 0, 0, 7)


def test_metric_invariants_g10():
    m = G.metric_invariants(G.cycle_complement(10))
    assert (m.diameter, m.wiener, m.harary) == (2, 55, Fraction(80))


def test_metric_invariants_against_networkx():
    for g in (G.cycle_complement(9), G.path_complement(8), G.wheel_graph(7)):
        assert G.metric_invariants(g).wiener == nx.wiener_index(to_nx(g))
        assert G.metric_invariants(g).diameter == nx.diameter(to_nx(g))


def test_chromatic_and_independence():
    for n in range(5, 15):
        g = G.cycle_complement(n)
        assert G.chromatic_number(g) == (n + 1) // 2
        assert G.independence_number(g) == 2
        assert G.clique_number(g) == n // 2


def test_chromatic_against_brute_force():
    g = G.wheel_graph(5)
    best = min(k for k in range(1, 7)
               if any(all(c[u] != c[v] for u, v in g.edges()) for c in _colorings(g.n, k)))
    assert G.chromatic_number(g) == best


def _colorings(n, k):
    return product(range(k), repeat=n)


def test_claw_free_and_even_degrees():
    assert all(G.is_claw_free(G.cycle_complement(n)) for n in range(5, 12))
    assert not G.is_claw_free(G.star_graph(3))
    assert G.has_even_degrees(G.cycle_complement(7))
    assert not G.has_even_degrees(G.cycle_complement(8))


def test_hamiltonian_witness():
    for n in range(5, 21):
        g = G.cycle_complement(n)
        w = G.cycle_complement_hamiltonian_witness(n)
        if w is None:
            # no unit step a with 1 < a < n - 1 exists for n = 6
            assert n == 6
            w = G.hamiltonian_cycle(g)
        assert G.is_hamiltonian_cycle(g, w)
    assert G.hamiltonian_cycle(G.cycle_complement(9)) is not None
    assert G.hamiltonian_cycle(G.star_graph(4)) is None


def test_inductive_dimension_small():
    assert G.inductive_dimension(G.empty_graph(0)) == -1
    assert G.inductive_dimension(G.empty_graph(3)) == 0
    assert G.inductive_dimension(G.cycle_graph(5)) == 1
    assert G.inductive_dimension(G.complete_graph(4)) == 3


def test_barycentric_refinement_of_triangle():
    r = G.barycentric_refinement(G.complete_graph(3))
    assert (r.n, r.edge_count) == (7, 12)


def test_json_roundtrip():
    g = G.prime_graph(20)
    h = G.Graph.from_json(g.to_json())
    assert h.adj == g.adj and h.meta == g.meta


def test_family_graph_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        G.family_graph("nope", 5)
    with pytest.raises(InvalidArgument):
        G.family_graph("cycle-complement", None)
    with pytest.raises(InvalidArgument):
        G.family_graph("cycle-complement", -2)


def test_induced_relabels():
    g = G.cycle_graph(6)
    h = g.induced([0, 1, 2, 4])
    assert h.n == 4 and sorted(h.edges()) == [(0, 1), (1, 2)]
