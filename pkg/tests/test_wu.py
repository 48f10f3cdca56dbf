import numpy as np
import pytest
from hypothesis import given

from cliquetopo import wu as W
from cliquetopo.complexes import clique_complex, cycle_complement_complex
from cliquetopo.graphs import cycle_graph, complete_graph

from conftest import graphs


@given(graphs(max_n=8))
def test_wu_two_routes(g):
    cx = clique_complex(g)
    for k in (2, 3):
        assert W.wu_characteristic(cx, k) == W.wu_characteristic_direct(cx, k)
    assert W.f_matrix(cx) == W.f_matrix_direct(cx)


@given(graphs(max_n=6))
def test_wu_d_squared_and_euler(g):
    cx = clique_complex(g)
    pc = W.pair_complex(cx)
    W.check_wu_d_squared(pc)
    b = W.wu_betti(cx)
    assert sum((-1) ** k * x for k, x in enumerate(b)) == W.wu_characteristic(cx, 2)


def test_wu_curvature_sums_to_omega():
    cx = cycle_complement_complex(8)
    assert sum(W.wu_curvature(cx).values()) == W.wu_characteristic(cx, 2)


def test_simplex_omega():
    # a k-simplex has omega = (-1)^k
    for k in range(1, 5):
        assert W.wu_characteristic(clique_complex(complete_graph(k + 1)), 2) == (-1) ** k


def test_connection_matrix_unimodular():
    for n in range(5, 9):
        cx = cycle_complement_complex(n)
        m = W.connection_matrix(cx)
        g = W.exact_inverse_certificate(m)
        assert abs(W.det_mod_p(m)) in (1, 2 ** 31 - 2)
        assert np.array_equal(m @ g, np.eye(len(m), dtype=np.int64))


def test_connection_report_small_matches_eigen():
    cx = clique_complex(cycle_graph(5))
    r = W.connection_report(cx)
    ev = np.linalg.eigvalsh(W.connection_matrix(cx).astype(float))
    assert (r.positive, r.negative) == (int((ev > 0).sum()), int((ev < 0).sum()))
    assert r.energy_sum == cx.euler_characteristic


def test_hydrogen_rejects_higher_dimension():
    with pytest.raises(ValueError):
        W.hydrogen_check(clique_complex(complete_graph(3)))


def test_wu_lefschetz_identity_is_omega():
    cx = cycle_complement_complex(6)
    assert W.wu_lefschetz_fixed(cx, list(range(6))) == W.wu_characteristic(cx, 2)
