from hypothesis import given, strategies as st

from cliquetopo import fixedpoint as F
from cliquetopo.complexes import cycle_complement_complex, path_complement_complex
from cliquetopo.graphs import cycle_complement


def test_dihedral_group_is_automorphisms():
    for n in range(4, 12):
        rots, refs = F.dihedral_automorphisms(n)
        perms = rots + refs
        assert len(set(map(tuple, perms))) == 2 * n
        assert all(F.is_automorphism(cycle_complement(n), p) for p in perms)


def test_shifted_order_is_same_group():
    for n in range(4, 10):
        a = sorted(map(tuple, sum(F.dihedral_automorphisms(n), [])))
        b = sorted(map(tuple, sum(F.dihedral_automorphisms(n, shifted_order=True), [])))
        assert a == b


def test_identity_lefschetz_is_euler():
    for n in range(4, 15):
        cx = cycle_complement_complex(n)
        assert F.lefschetz_number(cx, list(range(n))) == cx.euler_characteristic


def test_average_is_orbit_count_alternating():
    # the group average of Lefschetz numbers is chi of the quotient; it is an integer
    for n in range(4, 16):
        _, _, avg = F.lefschetz_table_cycle(n)
        assert avg.denominator == 1


def test_fixed_point_equals_cohomology():
    for n in range(5, 10):
        cx = cycle_complement_complex(n)
        for p in sum(F.dihedral_automorphisms(n), []):
            assert abs(F.lefschetz_via_cohomology(cx, p) - F.lefschetz_number(cx, p)) < 1e-6
    cx = path_complement_complex(8)
    for p in F.path_automorphisms(8):
        assert abs(F.lefschetz_via_cohomology(cx, p) - F.lefschetz_number(cx, p)) < 1e-6


@given(st.integers(5, 9), st.randoms(use_true_random=False))
def test_orientation_flip_keeps_lefschetz(n, rnd):
    cx = cycle_complement_complex(n)
    o = [rnd.choice((-1, 1)) for _ in range(len(cx))]
    rots, refs = F.dihedral_automorphisms(n)
    p = rnd.choice(rots + refs)
    assert abs(F.lefschetz_via_cohomology(cx, p, o) - F.lefschetz_number(cx, p)) < 1e-6


def test_fixed_simplices_by_hand():
    # reflection x -> -x of G_6 fixes vertices 0 and 3 and the edge {0, 3}
    cx = cycle_complement_complex(6)
    fixed = dict(F.fixed_simplices(cx, F.reflection(6, 0)))
    assert set(fixed) >= {(0,), (3,), (0, 3)}


def test_average_lefschetz():
    assert F.average_lefschetz(11) == 0
    assert F.average_lefschetz(12) == 1


def test_twelve_periodicity_and_range():
    tables = {n: F.lefschetz_table_cycle(n) for n in range(4, 25)}
    for n in range(4, 13):
        rots, m = tables[n][0], tables[n + 12][0]
        assert rots == m[:n]
    values = {v for a, b, _ in tables.values() for v in a + b}
    assert values <= {-1, 0, 1, 2, 3}
