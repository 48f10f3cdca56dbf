import random
from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from cliquetopo import linalg as L

mats = st.integers(1, 7).flatmap(
    lambda n: st.integers(1, 7).flatmap(
        lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=n, max_size=n)))


def columns_of(a):
    return [{i: a[i][j] for i in range(len(a)) if a[i][j]} for j in range(len(a[0]))]


@given(mats)
def test_modular_rank_equals_bareiss(a):
    cols = columns_of(a)
    for p in L.PRIMES:
        assert L.rank_mod_p(cols, p) == L.bareiss_rank(a)
    assert L.exact_rank(cols, len(a)) == np.linalg.matrix_rank(np.array(a, dtype=float))


@given(mats.filter(lambda a: len(a) == len(a[0])))
def test_bareiss_det(a):
    assert L.bareiss_det(a) == round(np.linalg.det(np.array(a, dtype=float)))


@given(mats)
def test_nullspace(a):
    basis = L.rational_nullspace(a)
    assert len(basis) == len(a[0]) - L.bareiss_rank(a)
    for v in basis:
        assert all(sum(Fraction(r[j]) * v[j] for j in range(len(v))) == 0 for r in a)


def test_inverse_and_charpoly():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 6)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        cp = L.charpoly_berkowitz(a)
        assert cp[-1] == 1 and len(cp) == n + 1
        assert cp[0] == (-1) ** n * L.bareiss_det(a)
        if L.bareiss_det(a):
            inv = L.rational_inverse(a)
            prod = [[sum(Fraction(a[i][k]) * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
            assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


def test_inertia_exact():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 6)
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        s = (np.array(b) + np.array(b).T).tolist()
        ev = np.linalg.eigvalsh(np.array(s, dtype=float))
        pos, neg, zero = L.inertia_exact(s)
        assert (pos, neg, zero) == (int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((abs(ev) <= 1e-9).sum()))
