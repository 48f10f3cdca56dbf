import random

import pytest
from hypothesis import settings, strategies as st

from cliquetopo.graphs import Graph

settings.register_profile("default", max_examples=100, deadline=None, derandomize=True)
settings.load_profile("default")


def trim(v):
    """Drop trailing zeros so reference and computed vectors compare."""
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240601)
