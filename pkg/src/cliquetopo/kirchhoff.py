"""Kirchhoff Laplacian: rooted spanning trees and forests, spectral zeta."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import InvalidArgument, NumericalFailure
from .graphs import Graph, distances_from, INFINITE
from .linalg import bareiss_det, charpoly_berkowitz


def kirchhoff_matrix(g: Graph) -> np.ndarray:
    k = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        k[u, u] = g.degree(u)
        for w in g.adj[u]:
            k[u, w] = -1
    return k


def char_poly(g: Graph) -> list[int]:
    """Coefficients of det(x I - K), lowest degree first."""
    return charpoly_berkowitz(kirchhoff_matrix(g).tolist())


def pseudo_determinant(g: Graph) -> int:
    """Product of the nonzero Kirchhoff eigenvalues: the rooted spanning tree count."""
    cp = char_poly(g)
    j = next(i for i, c in enumerate(cp) if c != 0)
    return (-1) ** (g.n - j) * cp[j]


def forest_count(g: Graph) -> int:
    """det(1 + K): the number of rooted spanning forests."""
    k = kirchhoff_matrix(g) + np.eye(g.n, dtype=np.int64)
    return bareiss_det(k.tolist())


def tree_forest_ratio(g: Graph) -> Fraction:
    return Fraction(forest_count(g), pseudo_determinant(g))


def component_count(g: Graph) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if not seen[s]:
            count += 1
            for t, d in enumerate(distances_from(g, s)):
                if d != INFINITE:
                    seen[t] = True
    return count


def nonzero_spectrum(g: Graph) -> np.ndarray:
    """Nonzero Kirchhoff eigenvalues; the zero count is the exact component count."""
    ev = np.sort(np.linalg.eigvalsh(kirchhoff_matrix(g).astype(float)))
    zeros = component_count(g)
    if zeros and abs(ev[zeros - 1]) > 1e-8 or (zeros < len(ev) and ev[zeros] < 1e-8):
        raise NumericalFailure("Kirchhoff spectrum disagrees with the component count")
    return ev[zeros:]


def cycle_complement_spectrum(n: int) -> np.ndarray:
    """Nonzero Kirchhoff eigenvalues of G_n: n - 4 sin^2(pi k / n), k = 1..n-1."""
    if n < 5:
        raise InvalidArgument(f"closed form needs a connected G_n, n >= 5, got {n}")
    k = np.arange(1, n)
    return n - 4 * np.sin(np.pi * k / n) ** 2


def tree_forest_ratio_closed_form(n: int) -> float:
    """Forest/tree ratio of G_n as prod(1 + 1/lambda) over the closed form spectrum."""
    return float(math.exp(np.sum(np.log1p(1.0 / cycle_complement_spectrum(n)))))


def spectral_zeta(g: Graph, s: float) -> float:
    return float(np.sum(nonzero_spectrum(g) ** (-s)))


def zeta_log_series(g: Graph, terms: int = 40) -> float:
    """exp(sum_s (-1)^(s+1) zeta(s)/s), which equals prod(1 + 1/lambda) when all lambda > 1."""
    ev = nonzero_spectrum(g)
    if len(ev) and ev.min() <= 1:
        raise NumericalFailure("log series needs every nonzero eigenvalue above 1")
    total = sum((-1) ** (s + 1) * float(np.sum(ev ** (-s))) / s for s in range(1, terms + 1))
    return math.exp(total)
