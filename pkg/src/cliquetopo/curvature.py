"""Levitt curvature, curvature functions, Poincare-Hopf indices, renormalization."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from .complexes import Complex, clique_complex
from .errors import BoundExceeded, InvalidArgument
from .graphs import Graph
from .polynomials import Polynomial, f_polynomial, integrate_product, jacobsthal_path, jacobsthal_path_int


def levitt_curvature(g: Graph, cx: Complex | None = None) -> list[Fraction]:
    """K(v) = integral over [-1, 0] of f_{S(v)}, summed here as sum_{x ni v} (-1)^dim x / |x|."""
    if cx is None:
        cx = clique_complex(g)
    out = [Fraction(0)] * g.n
    for x in cx:
        w = Fraction(1 if len(x) % 2 else -1, len(x))
        for v in x:
            out[v] += w
    return out


def levitt_curvature_by_spheres(g: Graph) -> list[Fraction]:
    """Same curvature, integrating each unit-sphere f-polynomial directly."""
    return [f_polynomial(clique_complex(g.unit_sphere(v))).integrate(-1, 0) for v in range(g.n)]


def curvature_function(g: Graph) -> list[Polynomial]:
    """K_v(t) = integral from 0 to t of f_{S(v)}; their sum is f_G(t) - 1."""
    return [f_polynomial(clique_complex(g.unit_sphere(v))).antiderivative() for v in range(g.n)]


@lru_cache(maxsize=4096)
def _path_poly(m: int) -> tuple[int, ...]:
    return tuple(jacobsthal_path_int(m))


def fast_path_curvature(n: int, k: int) -> Fraction:
    """Curvature of vertex k (1-based) of G_n^+.

    The unit sphere of k is the join of the path complements on {1..k-2} and
    {k+2..n}, so its f-polynomial is the product of two Jacobsthal path polynomials.
    """
    if not 1 <= k <= n:
        raise InvalidArgument(f"vertex {k} out of range 1..{n}")
    return integrate_product(_path_poly(max(k - 2, -1)), _path_poly(max(n - k - 1, -1)))


def path_curvatures(n: int) -> list[Fraction]:
    return [fast_path_curvature(n, k) for k in range(1, n + 1)]


def renormalization_sample(n: int, residue: int) -> list[tuple[float, float]]:
    """Points (k/n, n K_n(k)) for 1 <= k <= n with k = residue mod 6."""
    if not 0 <= residue < 6:
        raise InvalidArgument(f"residue must be in 0..5, got {residue}")
    return [(k / n, float(n * fast_path_curvature(n, k))) for k in range(1, n + 1) if k % 6 == residue]


def renormalization_gap(n: int, residue: int, step: int = 6) -> float:
    """sup distance between the residue curves at n and n + step.

    Each point of the n curve is compared with the piecewise linear
    interpolation of the n + step curve at the same abscissa.
    """
    a = renormalization_sample(n, residue)
    b = renormalization_sample(n + step, residue)
    worst = 0.0
    for x, y in a:
        if x < b[0][0] or x > b[-1][0]:
            continue
        for (x0, y0), (x1, y1) in zip(b, b[1:]):
            if x0 <= x <= x1:
                yb = y0 + (y1 - y0) * (x - x0) / (x1 - x0)
                worst = max(worst, abs(y - yb))
                break
    return worst


def poincare_hopf_indices(g: Graph, f: Sequence[float] | Callable[[int], float]) -> list[int]:
    """i_f(v) = 1 - chi(S^-(v)) where S^-(v) holds the neighbours with smaller f."""
    vals = [f(v) for v in range(g.n)] if callable(f) else list(f)
    if len(set(vals)) != g.n:
        raise InvalidArgument("Poincare-Hopf needs an injective function on vertices")
    out = []
    for v in range(g.n):
        below = [w for w in g.adj[v] if vals[w] < vals[v]]
        out.append(1 - clique_complex(g.induced(below)).euler_characteristic)
    return out


def functional_poincare_hopf(g: Graph, f: Sequence[float] | Callable[[int], float]
                             ) -> tuple[Polynomial, Polynomial]:
    """Both sides of f_G(t) = 1 + t * sum_v f_{S^-(v)}(t); they agree exactly."""
    vals = [f(v) for v in range(g.n)] if callable(f) else list(f)
    if len(set(vals)) != g.n:
        raise InvalidArgument("Poincare-Hopf needs an injective function on vertices")
    rhs = Polynomial([0])
    for v in range(g.n):
        below = [w for w in g.adj[v] if vals[w] < vals[v]]
        rhs = rhs + f_polynomial(clique_complex(g.induced(below)))
    return f_polynomial(clique_complex(g)), Polynomial([1]) + Polynomial.t() * rhs


def morse_filtration_indices(n: int) -> list[int]:
    """Indices of the vertices 1..n added one at a time to build G_n^+.

    Vertex k sees the earlier vertices 1..k-2, which span G_{k-2}^+, so its
    index is 1 - chi(G_{k-2}^+) = f_{k-2}(-1). Partial sums are chi(G_k^+).
    """
    if n < 2:
        raise InvalidArgument(f"filtration needs n >= 2, got {n}")
    return [int(jacobsthal_path(k - 2)(-1)) for k in range(1, n + 1)]


def index_expectation(g: Graph, max_n: int = 8) -> list[Fraction]:
    """Average Poincare-Hopf index over all vertex orderings."""
    if g.n > max_n:
        raise BoundExceeded(f"index expectation enumerates orderings, capped at {max_n} vertices")
    total = [Fraction(0)] * g.n
    count = 0
    for perm in permutations(range(g.n)):
        for v, i in enumerate(poincare_hopf_indices(g, perm)):
            total[v] += i
        count += 1
    return [t / count for t in total] if count else []
