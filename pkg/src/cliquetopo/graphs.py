"""Finite simple graphs on vertices 0..n-1 and the families studied here."""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BoundExceeded, InvalidArgument

INFINITE = math.inf


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    meta: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], **meta) -> "Graph":
        if n < 0:
            raise InvalidArgument(f"vertex count must be >= 0, got {n}")
        nb: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb), meta)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in s) for s in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled 0..k-1 in increasing vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[w]) for u in vs for w in self.adj[u] if w in pos and u < w]
        labels = self.meta.get("labels")
        meta = {"labels": tuple(labels[v] for v in vs)} if labels else {}
        return Graph.from_edges(len(vs), edges, **meta)

    def unit_sphere(self, v: int) -> "Graph":
        return self.induced(self.adj[v])

    def to_json(self) -> str:
        data = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if "labels" in self.meta:
            data["labels"] = list(self.meta["labels"])
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        meta = {"labels": tuple(data["labels"])} if "labels" in data else {}
        return cls.from_edges(data["n"], [tuple(e) for e in data["edges"]], **meta)


# ---------------------------------------------------------------- families

def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"cycle graph needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidArgument(f"path graph needs n >= 0, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(spikes: int) -> Graph:
    return Graph.from_edges(spikes + 1, [(0, i) for i in range(1, spikes + 1)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a rim cycle on 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if v not in g.adj[u]]
    return Graph.from_edges(g.n, edges, **g.meta)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph.from_edges(a.n + b.n, a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()])


def zykov_join(a: Graph, b: Graph) -> Graph:
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    edges += [(u, a.n + v) for u in range(a.n) for v in range(b.n)]
    return Graph.from_edges(a.n + b.n, edges)


def cycle_complement(n: int) -> Graph:
    """G_n, the complement of the n-cycle."""
    return complement(cycle_graph(n))


def path_complement(n: int) -> Graph:
    """G_n^+, the complement of the path on n vertices."""
    return complement(path_graph(n))


def circulant_graph(n: int, gens: Iterable[int]) -> Graph:
    gens = sorted(set(gens))
    for g in gens:
        if not 0 < g < n:
            raise InvalidArgument(f"generator {g} out of range 1..{n - 1}")
    edges = {tuple(sorted((i, (i + g) % n))) for i in range(n) for g in gens}
    return Graph.from_edges(n, edges)


def dihedral_cayley_graph(n: int) -> Graph:
    """Cayley graph of D_n with generators r, r^-1, s: the prism C_n x K_2.

    Vertex i < n is r^i, vertex n + i is s r^i.
    """
    if n < 3:
        raise InvalidArgument(f"dihedral graph needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def dihedral_complement(n: int) -> Graph:
    """H_n, the complement of the dihedral Cayley graph."""
    return complement(dihedral_cayley_graph(n))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def paley_graph(q: int) -> Graph:
    if not is_prime(q) or q % 4 != 1:
        raise InvalidArgument(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u, v in combinations(range(q), 2) if (v - u) % q in squares]
    return Graph.from_edges(q, edges)


def squarefree_numbers(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if all(k % (p * p) for p in range(2, math.isqrt(k) + 1))]


def prime_graph(n: int) -> Graph:
    """Square-free integers 2..n, joined when one divides the other.

    The integer attached to vertex i is ``meta["labels"][i]``.
    """
    labels = squarefree_numbers(n)
    edges = [(i, j) for i, j in combinations(range(len(labels)), 2)
             if labels[j] % labels[i] == 0]
    return Graph.from_edges(len(labels), edges, labels=tuple(labels))


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def barycentric_refinement(g: Graph) -> Graph:
    """Vertices are the cliques of g, joined when one contains the other."""
    from .complexes import clique_complex

    cx = clique_complex(g)
    sets = [frozenset(x) for x in cx]
    edges = [(i, j) for i, j in combinations(range(len(sets)), 2)
             if sets[i] < sets[j] or sets[j] < sets[i]]
    return Graph.from_edges(len(sets), edges, labels=tuple(cx.simplices))


def barycentric_complement(g: Graph) -> Graph:
    return complement(barycentric_refinement(g))


FAMILIES = ("cycle-complement", "path-complement", "circulant", "dihedral-complement",
            "paley", "prime", "barycentric-complement")


def family_graph(family: str, n: int | None = None, gens: Sequence[int] = (), q: int | None = None) -> Graph:
    if family == "cycle-complement":
        return cycle_complement(_need(n))
    if family == "path-complement":
        return path_complement(_need(n))
    if family == "circulant":
        return circulant_graph(_need(n), gens)
    if family == "dihedral-complement":
        return dihedral_complement(_need(n))
    if family == "paley":
        return paley_graph(_need(q if q is not None else n))
    if family == "prime":
        return prime_graph(_need(n))
    if family == "barycentric-complement":
        return barycentric_complement(complete_graph(_need(n)))
    raise InvalidArgument(f"unknown family {family!r}")


def _need(n: int | None) -> int:
    if n is None:
        raise InvalidArgument("a size parameter is required")
    if n < 0:
        raise InvalidArgument(f"size must be >= 0, got {n}")
    return n


# ---------------------------------------------------------------- invariants

def distances_from(g: Graph, s: int) -> list[float]:
    dist: list[float] = [INFINITE] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == INFINITE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class MetricInvariants:
    diameter: float
    wiener: float
    harary: Fraction


def metric_invariants(g: Graph) -> MetricInvariants:
    """Diameter, Wiener index (unordered pairs) and Harary index (ordered pairs).

    Disconnected graphs get an infinite diameter and Wiener index; unreachable
    pairs contribute 0 to the Harary sum.
    """
    diameter: float = 0
    wiener: float = 0
    harary = Fraction(0)
    for s in range(g.n):
        for t, d in enumerate(distances_from(g, s)):
            if t == s:
                continue
            diameter = max(diameter, d)
            if t > s:
                wiener += d
            if d != INFINITE:
                harary += Fraction(1, int(d))
    return MetricInvariants(diameter, wiener, harary)


def degree_sequence(g: Graph) -> list[int]:
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def has_even_degrees(g: Graph) -> bool:
    return all(g.degree(v) % 2 == 0 for v in range(g.n))


def is_claw_free(g: Graph) -> bool:
    for v in range(g.n):
        for a, b, c in combinations(sorted(g.adj[v]), 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return False
    return True


def is_connected(g: Graph) -> bool:
    return g.n == 0 or all(d != INFINITE for d in distances_from(g, 0))


def clique_number(g: Graph) -> int:
    masks = g.masks
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & masks[v])

    grow(0, (1 << g.n) - 1)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def chromatic_number(g: Graph, max_n: int = 40) -> int:
    """Exact chromatic number by backtracking from the clique lower bound."""
    if g.n > max_n:
        raise BoundExceeded(f"chromatic number search capped at {max_n} vertices")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    k = max(1, clique_number(g))
    while not _colorable(g, order, k):
        k += 1
    return k


def _colorable(g: Graph, order: list[int], k: int) -> bool:
    color = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in g.adj[v]}
        # a fresh colour is only tried once, which kills colour symmetry
        for c in range(min(k, used + 1)):
            if c not in taken:
                color[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return place(0, 0)


def is_strongly_regular(g: Graph) -> tuple[int, int, int, int] | None:
    """Parameters (n, k, lambda, mu) if g is strongly regular, else None."""
    if g.n == 0:
        return None
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(g.n)):
        return None
    lam = mu = None
    for u, v in combinations(range(g.n), 2):
        common = len(g.adj[u] & g.adj[v])
        if v in g.adj[u]:
            if lam is None:
                lam = common
            elif lam != common:
                return None
        else:
            if mu is None:
                mu = common
            elif mu != common:
                return None
    return (g.n, k, lam if lam is not None else 0, mu if mu is not None else 0)


def cycle_complement_hamiltonian_witness(n: int) -> list[int] | None:
    """Hamiltonian cycle of G_n by an arithmetic progression k*a mod n."""
    for a in range(2, n - 1):
        if math.gcd(a, n) == 1:
            return [(k * a) % n for k in range(n)]
    return None


def hamiltonian_cycle(g: Graph, max_n: int = 20) -> list[int] | None:
    if g.n > max_n:
        raise BoundExceeded(f"Hamiltonian search capped at {max_n} vertices")
    if g.n < 3:
        return None
    path = [0]
    seen = 1

    def extend() -> bool:
        nonlocal seen
        if len(path) == g.n:
            return 0 in g.adj[path[-1]]
        for w in sorted(g.adj[path[-1]]):
            if not seen >> w & 1:
                path.append(w)
                seen |= 1 << w
                if extend():
                    return True
                path.pop()
                seen &= ~(1 << w)
        return False

    return list(path) if extend() else None


def is_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    if sorted(cycle) != list(range(g.n)) or g.n < 3:
        return False
    return all(cycle[(i + 1) % g.n] in g.adj[cycle[i]] for i in range(g.n))


def inductive_dimension(g: Graph) -> Fraction:
    """dim(empty) = -1, dim(G) = 1 + average over v of dim S(v).

    Unit spheres of induced subgraphs are induced subgraphs of g, so results are
    memoized by vertex bitmask.
    """
    masks = g.masks
    memo: dict[int, Fraction] = {0: Fraction(-1)}

    def dim(mask: int) -> Fraction:
        got = memo.get(mask)
        if got is not None:
            return got
        total = Fraction(0)
        count = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            total += dim(masks[v] & mask)
            count += 1
        memo[mask] = out = 1 + total / count
        return out

    return dim((1 << g.n) - 1)
