"""Contractibility certificates and homotopy classification of Whitney complexes."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .complexes import clique_complex
from .errors import InvalidArgument
from .graphs import Graph, is_connected
from .hodge import betti_numbers


class ContractibilitySolver:
    """Reduces induced subgraphs of a fixed graph, memoized by vertex bitmask.

    A vertex may be removed when its unit sphere is contractible; this keeps the
    homotopy type. Dominated vertices (whose unit sphere is a cone) go first.
    """

    def __init__(self, g: Graph, backtrack: int = 3):
        self.g = g
        self.masks = g.masks
        self.backtrack = backtrack
        self.memo: dict[int, list[int] | None] = {}

    def reduce(self, mask: int) -> list[int] | None:
        """Removal sequence leaving one vertex, or None if none was found."""
        if mask in self.memo:
            return self.memo[mask]
        self.memo[mask] = None  # guards against re-entry while searching
        result = self._search(mask, self.backtrack)
        self.memo[mask] = result
        return result

    def _search(self, mask: int, tries: int) -> list[int] | None:
        seq: list[int] = []
        while mask.bit_count() > 1:
            v = self._dominated(mask)
            if v is not None:
                seq.append(v)
                mask &= ~(1 << v)
                continue
            cands = [v for v in _bits(mask) if self._sphere_ok(mask, v)]
            if not cands:
                return None
            if len(cands) == 1 or tries <= 0:
                seq.append(cands[0])
                mask &= ~(1 << cands[0])
                continue
            for v in cands[:tries]:
                rest = self._search(mask & ~(1 << v), tries - 1)
                if rest is not None:
                    return seq + [v] + rest
            return None
        return seq if mask else None

    def _sphere_ok(self, mask: int, v: int) -> bool:
        s = self.masks[v] & mask
        return s != 0 and self.reduce(s) is not None

    def _dominated(self, mask: int) -> int | None:
        for v in _bits(mask):
            closed = (self.masks[v] | (1 << v)) & mask
            for w in _bits(self.masks[v] & mask):
                if closed & ~((self.masks[w] | (1 << w)) & mask) == 0:
                    return v
        return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def contraction_sequence(g: Graph, backtrack: int = 3) -> list[int] | None:
    """Vertices removed one by one down to a single vertex, or None (unknown)."""
    if g.n == 0:
        return None
    return ContractibilitySolver(g, backtrack).reduce((1 << g.n) - 1)


def is_contractible(g: Graph) -> bool:
    """True when a reduction sequence was found; False means unknown, not disproved."""
    return contraction_sequence(g) is not None


def verify_contraction(g: Graph, seq: list[int]) -> bool:
    """Re-check a certificate: every removed vertex has a contractible unit sphere."""
    alive = set(range(g.n))
    for v in seq:
        if v not in alive:
            return False
        sphere = g.adj[v] & alive
        if not sphere:
            return False
        sub = g.induced(sphere)
        sub_seq = contraction_sequence(sub)
        if sub_seq is None or not verify_contraction(sub, sub_seq):
            return False
        alive.remove(v)
    return len(alive) == 1


@dataclass(frozen=True)
class HomotopyClass:
    tag: str
    dim: int | None = None
    count: int | None = None
    betti: tuple[int, ...] = ()
    certificate: list[int] | None = field(default=None, compare=False)

    def __str__(self) -> str:
        if self.tag == "Sphere":
            return f"Sphere({self.dim})"
        if self.tag == "Wedge":
            return f"Wedge({self.dim},{self.count})"
        return self.tag

    @property
    def label(self) -> str:
        return str(self)


def Point() -> HomotopyClass:
    return HomotopyClass("Point")


def Sphere(d: int) -> HomotopyClass:
    return HomotopyClass("Sphere", d)


def Wedge(d: int, m: int) -> HomotopyClass:
    return HomotopyClass("Wedge", d, m)


def classify_homotopy_type(g: Graph) -> HomotopyClass:
    """Point (certified), Sphere(d), Wedge(d, m) or Other from reduced Betti numbers.

    The empty graph is the (-1)-sphere.
    """
    if g.n == 0:
        return HomotopyClass("Sphere", -1, betti=())
    betti = betti_numbers(clique_complex(g))
    reduced = list(betti)
    reduced[0] -= 1
    support = [k for k, b in enumerate(reduced) if b]
    if not support:
        seq = contraction_sequence(g)
        if seq is not None:
            return HomotopyClass("Point", betti=betti, certificate=seq)
        return HomotopyClass("Other", betti=betti)
    if len(support) == 1:
        d = support[0]
        if reduced[d] == 1:
            return HomotopyClass("Sphere", d, betti=betti)
        return HomotopyClass("Wedge", d, reduced[d], betti=betti)
    return HomotopyClass("Other", betti=betti)


def same_class(a: HomotopyClass, b: HomotopyClass) -> bool:
    return (a.tag, a.dim, a.count) == (b.tag, b.dim, b.count)


def expected_cycle_complement_class(n: int) -> HomotopyClass:
    d, r = divmod(n, 3)
    if r == 0:
        return Wedge(d - 1, 2)
    return Sphere(d - 1) if r == 1 else Sphere(d)


def expected_path_complement_class(n: int) -> HomotopyClass:
    d, r = divmod(n, 3)
    if r == 1:
        return Point()
    return Sphere(d) if r == 2 else Sphere(d - 1)


# ---------------------------------------------------------------- forests

def components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def join_classes(parts: list[HomotopyClass]) -> HomotopyClass | None:
    """Join of spheres and points; None if a factor is outside that calculus."""
    if any(p.tag == "Point" for p in parts):
        return Point()
    if all(p.tag == "Sphere" for p in parts):
        return Sphere(sum(p.dim for p in parts) + len(parts) - 1)
    return None


@dataclass
class Prediction:
    result: HomotopyClass
    fallbacks: int = 0


def forest_complement_prediction(forest: Graph) -> HomotopyClass:
    return predict_forest(forest).result


def predict_forest(forest: Graph) -> Prediction:
    """Class of complement(forest) from the join calculus.

    The complement of a disjoint union is the join of the complements. A path on
    3d+1 vertices gives a point, on 3d+2 or 3d+3 vertices a d-sphere. Other
    trees are peeled at a leaf l with neighbour p: complement(T) is
    complement(T - l) with a cone glued along complement(T - l - p). A
    contractible gluing sphere keeps the type; a contractible base turns a
    k-sphere into a (k+1)-sphere. Anything else falls back to Betti numbers
    and is counted in ``fallbacks``.
    """
    if not is_forest(forest):
        raise InvalidArgument("input graph is not a forest")
    if forest.n == 0:
        return Prediction(Sphere(-1))
    parts, fb = [], 0
    for comp in components(forest):
        p = _predict_tree(forest.induced(comp))
        parts.append(p.result)
        fb += p.fallbacks
    joined = join_classes(parts)
    if joined is None:
        return Prediction(classify_homotopy_type(_complement(forest)), fb + 1)
    return Prediction(joined, fb)


def _is_path(t: Graph) -> bool:
    return all(t.degree(v) <= 2 for v in range(t.n)) and (t.n == 1 or t.edge_count == t.n - 1)


def _predict_tree(t: Graph) -> Prediction:
    if t.n == 1:
        return Prediction(Point())
    if _is_path(t):
        return Prediction(expected_path_complement_class(t.n))
    fb = 0
    for leaf in (v for v in range(t.n) if t.degree(v) == 1):
        (p,) = t.adj[leaf]
        glue = predict_forest(t.induced(set(range(t.n)) - {leaf, p}))
        base = _predict_tree(t.induced(set(range(t.n)) - {leaf}))
        fb += glue.fallbacks + base.fallbacks
        if glue.result.tag == "Point":
            return Prediction(base.result, fb)
        if base.result.tag == "Point" and glue.result.tag == "Sphere":
            return Prediction(Sphere(glue.result.dim + 1), fb)
    return Prediction(classify_homotopy_type(_complement(t)), fb + 1)


def _complement(g: Graph) -> Graph:
    from .graphs import complement

    return complement(g)


# ---------------------------------------------------------------- manifolds

@dataclass
class ManifoldReport:
    dimension: int
    result: bool | None
    per_vertex: list[str]


def homotopy_manifold_report(g: Graph, d: int) -> ManifoldReport:
    """Every unit sphere must be a point or a (d-1)-sphere; Other makes it indeterminate."""
    labels, ok, unknown = [], True, False
    for v in range(g.n):
        c = classify_homotopy_type(g.unit_sphere(v))
        labels.append(str(c))
        if c.tag == "Other":
            unknown = True
        elif not (c.tag == "Point" or (c.tag == "Sphere" and c.dim == d - 1)):
            ok = False
    result = False if not ok else (None if unknown else True)
    return ManifoldReport(d, result, labels)


def is_homotopy_manifold(g: Graph, d: int) -> bool:
    return homotopy_manifold_report(g, d).result is True


EMPTY = None


def sphere_intersection_genus(g: Graph, vertices: list[int]) -> int | None:
    """1 - chi of the complex on the common neighbourhood; None marks an empty intersection."""
    if len(set(vertices)) != len(vertices) or not vertices:
        raise InvalidArgument("need distinct vertices")
    common = set(range(g.n))
    for v in vertices:
        common &= g.adj[v]
    if not common:
        return EMPTY
    return 1 - clique_complex(g.induced(common)).euler_characteristic


def induced_subgraph_census(g: Graph) -> dict[str, int]:
    """Homotopy class counts over all nonempty proper induced subgraphs."""
    out: dict[str, int] = {}
    for r in range(1, g.n):
        for vs in combinations(range(g.n), r):
            key = str(classify_homotopy_type(g.induced(vs)))
            out[key] = out.get(key, 0) + 1
    return out


def connected(g: Graph) -> bool:
    return is_connected(g)
