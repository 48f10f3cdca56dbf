"""Whitney (clique) complexes in canonical order: by cardinality, then lexicographic."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BoundExceeded, InvalidArgument
from .graphs import Graph, cycle_complement

DEFAULT_SIMPLEX_CAP = 5_000_000

Simplex = tuple[int, ...]


def _canonical_key(x: Simplex) -> tuple[int, Simplex]:
    return (len(x), x)


@dataclass(frozen=True, eq=False)
class Complex:
    simplices: tuple[Simplex, ...]

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], check: bool = False) -> "Complex":
        items = {tuple(sorted(x)) for x in simplices}
        items.discard(())
        cx = cls(tuple(sorted(items, key=_canonical_key)))
        if check and not cx.is_closed():
            raise InvalidArgument("simplex list is not closed under taking faces")
        return cx

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __getitem__(self, i: int) -> Simplex:
        return self.simplices[i]

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Complex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"Complex(f={self.f_vector})"

    @cached_property
    def index(self) -> dict[Simplex, int]:
        return {x: i for i, x in enumerate(self.simplices)}

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """offsets[k]:offsets[k+1] is the slice of k-dimensional simplices."""
        f = self.f_vector
        out = [0]
        for c in f:
            out.append(out[-1] + c)
        return tuple(out)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts: list[int] = []
        for x in self.simplices:
            while len(counts) < len(x):
                counts.append(0)
            counts[len(x) - 1] += 1
        return tuple(counts)

    @property
    def dim(self) -> int:
        return len(self.f_vector) - 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(x[0] for x in self.simplices if len(x) == 1)

    def skeleton_slice(self, k: int) -> range:
        if k < 0 or k > self.dim:
            return range(0)
        return range(self.offsets[k], self.offsets[k + 1])

    def of_dim(self, k: int) -> tuple[Simplex, ...]:
        r = self.skeleton_slice(k)
        return self.simplices[r.start:r.stop]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector))

    def is_closed(self) -> bool:
        idx = self.index
        return all(f in idx for x in self.simplices if len(x) > 1
                   for f in combinations(x, len(x) - 1))

    @cached_property
    def _padded(self) -> np.ndarray:
        arr = np.full((len(self), max(1, self.dim + 1)), -1, dtype=np.int64)
        for i, x in enumerate(self.simplices):
            arr[i, :len(x)] = x
        arr.flags.writeable = False
        return arr

    def padded_array(self) -> np.ndarray:
        """Simplices as rows of vertex indices, padded with -1 (read only)."""
        return self._padded

    def to_json(self) -> str:
        return json.dumps([list(x) for x in self.simplices])

    @classmethod
    def from_json(cls, text: str) -> "Complex":
        return cls.from_simplices(json.loads(text), check=True)


def euler_characteristic(cx: Complex) -> int:
    return cx.euler_characteristic


def clique_complex(g: Graph, cap: int = DEFAULT_SIMPLEX_CAP) -> Complex:
    """All non-empty cliques of g by depth-first extension over bitmasks.

    Every clique is emitted exactly once: a clique is extended only by
    common neighbours with larger labels than its last vertex.
    """
    masks = g.masks
    out: list[Simplex] = []

    def grow(clique: Simplex, cand: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            c = clique + (v,)
            out.append(c)
            if len(out) > cap:
                raise BoundExceeded(f"clique complex exceeds {cap} simplices")
            nxt = cand & masks[v]
            if nxt:
                grow(c, nxt)

    grow((), (1 << g.n) - 1)
    out.sort(key=_canonical_key)
    return Complex(tuple(out))


def cycle_complement_complex(n: int, cap: int = DEFAULT_SIMPLEX_CAP) -> Complex:
    """Complex of G_n built by the Fibonacci-type recursion.

    A simplex of G_n is a cyclically independent set of C_n. Those avoiding the
    last vertex n-1 either come from G_{n-1} or contain both 0 and n-2; the latter
    are x + (n-2,) for x in G_{n-2} with 0 in x. Those containing n-1 are
    x + (n-1,) for x in G_{n-2} avoiding 0, or the singleton (n-1,).
    """
    if n < 0:
        raise InvalidArgument(f"n must be >= 0, got {n}")
    if n <= 5:
        if n < 3:
            return Complex(tuple((i,) for i in range(n)))
        return clique_complex(cycle_complement(n))
    prev2 = list(clique_complex(cycle_complement(4)).simplices)
    prev1 = list(clique_complex(cycle_complement(5)).simplices)
    for m in range(6, n + 1):
        new = list(prev1)
        new.append((m - 1,))
        for x in prev2:
            new.append(x + ((m - 2,) if x[0] == 0 else (m - 1,)))
        if len(new) > cap:
            raise BoundExceeded(f"complex of G_{m} exceeds {cap} simplices")
        prev2, prev1 = prev1, new
    prev1.sort(key=_canonical_key)
    return Complex(tuple(prev1))


def path_complement_complex(n: int, cap: int = DEFAULT_SIMPLEX_CAP) -> Complex:
    """Complex of G_n^+: independent sets of the path, grown one vertex at a time."""
    if n < 0:
        raise InvalidArgument(f"n must be >= 0, got {n}")
    prev2: list[Simplex] = []
    prev1: list[Simplex] = []
    for m in range(1, n + 1):
        new = prev1 + [(m - 1,)] + [x + (m - 1,) for x in prev2]
        if len(new) > cap:
            raise BoundExceeded(f"complex of G_{m}^+ exceeds {cap} simplices")
        prev2, prev1 = prev1, new
    prev1.sort(key=_canonical_key)
    return Complex(tuple(prev1))


def hyper_fibonacci(n: int) -> int:
    """F_0 = 1, F_1 = 0, F_n = F_{n-1} + F_{n-2} + 1."""
    if n < 0:
        raise InvalidArgument(f"n must be >= 0, got {n}")
    a, b = 1, 0
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, a + b + 1
    return b


def unit_sphere(g: Graph, v: int) -> Graph:
    return g.unit_sphere(v)


def join_complex(a: Complex, b: Complex, shift: int | None = None) -> Complex:
    """Simplicial join; b is relabelled by ``shift`` (default: past a's vertices)."""
    if shift is None:
        shift = (max(a.vertices) + 1) if len(a) else 0
    bs = [tuple(v + shift for v in y) for y in b.simplices]
    out = list(a.simplices) + bs + [x + y for x in a.simplices for y in bs]
    return Complex.from_simplices(out)


def f_vector(cx: Complex) -> tuple[int, ...]:
    return cx.f_vector


def faces(x: Sequence[int]) -> list[Simplex]:
    """Codimension one faces, the i-th one omitting position i."""
    return [tuple(x[:i]) + tuple(x[i + 1:]) for i in range(len(x))] if len(x) > 1 else []


def family_complex(name: str, n: int, cap: int = DEFAULT_SIMPLEX_CAP) -> Complex:
    if name == "cycle-complement":
        return cycle_complement_complex(n, cap)
    if name == "path-complement":
        return path_complement_complex(n, cap)
    raise InvalidArgument(f"no recursive builder for {name!r}")

