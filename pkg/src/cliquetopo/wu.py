"""Wu characteristics, f-matrices, Wu cohomology and connection calculus."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .complexes import Complex
from .errors import BoundExceeded, InternalError, NumericalFailure
from .fixedpoint import _perm_sign
from .hodge import exact_ranks
from .linalg import PRIMES, bareiss_det, inertia_exact, rational_inverse

Simplex = tuple[int, ...]


def _omega(x: Simplex) -> int:
    return 1 if len(x) % 2 else -1


def _subsets(x: Simplex):
    for r in range(1, len(x) + 1):
        yield from combinations(x, r)


def star_sums(cx: Complex) -> dict[Simplex, list[int]]:
    """For each simplex s, the number of k-simplices containing s, as a list over k."""
    out: dict[Simplex, list[int]] = {}
    width = cx.dim + 1
    for x in cx:
        k = len(x) - 1
        for s in _subsets(x):
            row = out.get(s)
            if row is None:
                row = out[s] = [0] * width
            row[k] += 1
    return out


def f_matrix(cx: Complex) -> list[list[int]]:
    """V[i][j] = number of intersecting pairs (x, y) with dim x = i, dim y = j.

    By inclusion-exclusion over the common face s of x and y,
    [x meets y] = sum over nonempty s in x and y of (-1)^dim s.
    """
    width = cx.dim + 1
    v = [[0] * width for _ in range(width)]
    for s, row in star_sums(cx).items():
        sign = _omega(s)
        for i in range(width):
            if row[i]:
                for j in range(width):
                    v[i][j] += sign * row[i] * row[j]
    return v


def f_matrix_direct(cx: Complex) -> list[list[int]]:
    width = cx.dim + 1
    v = [[0] * width for _ in range(width)]
    sets = [frozenset(x) for x in cx]
    for a, x in zip(sets, cx):
        for b, y in zip(sets, cx):
            if a & b:
                v[len(x) - 1][len(y) - 1] += 1
    return v


def wu_characteristic(cx: Complex, order: int = 2) -> int:
    """omega_k: sum over k-tuples of pairwise... jointly intersecting simplices of prod omega(x_i).

    Computed as sum_s (-1)^dim s (sum_{x >= s} omega(x))^k.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    total = 0
    for s, row in star_sums(cx).items():
        sigma = sum(c if k % 2 == 0 else -c for k, c in enumerate(row))
        total += _omega(s) * sigma ** order
    return total


def wu_characteristic_direct(cx: Complex, order: int = 2, cap: int = 2_000_000) -> int:
    """Direct sum over tuples with a common vertex, pruning on the running intersection."""
    if len(cx) ** min(order, 2) > cap * 50:
        raise BoundExceeded("direct Wu enumeration too large")
    sets = [frozenset(x) for x in cx]
    om = [_omega(x) for x in cx]
    total = 0

    def rec(depth: int, common: frozenset, weight: int) -> None:
        nonlocal total
        if depth == order:
            total += weight
            return
        for a, w in zip(sets, om):
            c = common & a if depth else a
            if c:
                rec(depth + 1, c, weight * w)

    rec(0, frozenset(), 1)
    return total


def wu_curvature(cx: Complex) -> dict[int, Fraction]:
    """K(v) = sum_{x ni v} sum_{y meets x} omega(x) omega(y) / |x|; sums to omega_2."""
    stars = star_sums(cx)
    sigma = {s: sum(c if k % 2 == 0 else -c for k, c in enumerate(row)) for s, row in stars.items()}
    out: dict[int, Fraction] = defaultdict(Fraction)
    for x in cx:
        w = sum(_omega(s) * sigma[s] for s in _subsets(x))
        share = Fraction(_omega(x) * w, len(x))
        for v in x:
            out[v] += share
    return dict(out)


# ---------------------------------------------------------------- pair complex

@dataclass
class PairComplex:
    """Intersecting pairs (x, y), graded by dim x + dim y."""

    complex: Complex
    pairs: list[tuple[int, int]]
    grade_offsets: list[int]

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def grade(self, g: int) -> list[tuple[int, int]]:
        return self.pairs[self.grade_offsets[g]:self.grade_offsets[g + 1]]

    @property
    def grades(self) -> int:
        return len(self.grade_offsets) - 1


def pair_complex(cx: Complex, cap: int = 2_000_000) -> PairComplex:
    by_vertex: dict[int, list[int]] = defaultdict(list)
    for i, x in enumerate(cx):
        for v in x:
            by_vertex[v].append(i)
    pairs = []
    for i, x in enumerate(cx):
        partners = sorted({j for v in x for j in by_vertex[v]})
        pairs.extend((i, j) for j in partners)
        if len(pairs) > cap:
            raise BoundExceeded(f"pair complex exceeds {cap} pairs")
    dims = [len(x) - 1 for x in cx]
    pairs.sort(key=lambda p: (dims[p[0]] + dims[p[1]], p))
    grades = 2 * cx.dim + 1 if len(cx) else 0
    offsets = [0] * (grades + 1)
    for a, b in pairs:
        offsets[dims[a] + dims[b] + 1] += 1
    for g in range(grades):
        offsets[g + 1] += offsets[g]
    return PairComplex(cx, pairs, offsets)


def _pair_faces(pc: PairComplex, i: int, j: int) -> list[tuple[tuple[int, int], int]]:
    """Faces of (x, y) still in the pair complex, with their incidence signs.

    Dropping position k (1-based) of x carries (-1)^k, dropping position k of y
    carries (-1)^(|x| + k).
    """
    cx = pc.complex
    idx = cx.index
    x, y = cx[i], cx[j]
    out = []
    if len(x) > 1:
        for k in range(len(x)):
            f = x[:k] + x[k + 1:]
            if set(f) & set(y):
                out.append(((idx[f], j), -1 if k % 2 == 0 else 1))
    if len(y) > 1:
        for k in range(len(y)):
            f = y[:k] + y[k + 1:]
            if set(x) & set(f):
                out.append(((i, idx[f]), (-1) ** (len(x) + k + 1)))
    return out


def pair_boundary_columns(pc: PairComplex, g: int) -> list[dict[int, int]]:
    base = pc.grade_offsets[g - 1]
    cols = []
    for i, j in pc.grade(g):
        cols.append({pc.index[f] - base: s for f, s in _pair_faces(pc, i, j)})
    return cols


def wu_derivative(pc: PairComplex) -> sp.csr_matrix:
    """Full pair differential: row = pair, column = one of its faces."""
    rows, cols, vals = [], [], []
    for m, (i, j) in enumerate(pc.pairs):
        for f, s in _pair_faces(pc, i, j):
            rows.append(m)
            cols.append(pc.index[f])
            vals.append(s)
    n = len(pc.pairs)
    return sp.csr_matrix((vals, (rows, cols)), shape=(n, n), dtype=np.int64)


def check_wu_d_squared(pc: PairComplex) -> None:
    d = wu_derivative(pc)
    if (d @ d).count_nonzero():
        raise InternalError("Wu differential does not square to zero")


def wu_betti(cx: Complex) -> tuple[int, ...]:
    """Wu Betti numbers by grade 0..2 dim, as nullities of the pair Laplacian."""
    pc = pair_complex(cx)
    if pc.grades == 0:
        return ()
    cols = [[]] + [pair_boundary_columns(pc, g) for g in range(1, pc.grades)]
    sizes = [pc.grade_offsets[g + 1] - pc.grade_offsets[g] for g in range(pc.grades)]
    nrows = [0] + sizes[:-1]
    r = exact_ranks(cols, nrows) + [0]
    return tuple(sizes[g] - r[g] - r[g + 1] for g in range(pc.grades))


def _signed_image(cx: Complex, perm: Sequence[int], x: Simplex) -> tuple[Simplex, int]:
    img = [perm[v] for v in x]
    order = sorted(range(len(img)), key=img.__getitem__)
    return tuple(img[i] for i in order), _perm_sign(order)


def wu_lefschetz_fixed(cx: Complex, perm: Sequence[int]) -> int:
    """sum over fixed intersecting pairs of i_T(x) i_T(y)."""
    fixed = []
    for x in cx:
        y, s = _signed_image(cx, perm, x)
        if y == x:
            fixed.append((frozenset(x), s * (1 if len(x) % 2 else -1)))
    return sum(a[1] * b[1] for a, b in product(fixed, repeat=2) if a[0] & b[0])


def wu_lefschetz_cohomology(cx: Complex, perm: Sequence[int], tol: float = 1e-8,
                            cap: int = 3000) -> float:
    """Graded supertrace of the induced pair map on harmonic pair forms."""
    pc = pair_complex(cx)
    n = len(pc.pairs)
    if n > cap:
        raise BoundExceeded(f"Wu Laplacian capped at {cap} pairs")
    d = wu_derivative(pc).toarray().astype(float)
    lap = d @ d.T + d.T @ d
    idx = cx.index
    images = [_signed_image(cx, perm, x) for x in cx]
    act = np.zeros((n, n))
    for c, (i, j) in enumerate(pc.pairs):
        (xi, si), (yj, sj) = images[i], images[j]
        act[pc.index[(idx[xi], idx[yj])], c] = si * sj
    total = 0.0
    for g in range(pc.grades):
        lo, hi = pc.grade_offsets[g], pc.grade_offsets[g + 1]
        if hi == lo:
            continue
        w, v = np.linalg.eigh(lap[lo:hi, lo:hi])
        h = v[:, np.abs(w) < tol]
        total += (-1) ** g * float(np.trace(h.T @ act[lo:hi, lo:hi] @ h))
    return total


# ---------------------------------------------------------------- connection calculus

def connection_matrix(cx: Complex) -> np.ndarray:
    """L(x, y) = 1 when x and y intersect."""
    arr = _incidence(cx)
    return ((arr @ arr.T) > 0).astype(np.int64)


def counting_matrix(cx: Complex) -> np.ndarray:
    """Entries 2^|x meet y| - 1, the number of common nonempty faces."""
    arr = _incidence(cx)
    return (2 ** (arr @ arr.T)) - 1


def _incidence(cx: Complex) -> np.ndarray:
    verts = {v: i for i, v in enumerate(cx.vertices)}
    arr = np.zeros((len(cx), len(verts)), dtype=np.int64)
    for r, x in enumerate(cx):
        for v in x:
            arr[r, verts[v]] = 1
    return arr


def exact_inverse_certificate(m: np.ndarray) -> np.ndarray:
    """Integer inverse of a unimodular matrix, verified exactly.

    The float inverse is rounded and m @ g = 1 is checked in integer
    arithmetic, which proves det m = +-1.
    """
    g = np.rint(np.linalg.inv(m.astype(float))).astype(np.int64)
    if not np.array_equal(m.astype(object) @ g.astype(object), np.eye(len(m), dtype=np.int64).astype(object)):
        raise NumericalFailure("rounded inverse is not an exact integer inverse")
    return g


def det_mod_p(m: np.ndarray, p: int = PRIMES[0]) -> int:
    """Determinant modulo p by Gaussian elimination on Python ints."""
    a = [[int(x) % p for x in row] for row in m]
    n = len(a)
    det = 1
    for c in range(n):
        pr = next((r for r in range(c, n) if a[r][c]), None)
        if pr is None:
            return 0
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv % p
                row_r, row_c = a[r], a[c]
                for k in range(c, n):
                    row_r[k] = (row_r[k] - f * row_c[k]) % p
    return det % p


@dataclass(frozen=True)
class ConnectionReport:
    det: int
    energy_sum: int
    positive: int
    negative: int


def connection_report(cx: Complex, exact_limit: int = 60) -> ConnectionReport:
    """Determinant, sum of inverse entries and inertia of the connection matrix."""
    m = connection_matrix(cx)
    if len(m) <= exact_limit:
        det = bareiss_det(m.tolist())
    else:
        exact_inverse_certificate(m)
        d = det_mod_p(m)
        det = 1 if d == 1 else -1 if d == PRIMES[0] - 1 else None
        if det is None:
            raise NumericalFailure("unimodular matrix with determinant other than +-1 mod p")
    g = exact_inverse_certificate(m)
    ev = np.linalg.eigvalsh(m.astype(float))
    if np.min(np.abs(ev)) < 1e-9 * max(1.0, np.max(np.abs(ev))):
        pos, neg, _ = inertia_exact(m.tolist())
    else:
        pos, neg = int(np.sum(ev > 0)), int(np.sum(ev < 0))
    return ConnectionReport(int(det), int(g.sum()), pos, neg)


def hydrogen_check(cx: Complex) -> bool:
    """For 1-dimensional complexes, |H| = L - L^{-1} with H = (d + d^T)^2 built from |d|."""
    from .hodge import exterior_derivative

    if cx.dim > 1:
        raise ValueError("hydrogen identity concerns 1-dimensional complexes")
    d = abs(exterior_derivative(cx).full().toarray())
    dirac = d + d.T
    h = dirac @ dirac
    m = connection_matrix(cx)
    inv = rational_inverse(m.tolist())
    return all(Fraction(int(h[i, j])) == m[i, j] - inv[i][j] for i in range(len(m)) for j in range(len(m)))


def isospectral_to_inverse(m: np.ndarray, tol: float = 1e-7) -> bool:
    ev = np.sort(np.linalg.eigvalsh(m.astype(float)))
    inv = np.sort(1.0 / ev)
    return bool(np.max(np.abs(ev - inv)) < tol * max(1.0, np.max(np.abs(ev))))
