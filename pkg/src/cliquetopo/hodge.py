"""Exterior derivative, Hodge Laplacian blocks, Betti numbers and supertraces."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .complexes import Complex
from .errors import BoundExceeded, InternalError
from .linalg import ARBITER_LIMIT, PRIMES, bareiss_rank, dense_from_columns, rational_nullspace, reduce_columns

SPECTRUM_CAP = 4000


@dataclass
class SignedIncidence:
    """d_k maps k-forms to (k+1)-forms; ``blocks[k]`` has shape f_{k+1} x f_k."""

    complex: Complex
    blocks: list[sp.csr_matrix]

    def full(self) -> sp.csr_matrix:
        """The whole exterior derivative as an N x N matrix in canonical order."""
        n = len(self.complex)
        rows, cols, vals = [], [], []
        off = self.complex.offsets
        for k, b in enumerate(self.blocks):
            c = b.tocoo()
            rows.append(c.row + off[k + 1])
            cols.append(c.col + off[k])
            vals.append(c.data)
        if not rows:
            return sp.csr_matrix((n, n), dtype=np.int64)
        return sp.csr_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                             shape=(n, n), dtype=np.int64)

    def to_coordinate_text(self) -> str:
        c = self.full().tocoo()
        order = np.lexsort((c.col, c.row))
        return "".join(f"{c.row[i]} {c.col[i]} {c.data[i]}\n" for i in order)


def _orientation(cx: Complex, orientation: Sequence[int] | None) -> np.ndarray:
    if orientation is None:
        return np.ones(len(cx), dtype=np.int64)
    o = np.asarray(orientation, dtype=np.int64)
    if o.shape != (len(cx),) or not np.all(np.abs(o) == 1):
        raise ValueError("orientation must be a +-1 vector, one entry per simplex")
    return o


def exterior_derivative(cx: Complex, orientation: Sequence[int] | None = None) -> SignedIncidence:
    """(d f)(x) = sum_i (-1)^i f(x minus its i-th vertex).

    ``orientation`` optionally flips the reference orientation of simplices.
    """
    idx = cx.index
    o = _orientation(cx, orientation)
    blocks = []
    off = cx.offsets
    for k in range(cx.dim):
        rows, cols, vals = [], [], []
        for r, x in enumerate(cx.of_dim(k + 1)):
            sx = o[off[k + 1] + r]
            for i in range(len(x)):
                j = idx[x[:i] + x[i + 1:]]
                rows.append(r)
                cols.append(j - off[k])
                vals.append((-1 if i & 1 else 1) * sx * o[j])
        blocks.append(sp.csr_matrix((vals, (rows, cols)), shape=(cx.f_vector[k + 1], cx.f_vector[k]),
                                    dtype=np.int64))
    return SignedIncidence(cx, blocks)


def check_d_squared(d: SignedIncidence) -> None:
    for k in range(len(d.blocks) - 1):
        prod = d.blocks[k + 1] @ d.blocks[k]
        if prod.count_nonzero():
            raise InternalError(f"d_{k + 1} d_{k} != 0")


def boundary_columns(cx: Complex, k: int) -> list[dict[int, int]]:
    """Columns of the boundary of k-simplices, rows indexed within dimension k-1."""
    idx = cx.index
    base = cx.offsets[k - 1]
    cols = []
    for x in cx.of_dim(k):
        cols.append({idx[x[:i] + x[i + 1:]] - base: (-1 if i & 1 else 1) for i in range(len(x))})
    return cols


def ranks_by_clearing(columns: list[list[dict[int, int]]], p: int) -> list[int]:
    """ranks[k] = rank of columns[k], processed top down with the clearing trick.

    columns[k] lists column vectors whose row indices point into the columns of
    columns[k-1]; a row that became a pivot above is known to reduce to zero.
    """
    ranks = [0] * len(columns)
    skip: set[int] = set()
    for k in range(len(columns) - 1, -1, -1):
        r, owner = reduce_columns(columns[k], p, skip)
        ranks[k] = r
        skip = set(owner)
    return ranks


def exact_ranks(columns: list[list[dict[int, int]]], nrows: list[int]) -> list[int]:
    """Exact ranks over Q: two primes, then Bareiss on any disagreeing block."""
    r1 = ranks_by_clearing(columns, PRIMES[0])
    r2 = ranks_by_clearing(columns, PRIMES[1])
    out = []
    for k, (a, b) in enumerate(zip(r1, r2)):
        if a == b:
            out.append(a)
            continue
        if max(nrows[k], len(columns[k])) > ARBITER_LIMIT:
            raise BoundExceeded("modular ranks disagree on a block too large to arbitrate")
        out.append(bareiss_rank(dense_from_columns(columns[k], nrows[k])))
    return out


def boundary_ranks(cx: Complex) -> list[int]:
    """ranks[k] = rank of the boundary from k-chains to (k-1)-chains (ranks[0] = 0)."""
    if len(cx) == 0:
        return []
    cols = [[]] + [boundary_columns(cx, k) for k in range(1, cx.dim + 1)]
    nrows = [0] + [cx.f_vector[k - 1] for k in range(1, cx.dim + 1)]
    return exact_ranks(cols, nrows)


def betti_numbers(cx: Complex) -> tuple[int, ...]:
    """Exact Betti vector b_0..b_dim, length dim + 1 (empty for the empty complex)."""
    f = cx.f_vector
    r = boundary_ranks(cx) + [0]
    return tuple(f[k] - r[k] - r[k + 1] for k in range(len(f)))


def hodge_blocks(cx: Complex, d: SignedIncidence | None = None) -> list[np.ndarray]:
    """Dense integer blocks L_k = d_k^T d_k + d_{k-1} d_{k-1}^T."""
    if d is None:
        d = exterior_derivative(cx)
    out = []
    for k, fk in enumerate(cx.f_vector):
        lk = sp.csr_matrix((fk, fk), dtype=np.int64)
        if k < len(d.blocks):
            lk = lk + d.blocks[k].T @ d.blocks[k]
        if k >= 1:
            lk = lk + d.blocks[k - 1] @ d.blocks[k - 1].T
        out.append(lk.toarray())
    return out


def hodge_spectrum(cx: Complex, cap: int = SPECTRUM_CAP) -> list[np.ndarray]:
    if len(cx) > cap:
        raise BoundExceeded(f"spectrum capped at {cap} simplices, complex has {len(cx)}")
    return [np.linalg.eigvalsh(b.astype(float)) if b.size else np.zeros(0) for b in hodge_blocks(cx)]


def harmonic_basis(cx: Complex, k: int) -> list[list[Fraction]]:
    """Exact basis of ker L_k, the harmonic k-forms."""
    blocks = hodge_blocks(cx)
    if k < 0 or k >= len(blocks):
        return []
    return rational_nullspace(blocks[k].tolist())


def supertrace_power(cx: Complex, m: int) -> int:
    """str(L^m) = sum_k (-1)^k tr(L_k^m), exactly."""
    total = 0
    for k, b in enumerate(hodge_blocks(cx)):
        p = np.linalg.matrix_power(b.astype(object), m) if m else np.eye(len(b), dtype=object)
        total += (-1) ** k * int(np.trace(p)) if len(b) else 0
    return total


def heat_supertrace(cx: Complex, t: float) -> float:
    """str(exp(-t L)) from the Hodge spectrum."""
    return float(sum((-1) ** k * np.exp(-t * ev).sum() for k, ev in enumerate(hodge_spectrum(cx))))


def mckean_singer_report(cx: Complex, powers: Sequence[int] = (1, 2, 3),
                         times: Sequence[float] = (0.1, 1.0, 10.0)) -> dict:
    return {
        "chi": cx.euler_characteristic,
        "powers": {m: supertrace_power(cx, m) for m in powers},
        "heat": {t: heat_supertrace(cx, t) for t in times},
    }


def dirac_operator(cx: Complex) -> sp.csr_matrix:
    d = exterior_derivative(cx).full()
    return (d + d.T).tocsr()


def cohomological_dimension(betti: Sequence[int]) -> int:
    """Largest k with b_k != 0, or -1 when all vanish."""
    nz = [k for k, b in enumerate(betti) if b]
    return nz[-1] if nz else -1

