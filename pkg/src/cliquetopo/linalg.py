"""Exact linear algebra: sparse ranks mod p, Bareiss, rational kernels, char polys."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BoundExceeded, InternalError

# two fixed primes keep every run deterministic
PRIMES = (2_147_483_647, 2_305_843_009_213_693_951)

Column = dict[int, int]


def reduce_columns(columns: Sequence[Column], p: int, skip: set[int] | None = None
                   ) -> tuple[int, dict[int, int]]:
    """Column reduction mod p keyed on the largest row index (the 'low').

    Returns the rank and a map low -> column position. Columns listed in
    ``skip`` are known to reduce to zero and are not touched.
    """
    pivots: dict[int, Column] = {}
    owner: dict[int, int] = {}
    for j, col0 in enumerate(columns):
        if skip and j in skip:
            continue
        col = {r: v % p for r, v in col0.items() if v % p}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(col[low], -1, p)
                if inv != 1:
                    col = {r: v * inv % p for r, v in col.items()}
                pivots[low] = col
                owner[low] = j
                break
            a = col[low]
            for r, v in piv.items():
                nv = (col.get(r, 0) - a * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return len(pivots), owner


def rank_mod_p(columns: Sequence[Column], p: int = PRIMES[0]) -> int:
    return reduce_columns(columns, p)[0]


def dense_from_columns(columns: Sequence[Column], nrows: int) -> list[list[int]]:
    m = [[0] * len(columns) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for r, v in col.items():
            m[r][j] = v
    return m


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank over Q by fraction-free elimination."""
    a = [list(row) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        pr = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        piv = a[rank][c]
        for r in range(rank + 1, rows):
            f = a[r][c]
            row_r, row_k = a[r], a[rank]
            for k in range(c, cols):
                row_r[k] = (piv * row_r[k] - f * row_k[k]) // prev
        prev = piv
        rank += 1
        if rank == rows:
            break
    return rank


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pr is None:
                return 0
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


ARBITER_LIMIT = 400


def exact_rank(columns: Sequence[Column], nrows: int) -> int:
    """Rank over Q: two modular ranks, with Bareiss arbitration on disagreement."""
    r1 = rank_mod_p(columns, PRIMES[0])
    r2 = rank_mod_p(columns, PRIMES[1])
    if r1 == r2:
        return r1
    if max(nrows, len(columns)) > ARBITER_LIMIT:
        raise BoundExceeded("modular ranks disagree and the matrix is too large to arbitrate")
    return bareiss_rank(dense_from_columns(columns, nrows))


def rational_nullspace(matrix: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    """Basis of the right kernel, from the reduced row echelon form."""
    a = [[Fraction(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivcols: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivcols.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in set(pivcols)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


def rational_inverse(matrix: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[pr] = a[pr], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def charpoly_berkowitz(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(xI - A), lowest degree first, division free."""
    n = len(matrix)
    a = [list(map(int, row)) for row in matrix]
    if n == 0:
        return [1]
    # vect holds the char poly of the leading r x r block, highest degree first
    vect = [1, -a[0][0]]
    for r in range(1, n):
        # Toeplitz column built from a[r][r], R = a[r][:r], S = column a[:r][r], A_r
        big_r = a[r][:r]
        s = [a[i][r] for i in range(r)]
        sub = [row[:r] for row in a[:r]]
        col = [1, -a[r][r]]
        cur = s
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(big_r, cur)))
            cur = [sum(sub[i][j] * cur[j] for j in range(r)) for i in range(r)]
        # multiply the (r+2) x (r+1) lower-triangular Toeplitz matrix by vect
        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(min(i + 1, r + 1)):
                acc += col[i - j] * vect[j]
            new.append(acc)
        vect = new
    return vect[::-1]


def inertia_exact(matrix: Sequence[Sequence[int | Fraction]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts by symmetric elimination over Q."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    pos = neg = zero = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is None:
            # all diagonal zero: a 2x2 block with an off-diagonal entry splits +/-
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            # congruence: row/col i += row/col j makes the diagonal 2 a_ij
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            continue
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            if a[i][k] != 0:
                f = a[i][k] / d
                for j in active:
                    a[i][j] -= f * a[k][j]
    return pos, neg, zero


def check_zero(matrix, what: str) -> None:
    m = matrix.tocoo() if hasattr(matrix, "tocoo") else np.asarray(matrix)
    nz = m.nnz if hasattr(m, "nnz") else np.count_nonzero(m)
    if hasattr(m, "data"):
        nz = int(np.count_nonzero(m.data))
    if nz:
        raise InternalError(f"{what} is not zero")
