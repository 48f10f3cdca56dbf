"""Lefschetz numbers of graph automorphisms, by fixed simplices and by cohomology."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .complexes import Complex, cycle_complement_complex, path_complement_complex
from .errors import InvalidArgument, NumericalFailure
from .graphs import Graph
from .hodge import _orientation, hodge_blocks

Perm = tuple[int, ...]


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(perm[w] in g.adj[perm[u]] for u in range(g.n) for w in g.adj[u])


def rotation(n: int, j: int) -> Perm:
    return tuple((x + j) % n for x in range(n))


def reflection(n: int, j: int) -> Perm:
    return tuple((j - x) % n for x in range(n))


def dihedral_automorphisms(n: int, shifted_order: bool = False) -> tuple[list[Perm], list[Perm]]:
    """Rotations and reflections of C_n, hence automorphisms of G_n.

    Canonical order: x -> x + j and x -> j - x for j = 0..n-1. The alternative
    order lists x -> x - k and x -> -1 - k - x for k = 1..n, so the identity
    comes last among the rotations.
    """
    if n < 3:
        raise InvalidArgument(f"dihedral group needs n >= 3, got {n}")
    if shifted_order:
        rots = [rotation(n, -k) for k in range(1, n + 1)]
        refs = [reflection(n, -1 - k) for k in range(1, n + 1)]
    else:
        rots = [rotation(n, j) for j in range(n)]
        refs = [reflection(n, j) for j in range(n)]
    return rots, refs


def path_automorphisms(n: int) -> list[Perm]:
    """Identity and reversal of the path."""
    return [tuple(range(n)), tuple(range(n - 1, -1, -1))]


def _apply(arr: np.ndarray, perm: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Images of padded simplices; returns (image rows, valid mask)."""
    p = np.asarray(perm, dtype=np.int64)
    valid = arr >= 0
    img = np.where(valid, p[np.where(valid, arr, 0)], -1)
    return img, valid


def _inversion_parity(img: np.ndarray, valid: np.ndarray) -> np.ndarray:
    width = img.shape[1]
    inv = np.zeros(len(img), dtype=np.int64)
    for i in range(width):
        for j in range(i + 1, width):
            inv += (valid[:, j] & (img[:, i] > img[:, j])).astype(np.int64)
    return inv & 1


def fixed_simplices(cx: Complex, perm: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    """Fixed simplices with their index (-1)^dim x * sign(T restricted to x)."""
    arr = cx.padded_array()
    if len(cx) == 0:
        return []
    img, valid = _apply(arr, perm)
    big = np.iinfo(np.int64).max
    srt = np.sort(np.where(valid, img, big), axis=1)
    fixed = np.all(np.where(valid, srt == arr, True), axis=1)
    rows = np.nonzero(fixed)[0]
    parity = _inversion_parity(img[rows], valid[rows])
    dims = valid[rows].sum(axis=1) - 1
    out = []
    for r, par, d in zip(rows, parity, dims):
        out.append((cx[int(r)], (-1) ** int(d + par)))
    return out


def lefschetz_number(cx: Complex, perm: Sequence[int]) -> int:
    return sum(i for _, i in fixed_simplices(cx, perm))


def lefschetz_table_cycle(n: int, shifted_order: bool = False, cx: Complex | None = None
                          ) -> tuple[list[int], list[int], Fraction]:
    """Lefschetz numbers of rotations and reflections of G_n, with the group average."""
    if cx is None:
        cx = cycle_complement_complex(n)
    rots, refs = dihedral_automorphisms(n, shifted_order)
    a = [lefschetz_number(cx, t) for t in rots]
    b = [lefschetz_number(cx, t) for t in refs]
    return a, b, Fraction(sum(a) + sum(b), 2 * n)


def average_lefschetz(n: int) -> Fraction:
    """Mean Lefschetz number over the dihedral group acting on G_n."""
    if n < 4:
        raise InvalidArgument(f"average needs n >= 4, got {n}")
    return lefschetz_table_cycle(n)[2]


def lefschetz_pair_path(n: int, cx: Complex | None = None) -> tuple[int, int, Fraction]:
    """Lefschetz numbers of identity and reversal of G_n^+, and their average."""
    if cx is None:
        cx = path_complement_complex(n)
    a, b = (lefschetz_number(cx, t) for t in path_automorphisms(n))
    return a, b, Fraction(a + b, 2)


def induced_action(cx: Complex, perm: Sequence[int], orientation: Sequence[int] | None = None
                   ) -> list[np.ndarray]:
    """Matrices of the induced chain map on each dimension, signed by orientation."""
    o = _orientation(cx, orientation)
    idx = cx.index
    mats = []
    for k, fk in enumerate(cx.f_vector):
        a = np.zeros((fk, fk))
        base = cx.offsets[k]
        for c, x in enumerate(cx.of_dim(k)):
            img = [perm[v] for v in x]
            order = sorted(range(len(img)), key=img.__getitem__)
            sign = _perm_sign(order)
            y = tuple(img[i] for i in order)
            r = idx[y] - base
            a[r, c] = sign * o[base + r] * o[base + c]
        mats.append(a)
    return mats


def _perm_sign(order: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
    return -1 if inv & 1 else 1


def lefschetz_via_cohomology(cx: Complex, perm: Sequence[int],
                             orientation: Sequence[int] | None = None, tol: float = 1e-8) -> float:
    """sum_k (-1)^k tr(P_k A_k), P_k the projection onto harmonic k-forms."""
    o = _orientation(cx, orientation)
    from .hodge import exterior_derivative

    blocks = hodge_blocks(cx, exterior_derivative(cx, o))
    total = 0.0
    for k, (lk, ak) in enumerate(zip(blocks, induced_action(cx, perm, o))):
        if not len(lk):
            continue
        w, v = np.linalg.eigh(lk.astype(float))
        h = v[:, np.abs(w) < tol]
        total += (-1) ** k * float(np.trace(h.T @ ak @ h))
    if abs(total - round(total)) > 1e-6:
        raise NumericalFailure(f"cohomological supertrace {total} is not near an integer")
    return total
