"""Named tables: a header and a per-n row function for each."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from .complexes import Complex, clique_complex, cycle_complement_complex, hyper_fibonacci, path_complement_complex
from .errors import InvalidArgument
from .fixedpoint import lefschetz_pair_path, lefschetz_table_cycle
from .graphs import cycle_complement, dihedral_complement, inductive_dimension, path_complement
from .hodge import betti_numbers, cohomological_dimension
from .kirchhoff import forest_count, pseudo_determinant
from .polynomials import f_polynomial
from .wu import wu_betti, wu_characteristic


def _fvector(n: int) -> list:
    cx = cycle_complement_complex(n)
    return [n, list(cx.f_vector), hyper_fibonacci(n), cx.euler_characteristic]


def _dims(graph, cx: Complex, n: int) -> list:
    fp = f_polynomial(cx)
    two_exp = 2 * fp.derivative()(1) / fp(1) - 1
    return [n, format(float(inductive_dimension(graph)), ".6g"), format(float(two_exp), ".6g"),
            cohomological_dimension(betti_numbers(cx)), cx.dim]


def _betti(cx: Complex, n: int) -> list:
    return [n, list(betti_numbers(cx)), cx.euler_characteristic]


def _wu(n: int) -> list:
    cx = cycle_complement_complex(n)
    return [n, cx.euler_characteristic] + [wu_characteristic(cx, k) for k in (2, 3, 4)]


def _wu_betti(n: int) -> list:
    cx = cycle_complement_complex(n)
    return [n, wu_characteristic(cx, 2), list(wu_betti(cx))]


def _trees(n: int) -> list:
    g, h = cycle_complement(n), path_complement(n)
    return [n, pseudo_determinant(g), forest_count(g), pseudo_determinant(h), forest_count(h)]


DIMS = ["n", "inddim", "twodimexp_minus_one", "cohodim", "maxdim"]
BETTI = ["n", "betti", "chi"]

# name -> (header, row function taking (n, shifted_order), first n, default last n)
TABLES: dict[str, tuple[list[str], Callable[[int, bool], list], int, int]] = {
    "fvector-table": (["n", "f", "F", "chi"], lambda n, _: _fvector(n), 0, 11),
    "dims-cycle": (DIMS, lambda n, _: _dims(cycle_complement(n), cycle_complement_complex(n), n), 4, 14),
    "dims-path": (DIMS, lambda n, _: _dims(path_complement(n), path_complement_complex(n), n), 4, 14),
    "betti-cycle": (BETTI, lambda n, _: _betti(cycle_complement_complex(n), n), 3, 20),
    "betti-path": (BETTI, lambda n, _: _betti(path_complement_complex(n), n), 4, 21),
    "wu-table": (["n", "chi", "omega2", "omega3", "omega4"], lambda n, _: _wu(n), 4, 18),
    "wu-betti": (["n", "omega", "wu_betti"], lambda n, _: _wu_betti(n), 3, 11),
    "tree-forest": (["n", "trees_cycle", "forests_cycle", "trees_path", "forests_path"],
                    lambda n, _: _trees(n), 4, 10),
    "lefschetz-cycle": (["n", "rotations", "reflections", "average"],
                        lambda n, po: [n, *lefschetz_table_cycle(n, po)], 4, 24),
    "lefschetz-path": (["n", "identity", "reversal", "average"],
                       lambda n, _: [n, *lefschetz_pair_path(n)], 4, 18),
    "dihedral-betti": (BETTI, lambda n, _: _betti(clique_complex(dihedral_complement(n)), n), 4, 12),
}


def build_table(name: str, max_n: int | None = None, shifted_order: bool = False,
                threads: int = 1) -> tuple[list[str], list[list]]:
    """Header and rows; rows come back in order of n whatever the thread count."""
    if name not in TABLES:
        raise InvalidArgument(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    header, row, lo, hi = TABLES[name]
    if max_n is not None:
        if max_n < lo:
            raise InvalidArgument(f"--max-n must be >= {lo} for {name}")
        hi = max_n
    ns = range(lo, hi + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda n: row(n, shifted_order), ns))
    else:
        rows = [row(n, shifted_order) for n in ns]
    return list(header), rows
