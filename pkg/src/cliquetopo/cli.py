"""Command line front end: ``cliquetopo <command> [options]``."""
from __future__ import annotations

import argparse
import io
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import complexes, curvature, fixedpoint, graphs, hodge, homotopy, kirchhoff, wu
from .errors import BoundExceeded, InternalError, InvalidArgument, NumericalFailure
from .tables import TABLES, build_table

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_NUMERIC = 0, 2, 3, 4
WU_BETTI_LIMIT = 250  # simplices; the pair complex grows quadratically


FLOAT_DIGITS = ".12g"  # keeps goldens stable across BLAS builds


def _float(v: float) -> float:
    return float(format(float(v) + 0.0, FLOAT_DIGITS)) + 0.0


def _json_value(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return _float(v)
    return v


def _csv_field(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return ";".join(_csv_field(x) for x in v)
    if isinstance(v, (float, np.floating)):
        return repr(_float(v))
    return str(v)


def render(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, map(_json_value, r))) for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for r in rows:
        buf.write(",".join(_csv_field(x) for x in r) + "\n")
    return buf.getvalue()


def render_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_json_value(record), indent=1) + "\n"
    return render(list(record), [list(record.values())], "csv")


# ---------------------------------------------------------------- commands

def _graph(a) -> graphs.Graph:
    return graphs.family_graph(a.family, a.n, a.gens or (), a.q)


def _complex(a) -> complexes.Complex:
    if a.family in ("cycle-complement", "path-complement"):
        return complexes.family_complex(a.family, graphs._need(a.n), a.simplex_cap)
    return complexes.clique_complex(_graph(a), a.simplex_cap)


def cmd_family(a) -> str:
    g = _graph(a)
    if a.format == "json":
        return g.to_json() + "\n"
    return render(["u", "v"], [list(e) for e in g.edges()], "csv")


def cmd_fvector(a) -> str:
    cx = _complex(a)
    if a.format == "json":
        return render_record({"f_vector": list(cx.f_vector), "chi": cx.euler_characteristic}, "json")
    return render(["k", "f"], [[k, f] for k, f in enumerate(cx.f_vector)], "csv")


def cmd_betti(a) -> str:
    cx = _complex(a)
    b = hodge.betti_numbers(cx)
    if a.format == "json":
        return render_record({"betti": list(b), "chi": cx.euler_characteristic}, "json")
    return render(["k", "betti"], [[k, x] for k, x in enumerate(b)], "csv")


def cmd_curvature(a) -> str:
    g = _graph(a)
    k = curvature.levitt_curvature(g, _complex(a))
    if a.format == "json":
        return render(["vertex", "curvature"], [[v, c] for v, c in enumerate(k)], "json")
    rows = [[v, c.numerator, c.denominator, float(c)] for v, c in enumerate(k)]
    return render(["vertex", "numerator", "denominator", "float"], rows, "csv")


def cmd_renorm(a) -> str:
    n = graphs._need(a.n)
    rows = [[x, y, l] for l in range(6) for x, y in curvature.renormalization_sample(n, l)]
    return render(["x", "value", "residue"], rows, a.format)


def cmd_lefschetz(a) -> str:
    """One row per automorphism; j is the image of vertex 0."""
    n = graphs._need(a.n)
    if a.family == "cycle-complement":
        cx = complexes.cycle_complement_complex(n, a.simplex_cap)
        rots, refs = fixedpoint.dihedral_automorphisms(n, a.shifted_order)
    elif a.family == "path-complement":
        cx = complexes.path_complement_complex(n, a.simplex_cap)
        ident, rev = fixedpoint.path_automorphisms(n)
        rots, refs = [ident], [rev]
    else:
        raise InvalidArgument("lefschetz supports cycle-complement and path-complement")
    rows = [[n, kind, t[0], fixedpoint.lefschetz_number(cx, t)]
            for kind, group in (("rot", rots), ("refl", refs)) for t in group]
    avg = Fraction(sum(r[3] for r in rows), len(rows))
    return render(["n", "kind", "j", "value", "average"], [r + [avg] for r in rows], a.format)


def cmd_wu(a) -> str:
    cx = _complex(a)
    record = {"n": a.n, "chi": cx.euler_characteristic}
    for k in (2, 3, 4):
        record[f"omega{k}"] = wu.wu_characteristic(cx, k)
    if a.format == "csv":
        return render_record(record, "csv")
    record["f_matrix"] = wu.f_matrix(cx)
    if len(cx) <= WU_BETTI_LIMIT:
        record["wu_betti"] = list(wu.wu_betti(cx))
    return render_record(record, "json")


def cmd_trees(a) -> str:
    g = _graph(a)
    t, f = kirchhoff.pseudo_determinant(g), kirchhoff.forest_count(g)
    return render_record({"n": g.n, "trees": t, "forests": f, "ratio": Fraction(f, t)}, a.format)


def cmd_zeta(a) -> str:
    g = _graph(a)
    rows = [[s, kirchhoff.spectral_zeta(g, s)] for s in range(1, 6)]
    return render(["s", "zeta"], rows, a.format)


def cmd_spectrum(a) -> str:
    cx = _complex(a)
    rows = []
    for k, ev in enumerate(hodge.hodge_spectrum(cx)):
        rows += [[k, round(float(x), 10) + 0.0] for x in ev]
    return render(["k", "eigenvalue"], rows, a.format)


def cmd_classify(a) -> str:
    g = _graph(a)
    c = homotopy.classify_homotopy_type(g)
    record = {"input": f"{a.family}:{a.n if a.n is not None else a.q}", "class": str(c),
              "betti": list(c.betti)}
    if c.certificate is not None:
        record["certificate"] = c.certificate
    return render_record(record, a.format)


def cmd_table(a) -> str:
    header, rows = build_table(a.name, a.max_n, a.shifted_order, a.threads)
    return render(header, rows, a.format)


COMMANDS = {
    "family": cmd_family, "fvector": cmd_fvector, "betti": cmd_betti, "curvature": cmd_curvature,
    "renorm": cmd_renorm, "lefschetz": cmd_lefschetz, "wu": cmd_wu, "trees": cmd_trees,
    "zeta": cmd_zeta, "spectrum": cmd_spectrum, "classify": cmd_classify, "table": cmd_table,
}


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=graphs.FAMILIES, default="cycle-complement")
    common.add_argument("--n", type=int)
    common.add_argument("--gens", type=lambda s: [int(x) for x in s.split(",") if x])
    common.add_argument("--q", type=int)
    common.add_argument("--max-n", type=int)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out")
    common.add_argument("--simplex-cap", type=_positive, default=complexes.DEFAULT_SIMPLEX_CAP)
    common.add_argument("--paper-order", dest="shifted_order", action="store_true",
                        help="rotations x -> x - k and reflections x -> -1 - k - x for k = 1..n")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    parser = argparse.ArgumentParser(prog="cliquetopo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "table":
            p.add_argument("name", choices=sorted(TABLES))
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        text = COMMANDS[args.command](args)
    except InvalidArgument as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (NumericalFailure, InternalError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
