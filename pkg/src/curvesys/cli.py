"""Command-line interface: ``curvesys generate|verify|search|bounds|export-dot``.

Exit status 0 means success (all checks pass), 1 a failed check or a search
that disagrees with the known value, 2 a usage or input-format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, gf2, quotient, torus
from .errors import CurveSysError, FormatError
from .io import atomic_write_text, dumps, read_system
from .model import Flavor, intersection_graph
from .search import default_workers
from .verify import bounds, verify_all

OK, CHECK_FAILED, USAGE = 0, 1, 2


def _emit(text, out=None):
    print(text, file=out or sys.stdout)


def _write_or_print(text, path):
    if path:
        atomic_write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    report_to = sys.stdout if args.out else sys.stderr
    if args.kind == "canonical-vectors":
        fam = gf2.canonical_family(args.genus)
        verdict = gf2.validate_odd_family(fam)
        if not verdict.valid:
            _emit(f"canonical family failed its own check: {verdict}", report_to)
            return CHECK_FAILED
        _write_or_print("".join(f"{v}\n" for v in fam), args.out)
        _emit(f"{len(fam)} vectors in (Z/2Z)^{2 * args.genus}, pairwise pairing 1", report_to)
        return OK

    g, n = args.genus, args.boundary
    if args.kind != "boundary" and n:
        raise CurveSysError(f"{args.kind} systems are closed; --boundary must be 0")
    required = None
    if args.kind == "polygon":
        system = constructions.polygon_system(g)
    elif args.kind == "boundary":
        system = constructions.boundary_system(g, n)
        required = bounds(g, n).lower
    elif args.kind == "closed-lower":
        system = constructions.closed_lower_system(g)
        required = bounds(g).lower
    else:
        system = constructions.hyperelliptic_system(g)
        if g <= 3:
            required = bounds(g).lower

    report = verify_all(system)
    if not report.passed:
        _emit(report.format(), report_to)
        return CHECK_FAILED
    _write_or_print(dumps(system), args.out)

    table = bounds(system.genus, system.boundary)
    msg = f"N={len(system)}, upper bound {table.upper}"
    if required is not None:
        msg += f"; {len(system)} ≥ {required} required"
    _emit(msg, report_to)
    return OK if required is None or len(system) >= required else CHECK_FAILED


def cmd_verify(args) -> int:
    system = read_system(args.path)
    report = verify_all(system, args.k)
    if args.json:
        _emit(json.dumps(report.to_dict(), indent=2))
    else:
        _emit(f"{args.path}: genus {system.genus}, boundary {system.boundary}, {len(system)} curves, "
              f"k = {system.k if args.k is None else args.k}")
        _emit(report.format())
    return OK if report.passed else CHECK_FAILED


def cmd_search(args) -> int:
    workers = default_workers()
    if args.target == "torus":
        if args.k < 1 or args.bound < 1:
            raise CurveSysError("--k and --bound must be positive")
        res = torus.search_torus(args.k, args.bound, cutoff=args.cutoff, workers=workers)
        ok = res.size == 3 if args.k == 1 else res.size <= 2 * args.k + 3
        expected = "known value 3" if args.k == 1 else f"bound 2k+3 = {2 * args.k + 3}"
        payload = {"max": res.size, "witness": [str(c) for c in res.witness], "candidates": res.candidates}
        lines = [
            f"max {res.size}",
            f"witness {' '.join(str(c) for c in res.witness)}",
            f"{res.candidates} curves of height <= {args.bound}; {expected}: {'agrees' if ok else 'DISAGREES'}",
        ]
    elif args.target == "genus2":
        res = quotient.enumerate_max_systems_genus2(prefilter=not args.no_prefilter)
        ok = res.max_edges == 12 and len(res.iso_classes) == 2
        payload = {
            "max_edges": res.max_edges,
            "labeled_count": res.labeled_count,
            "iso_classes": [c.edge_list() for c in res.iso_classes],
            "degree_sequences": [list(c.degree_sequence()) for c in res.iso_classes],
        }
        lines = [f"max edges {res.max_edges}; {len(res.iso_classes)} isomorphism classes"]
        for c in res.iso_classes:
            lines.append(f"  degrees {c.degree_sequence()}  edges {c.edge_list()}")
        lines.append(f"{res.labeled_count} labelled maxima among {res.candidates_checked} candidates; "
                     f"known value N(1,2) = 12 with 2 orbits: {'agrees' if ok else 'DISAGREES'}")
    else:
        if args.genus < 1:
            raise CurveSysError("--genus must be >= 1")
        size, witness = gf2.max_odd_family(args.genus, cutoff=not args.certified, workers=workers)
        ok = size == 2 * args.genus + 1
        payload = {"max": size, "witness": [str(v) for v in witness]}
        lines = [
            f"max family {size}",
            f"witness {' '.join(str(v) for v in witness)}",
            f"2g+1 = {2 * args.genus + 1}: {'agrees' if ok else 'DISAGREES'}",
        ]
    if args.json:
        payload["agrees"] = ok
        _emit(json.dumps(payload, indent=2))
    else:
        _emit("\n".join(lines))
    return OK if ok else CHECK_FAILED


def cmd_bounds(args) -> int:
    table = bounds(args.genus, args.boundary, args.k)
    if args.json:
        _emit(json.dumps({
            "genus": table.genus, "boundary": table.boundary, "lower": table.lower, "upper": table.upper,
            "exact": table.exact, "lower_formula": table.lower_formula, "upper_formula": table.upper_formula,
        }, indent=2))
    else:
        _emit(table.describe())
        _emit(f"  lower {table.lower}: {table.lower_formula}")
        _emit(f"  upper {table.upper}: {table.upper_formula}")
    return OK


def cmd_export_dot(args) -> int:
    system = read_system(args.path)
    graph = intersection_graph(system, Flavor(args.flavor))
    _write_or_print(graph.to_dot("G_odd" if args.flavor == "odd" else "G"), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvesys", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build and self-verify a construction")
    p.add_argument("kind", choices=["polygon", "boundary", "closed-lower", "hyperelliptic", "canonical-vectors"])
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundary", type=int, default=0)
    p.add_argument("--out", help="output path (default: standard output, report on stderr)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run every applicable check on a system file")
    p.add_argument("path")
    p.add_argument("--k", type=int, default=None, help="judge as a K-system (default: declared k)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive searches with known answers")
    p.add_argument("target", choices=["torus", "genus2", "gf2"])
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--bound", type=int, default=10, help="torus height bound")
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--cutoff", action="store_true", help="torus: stop at 2k+3 curves")
    p.add_argument("--certified", action="store_true", help="gf2: search without the 2g+1 cutoff")
    p.add_argument("--no-prefilter", action="store_true", help="genus2: check all 2^15 graphs by minor exclusion")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="known bounds on N(1,g,n)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundary", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("export-dot", help="write G(X) or G_odd(X) as Graphviz DOT")
    p.add_argument("path")
    p.add_argument("--flavor", choices=["all", "odd"], default="all")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error at {exc.location}: {exc.reason}", file=sys.stderr)
        return USAGE
    except (CurveSysError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
