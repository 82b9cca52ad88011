"""Command-line front end: classify, reduce, roll, develop, equipment, andreev.

Exit codes: 0 success, 1 domain error (including a failing Andreev verdict),
2 usage error.  Identical inputs produce byte-identical output; every
iteration order is canonicalized.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import andreev as andreev_mod
from . import svg as svg_mod
from .develop import (DevelopError, full_development, measure_polygon,
                      roll_onto_mirror, two_stage)
from .geomkernel import GeometryError, realize_simplex
from .reduction import equipment_of, reduce_mirror
from .rolling import component_of, rolling_scheme, unfold
from .scheme import SchemeError, classify, parse_scheme


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_scheme(path):
    return parse_scheme(_read(path))


def cmd_classify(args):
    matrix = _load_scheme(args.scheme)
    t = classify(matrix)
    if args.format == "json":
        _write(args, json.dumps({"type": str(t),
                                 "finite": t.finite,
                                 "factors": [str(type(t)(t.factors[i:i + 1]))
                                             for i in range(len(t.factors))]},
                                sort_keys=True, separators=(",", ":")) + "\n")
    else:
        _write(args, f"{t}\n")
    return 0


def cmd_reduce(args):
    matrix = _load_scheme(args.scheme)
    result = reduce_mirror(matrix, args.mirror - 1, check_table=args.check_table)
    if args.format == "json":
        _write(args, result.to_json() + "\n")
    else:
        line = str(result.result)
        if args.check_table:
            line += ", table: " + ("OK" if result.table_agrees else
                                   f"MISMATCH ({result.table_result})")
        _write(args, line + "\n")
    return 0


def cmd_roll(args):
    matrix = _load_scheme(args.scheme)
    comp = component_of(rolling_scheme(matrix), args.mirror - 1)
    tree = unfold(comp, args.mirror - 1, max_nodes=args.max_nodes)
    _write(args, tree.to_json() + "\n")
    return 0


def cmd_develop(args):
    matrix = _load_scheme(args.scheme)
    chamber = realize_simplex(matrix)
    if args.two_stage:
        result = two_stage(chamber, facet1=args.mirror - 1,
                           max_tiles=args.max_tiles)
        df = result.second
    elif args.full:
        df = full_development(chamber, args.mirror - 1, max_tiles=args.max_tiles)
    else:
        df = roll_onto_mirror(chamber, args.mirror - 1, max_tiles=args.max_tiles)
    if args.format == "svg":
        if df.mirror.dim != 2:
            raise DevelopError("svg output needs a 2-dimensional development")
        _write(args, svg_mod.render_svg(df))
    elif args.measure:
        rows = measure_polygon(df)
        _write(args, json.dumps(
            {"sides": [{"length": float(f"{l:.12g}"), "angle": float(f"{a:.12g}")}
                       for l, a in rows]},
            sort_keys=True, separators=(",", ":")) + "\n")
    else:
        _write(args, df.to_json() + "\n")
    return 0


def cmd_equipment(args):
    matrix = _load_scheme(args.scheme)
    eq = equipment_of(matrix)
    if args.format == "json":
        _write(args, eq.to_json() + "\n")
    else:
        lines = []
        for subset, t in sorted(eq.strata.items(),
                                key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            gens = ",".join(str(i + 1) for i in sorted(subset))
            lines.append(f"{{{gens}}}: {t}")
        _write(args, "\n".join(lines) + "\n")
    return 0


def cmd_andreev(args):
    pm = andreev_mod.parse_map(_read(args.map))
    verdict = andreev_mod.check_all(pm)
    _write(args, verdict.to_json() + "\n")
    return 0 if verdict.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coxroll",
        description="Developments of Coxeter polyhedra by rolling along mirrors")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scheme=True):
        if scheme:
            p.add_argument("scheme", help="scheme file (rank N / i j m lines)")
        p.add_argument("--format", choices=("text", "json", "svg"),
                       default="text")
        p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("classify", help="Coxeter type of a scheme")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", help="mirror reduction at a generator")
    common(p)
    p.add_argument("--mirror", type=int, required=True,
                   help="1-based generator index")
    p.add_argument("--check-table", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("roll", help="combinatorial development tree (JSON)")
    common(p)
    p.add_argument("--mirror", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=5000)
    p.set_defaults(func=cmd_roll)

    p = sub.add_parser("develop", help="geometric development of a simplex")
    common(p)
    p.add_argument("--mirror", type=int, required=True)
    p.add_argument("--max-tiles", type=int, default=5000)
    p.add_argument("--full", action="store_true",
                   help="whole tiling (both rolling operations)")
    p.add_argument("--two-stage", action="store_true",
                   help="roll, re-chamber, roll again")
    p.add_argument("--measure", action="store_true",
                   help="emit side lengths and angles instead of tiles")
    p.set_defaults(func=cmd_develop)

    p = sub.add_parser("equipment", help="finite strata of a scheme")
    common(p)
    p.set_defaults(func=cmd_equipment)

    p = sub.add_parser("andreev", help="check Andreev's conditions for a map")
    p.add_argument("map", help="planar map file")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_andreev)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (SchemeError, GeometryError, andreev_mod.MapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
