"""Command line interface: ``sandtile <command> ...``.

Exit codes: 0 success, 2 validation error, 3 parse error.
Shifting vectors are comma-separated exact rationals; write negative
leading entries as ``--shift=-1,2,-2`` so they are not taken for flags.
"""

import argparse
import sys

from .chambers import signatures
from .graphs import GraphError, count_spanning_trees, graph_to_srm, spanning_tree
from .io import ParseError, dumps, load_graph, load_matrix, parse_vector
from .lower import DOUBLE_PRIME, PRIME, build_lower_tile, lower_representatives, project_first, project_last
from .sandpile import SandpileLattice
from .srm import enumerate_bases, matrix_tree_check
from .svg import FULL, UnsupportedDimensionError, tile_svg
from .tiling import NotShiftingDirectionError, corner_point, validate_shifting, w_representatives

EXIT_VALIDATION = 2
EXIT_PARSE = 3


def _bases_json(table):
    return [{"basis": list(B.indices), "multiplicity": m} for B, m in table]


def analyze_report(D):
    table = enumerate_bases(D)
    check = matrix_tree_check(D, table)
    return {
        "matrix": D.to_json(),
        "bases": _bases_json(table),
        "group_order": SandpileLattice(D).order(),
        "sum_squares": check.sum_squares,
        "det_full": check.det_full,
        "matrix_tree_check": check.equal,
    }


def reps_report(D, vec, project=None):
    f = w_representatives(D, vec)
    report = f.to_json()
    if project in ("first", "last"):
        proj = project_first if project == "first" else project_last
        for entry in report["fibers"]:
            entry["points"] = sorted([list(proj(D, p)) for p in entry["points"]])
        report["projection"] = project
    return report


def lower_report(D, vec, kind):
    table = enumerate_bases(D)
    sv = validate_shifting(D, vec, table)
    tile = build_lower_tile(D, sv, kind, table)
    reps = lower_representatives(D, tile, sv)
    return {
        "kind": kind,
        "shifting": sv.to_json(),
        "pieces": [
            {"basis": list(B.indices), "anchor": list(P.anchor), "generators": [list(g) for g in P.generators]}
            for B, P in tile.pieces
        ],
        "translation_lattice": [list(r) for r in tile.translation_lattice],
        "fibers": [
            {"basis": list(B.indices), "multiplicity": m, "points": [list(p) for p in reps.get(B, [])]}
            for B, m in table
        ],
        "group_order": SandpileLattice(D).order(),
    }


def chambers_report(D, vec, vec2):
    s1, s2 = signatures(D, vec), signatures(D, vec2)
    f, g = w_representatives(D, vec), w_representatives(D, vec2)
    return {
        "equivalent": s1 == s2,
        "signatures": [[str(s) for s in s1], [str(s) for s in s2]],
        "same_representatives": f.same_representatives(g),
        "same_multijection": f.same_map(g),
    }


def corners_report(D, vec):
    table = enumerate_bases(D)
    sv = validate_shifting(D, vec, table)
    L = SandpileLattice(D)
    out = []
    for B, _ in table:
        c = corner_point(D, B, sv)
        out.append(
            {
                "basis": list(B.indices),
                "corner": list(c.point),
                "zero_one": list(c.zero_one),
                "equivalent": L.equivalent(c.point, c.zero_one),
            }
        )
    return {"shifting": sv.to_json(), "corners": out}


def graph_report(G, tree, vec=None):
    T = spanning_tree(G, tree)
    D, T = graph_to_srm(G, T)
    report = {
        "tree": list(T.tree_edges),
        "permutation": list(T.permutation),
        "matrix": D.to_json(),
        "D": D.D,
    }
    report.update({k: v for k, v in analyze_report(D).items() if k != "matrix"})
    try:
        report["spanning_trees"] = count_spanning_trees(G)
    except ValueError:
        report["spanning_trees"] = None
    if vec is not None:
        report["reps"] = reps_report(D, vec)
    return report


def build_parser():
    ap = argparse.ArgumentParser(prog="sandtile", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help, source="matrix", shift=False, out=True):
        p = sub.add_parser(name, help=help)
        p.add_argument(source, help=f"{source} JSON file")
        if shift:
            p.add_argument("--shift", required=shift == "required", help="shifting vector, e.g. 1,1,1")
        if out:
            p.add_argument("--out", help="write here instead of stdout")
        return p

    add("analyze", "bases, multiplicities and group order")
    p = add("reps", "representatives of every sandpile class", shift="required")
    p.add_argument("--project", choices=("none", "first", "last"), default="none")
    p = add("lower", "lower-dimensional tile and its representatives", shift="required")
    p.add_argument("--kind", choices=(PRIME, DOUBLE_PRIME), default=PRIME)
    p = add("tile-svg", "draw a two-dimensional tile", shift="required")
    p.add_argument("--kind", choices=(PRIME, DOUBLE_PRIME, FULL), default=PRIME)
    p.add_argument("--grid", action="store_true", help="draw the 3x3 block of lattice translates")
    add("graph", "matrix of a graph and spanning tree", source="graph", shift="optional")
    p = add("chambers", "compare two shifting vectors", shift="required")
    p.add_argument("--other", required=True, help="second shifting vector")
    add("corners", "corner points and their {0,1} forms", shift="required")
    return ap


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(args):
    if args.command == "graph":
        G, tree = load_graph(args.graph)
        vec = parse_vector(args.shift) if args.shift else None
        return dumps(graph_report(G, tree, vec))
    D = load_matrix(args.matrix)
    if args.command == "analyze":
        return dumps(analyze_report(D))
    vec = parse_vector(args.shift)
    if args.command == "reps":
        return dumps(reps_report(D, vec, args.project))
    if args.command == "lower":
        return dumps(lower_report(D, vec, args.kind))
    if args.command == "tile-svg":
        validate_shifting(D, vec)
        return tile_svg(D, vec, args.kind, grid=args.grid)
    if args.command == "chambers":
        return dumps(chambers_report(D, vec, parse_vector(args.other)))
    if args.command == "corners":
        return dumps(corners_report(D, vec))
    raise AssertionError(args.command)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotShiftingDirectionError, UnsupportedDimensionError, GraphError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
