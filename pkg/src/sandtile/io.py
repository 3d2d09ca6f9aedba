"""JSON readers/writers and exact rational parsing."""

import json
from fractions import Fraction

from .graphs import Graph
from .srm import StandardRepMatrix


class ParseError(ValueError):
    """Malformed input file or value."""


def parse_rational(text):
    text = str(text).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {text!r}") from None


def parse_vector(text):
    """Comma-separated exact rationals, e.g. ``"1,-1/2,3"``."""
    parts = [p for p in str(text).replace(" ", "").split(",") if p != ""]
    if not parts:
        raise ParseError("empty vector")
    return [parse_rational(p) for p in parts]


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _loads(text, source):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{what} must be an integer, got {v!r}")
    return v


def matrix_from_json(obj):
    if not isinstance(obj, dict) or not {"r", "n", "M"} <= obj.keys():
        raise ParseError('matrix JSON needs keys "r", "n" and "M"')
    r, n = _int(obj["r"], "r"), _int(obj["n"], "n")
    M = obj["M"]
    if not isinstance(M, list) or not all(isinstance(row, list) for row in M):
        raise ParseError('"M" must be a list of rows')
    M = [[_int(v, "M entry") for v in row] for row in M]
    if n == r and not M:
        M = [[] for _ in range(r)]
    try:
        return StandardRepMatrix(r, n, tuple(map(tuple, M)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_matrix(path):
    with open(path) as fh:
        return matrix_from_json(_loads(fh.read(), path))


def graph_from_json(obj):
    if not isinstance(obj, dict) or not {"vertices", "edges"} <= obj.keys():
        raise ParseError('graph JSON needs keys "vertices" and "edges"')
    nv = _int(obj["vertices"], "vertices")
    edges = obj["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise ParseError('"edges" must be a list of [tail, head] pairs')
    edges = [(_int(a, "vertex"), _int(b, "vertex")) for a, b in edges]
    tree = obj.get("tree")
    if tree is not None:
        if not isinstance(tree, list):
            raise ParseError('"tree" must be a list of edge indices')
        tree = [_int(e, "edge index") for e in tree]
    return Graph(nv, tuple(edges)), tree


def load_graph(path):
    with open(path) as fh:
        return graph_from_json(_loads(fh.read(), path))


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"
