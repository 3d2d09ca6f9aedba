"""Deterministic SVG output for two-dimensional tiles."""

from itertools import product

from .lower import DOUBLE_PRIME, PRIME, build_lower_tile, piece_polygon
from .linalg import matvec, transpose
from .srm import enumerate_bases, full_matrix
from .tiling import p_full

PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)
SCALE = 20
FULL = "full"


class UnsupportedDimensionError(ValueError):
    pass


def tile_pieces(D, vec, kind, table=None):
    """``(pieces, translation_rows)`` for a 2-D tile.

    ``pieces`` is a list of ``(Basis, polygon)``; translates of the tile by
    integer combinations of ``translation_rows`` tile the plane.
    """
    if table is None:
        table = enumerate_bases(D)
    if kind == FULL:
        if D.n != 2:
            raise UnsupportedDimensionError(f"T(D) lives in R^{D.n}; only R^2 can be drawn")
        pieces = [(B, piece_polygon(p_full(D, B))) for B, _ in table]
        return pieces, full_matrix(D)
    if kind not in (PRIME, DOUBLE_PRIME):
        raise ValueError(f"unknown tile kind {kind!r}")
    dim = D.r if kind == PRIME else D.k
    if dim != 2:
        raise UnsupportedDimensionError(f"the {kind} tile lives in R^{dim}; only R^2 can be drawn")
    tile = build_lower_tile(D, vec, kind, table)
    return [(B, piece_polygon(P)) for B, P in tile.pieces], [list(r) for r in tile.translation_lattice]


def render(pieces, rank, translations=((0, 0),)):
    """SVG text; one polygon per (translate, piece), coloured by basis rank."""
    polys = []
    for t_index, t in enumerate(translations):
        for B, poly in pieces:
            pts = [(x + t[0], y + t[1]) for x, y in poly]
            polys.append((B, t_index, pts))
    polys.sort(key=lambda q: (q[0], q[1]))
    xs = [x for _, _, pts in polys for x, _ in pts]
    ys = [y for _, _, pts in polys for _, y in pts]
    minx, maxx = min(xs) - 1, max(xs) + 1
    miny, maxy = min(ys) - 1, max(ys) + 1
    width, height = (maxx - minx) * SCALE, (maxy - miny) * SCALE
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{minx * SCALE} {-maxy * SCALE} {width} {height}">',
    ]
    for B, t_index, pts in polys:
        coords = " ".join(f"{x * SCALE},{-y * SCALE}" for x, y in pts)
        color = PALETTE[rank[B] % len(PALETTE)]
        out.append(
            f'<polygon points="{coords}" fill="{color}" fill-opacity="0.8" stroke="#000000" '
            f'stroke-width="1" data-basis="{",".join(map(str, B.indices))}" '
            f'data-translate="{t_index}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def grid_translations(rows):
    """The 3x3 block of lattice translates sum(c_i * row_i), c in {-1,0,1}^2."""
    cols = transpose(rows)
    return [tuple(matvec(cols, list(c))) for c in product((-1, 0, 1), repeat=2)]


def tile_svg(D, vec, kind, grid=False, table=None):
    if table is None:
        table = enumerate_bases(D)
    pieces, rows = tile_pieces(D, vec, kind, table)
    rank = {B: i for i, (B, _) in enumerate(table)}
    translations = grid_translations(rows) if grid else [(0, 0)]
    return render(pieces, rank, translations)
