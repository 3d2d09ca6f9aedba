"""Lower-dimensional tiles T'(D) in R^r and T''(D) in R^(n-r).

``project_first`` and ``project_last`` move a representative into the
first or last coordinate block without changing its sandpile class.  The
tiles are built from translated copies of P1(B) (resp. P2(B)); their
integer representatives coincide with the projected fibers of the full
multijection.
"""

from dataclasses import dataclass

from .linalg import is_integral, solve
from .srm import dual_matrix, enumerate_bases, gram
from .tiling import (
    ShiftingVector,
    integer_points,
    orient,
    p1,
    p2,
    validate_shifting,
)

PRIME = "prime"
DOUBLE_PRIME = "double-prime"


def _M_times(D, zhat):
    return [sum(D.M[i][j] * zhat[j] for j in range(D.k)) for i in range(D.r)]


def _Mt_times(D, z):
    return [sum(D.M[i][j] * z[i] for i in range(D.r)) for j in range(D.k)]


def project_first(D, z):
    """Equivalent vector ``(z_top + M z_bottom, 0)``."""
    top, bottom = list(z[: D.r]), list(z[D.r :])
    return tuple(a + b for a, b in zip(top, _M_times(D, bottom))) + (0,) * D.k


def project_last(D, z):
    """Equivalent vector ``(0, z_bottom - M^T z_top)``."""
    top, bottom = list(z[: D.r]), list(z[D.r :])
    return (0,) * D.r + tuple(a - b for a, b in zip(bottom, _Mt_times(D, top)))


def alt_bases(D):
    """The block-triangular integral bases of the sandpile lattice.

    ``D' = (I M; 0 D̂D̂^T)`` and ``D'' = (DD^T 0; -M^T I)``.
    """
    r, k = D.r, D.k
    Dh = dual_matrix(D)
    DhDhT = gram(Dh)
    DDT = gram(D.D)
    Dp = [list(row) for row in D.D] + [[0] * r + list(row) for row in DhDhT]
    Dpp = [list(row) + [0] * k for row in DDT] + [
        [-D.M[i][j] for i in range(r)] + [int(j == l) for l in range(k)] for j in range(k)
    ]
    return Dp, Dpp


@dataclass(frozen=True)
class LowerTile:
    kind: str
    pieces: tuple  # ((Basis, OrientedParallelepiped), ...) sorted by (basis, anchor)
    translation_lattice: tuple  # rows of DD^T or D̂D̂^T

    @property
    def dim(self):
        return self.pieces[0][1].dim if self.pieces else 0

    def pieces_for(self, B):
        return [P for b, P in self.pieces if b == B]


def build_lower_tile(D, vec, kind, table=None):
    """Assemble T'(D) (``kind='prime'``) or T''(D) (``kind='double-prime'``).

    Prime pieces are P1(B) + M zhat for each zhat pushed into P2(B) by the
    last block of the shifting vector; double-prime pieces are
    P2(B) - M^T z for each z pushed into P1(B) by the first block.
    """
    if table is None:
        table = enumerate_bases(D)
    sv = vec if isinstance(vec, ShiftingVector) else validate_shifting(D, vec, table)
    pieces = []
    if kind == PRIME:
        for B, _ in table:
            base = p1(D, B)
            for zhat in integer_points(orient(p2(D, B), sv.what)):
                pieces.append((B, base.translated(_M_times(D, zhat))))
        lattice = gram(D.D)
    elif kind == DOUBLE_PRIME:
        for B, _ in table:
            base = p2(D, B)
            for z in integer_points(orient(p1(D, B), sv.w)):
                pieces.append((B, base.translated([-x for x in _Mt_times(D, z)])))
        lattice = gram(dual_matrix(D))
    else:
        raise ValueError(f"unknown tile kind {kind!r}")
    pieces.sort(key=lambda t: (t[0], t[1].anchor))
    return LowerTile(kind, tuple(pieces), tuple(tuple(row) for row in lattice))


def lower_representatives(D, tile, vec):
    """Integer points pushed into each piece, zero-padded to length n.

    Returns ``{Basis: sorted list of tuples}``.
    """
    sv = vec if isinstance(vec, ShiftingVector) else validate_shifting(D, vec)
    direction = sv.w if tile.kind == PRIME else sv.what
    out = {}
    for B, piece in tile.pieces:
        pts = integer_points(orient(piece, direction))
        if tile.kind == PRIME:
            padded = [p + (0,) * D.k for p in pts]
        else:
            padded = [(0,) * D.r + p for p in pts]
        out.setdefault(B, []).extend(padded)
    return {B: sorted(v) for B, v in out.items()}


def lower_equivalent(D, kind, u, v):
    """Equivalence of two block-padded vectors via the smaller Gram lattice.

    Two vectors supported on one block are equivalent iff their difference
    on that block lies in the row lattice of DD^T (prime) or D̂D̂^T.
    """
    if kind == PRIME:
        G, a, b = gram(D.D), u[: D.r], v[: D.r]
    else:
        G, a, b = gram(dual_matrix(D)), u[D.r :], v[D.r :]
    if not G:
        return True
    return is_integral(solve(G, [x - y for x, y in zip(a, b)]))


def piece_polygon(piece):
    """Vertices of a 2-D piece in boundary order."""
    if piece.dim != 2:
        raise ValueError("only 2-dimensional pieces have polygons")
    a = piece.anchor
    g1, g2 = piece.generators
    return [
        tuple(a),
        (a[0] + g1[0], a[1] + g1[1]),
        (a[0] + g1[0] + g2[0], a[1] + g1[1] + g2[1]),
        (a[0] + g2[0], a[1] + g2[1]),
    ]

