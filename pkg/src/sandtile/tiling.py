"""Parallelepipeds P1/P2/P, the tile T(D), shifting vectors and the multijection.

A shifting direction turns each closed parallelepiped into a half-open one:
a point ``z`` is pushed into the region by ``z + eps*w`` exactly when, for
every generator, its coefficient lies in ``[0, 1)`` (direction coefficient
positive) or ``(0, 1]`` (direction coefficient negative).  We never
compute with ``eps``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor, gcd

import numpy as np

from . import _kernels
from .linalg import det, matmul, matvec, solve, transpose
from .sandpile import SandpileLattice
from .srm import Basis, dual_matrix, enumerate_bases, full_matrix

CLOSED_BELOW = "closed-below"  # coefficient in [0, 1)
CLOSED_ABOVE = "closed-above"  # coefficient in (0, 1]


class NotShiftingDirectionError(ValueError):
    """A direction lies in the span of a facet of some parallelepiped."""


class ShiftingVectorError(NotShiftingDirectionError):
    def __init__(self, basis, part, position, message):
        super().__init__(message)
        self.basis = basis
        self.part = part
        self.position = position


class InvariantViolation(AssertionError):
    """Internal consistency failure; indicates a bug, never bad input."""


@dataclass(frozen=True)
class OrientedParallelepiped:
    generators: tuple  # tuple of column tuples, each of length dim
    anchor: tuple
    orientation: tuple = None  # per-generator CLOSED_BELOW / CLOSED_ABOVE, or None

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "anchor", tuple(self.anchor))
        if len(gens) != len(self.anchor) or any(len(g) != len(self.anchor) for g in gens):
            raise ValueError("need dim generators of length dim")
        if gens and det(self.matrix()) == 0:
            raise ValueError("generators are linearly dependent")

    @property
    def dim(self):
        return len(self.anchor)

    def matrix(self):
        """Generators as the columns of a square matrix."""
        return transpose([list(g) for g in self.generators]) if self.generators else []

    def volume(self):
        return abs(det(self.matrix()))

    def coefficients(self, p):
        d = [Fraction(a) - Fraction(b) for a, b in zip(p, self.anchor)]
        if self.dim == 0:
            return []
        return solve(self.matrix(), d)

    def contains_closed(self, p):
        return all(0 <= c <= 1 for c in self.coefficients(p))

    def contains(self, p):
        """Half-open membership according to the orientation."""
        if self.orientation is None:
            raise ValueError("orientation not set")
        for c, o in zip(self.coefficients(p), self.orientation):
            if o == CLOSED_BELOW and not (0 <= c < 1):
                return False
            if o == CLOSED_ABOVE and not (0 < c <= 1):
                return False
        return True

    def vertices(self):
        """All 2^dim vertices, in binary-counting order of the generator subset."""
        out = []
        for bits in product((0, 1), repeat=self.dim):
            v = list(self.anchor)
            for b, g in zip(bits, self.generators):
                if b:
                    v = [x + y for x, y in zip(v, g)]
            out.append(tuple(v))
        return out

    def translated(self, shift):
        return OrientedParallelepiped(
            self.generators, tuple(a + s for a, s in zip(self.anchor, shift)), self.orientation
        )


def _cols(A, idx):
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in idx)


def p1(D, B):
    """Parallelepiped of the ``B`` columns of D, anchored at the origin."""
    return OrientedParallelepiped(_cols(D.D, B.zero_based()), (0,) * D.r)


def p2(D, B):
    """Parallelepiped of the dual-matrix columns outside ``B``."""
    comp = [j - 1 for j in B.complement(D.n)]
    return OrientedParallelepiped(_cols(dual_matrix(D), comp), (0,) * D.k)


def p_full(D, B):
    """``P(B)`` from the full matrix with the off-block of each column masked."""
    F = full_matrix(D)
    inB = set(B.zero_based())
    gens = []
    for j in range(D.n):
        col = [F[i][j] for i in range(D.n)]
        if j in inB:
            col[D.r :] = [0] * D.k
        else:
            col[: D.r] = [0] * D.r
        gens.append(tuple(col))
    return OrientedParallelepiped(tuple(gens), (0,) * D.n)


def orient(region, direction):
    """Set the half-open orientation that ``direction`` induces on ``region``."""
    if region.dim == 0:
        return OrientedParallelepiped((), (), ())
    b = solve(region.matrix(), [Fraction(x) for x in direction])
    for i, bi in enumerate(b):
        if bi == 0:
            raise NotShiftingDirectionError(
                f"direction lies in the span of the facet opposite generator {i + 1}"
            )
    orientation = tuple(CLOSED_BELOW if bi > 0 else CLOSED_ABOVE for bi in b)
    return OrientedParallelepiped(region.generators, region.anchor, orientation)


def adjugate(G):
    k = len(G)
    if k == 1:
        return [[1]]
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:i] + row[i + 1 :] for t, row in enumerate(G) if t != j]
            adj[i][j] = (-1) ** (i + j) * det(minor)
    return adj


def integer_points(region):
    """Integer points of an oriented parallelepiped, in lexicographic order.

    The anchor must be integral.  Scans the vertex bounding box and tests
    each point exactly; the result always has ``volume()`` points.
    """
    if region.orientation is None:
        raise ValueError("orientation not set")
    if region.dim == 0:
        return [()]
    anchor = [int(a) for a in region.anchor]
    if any(a != b for a, b in zip(anchor, region.anchor)):
        raise ValueError("integer_points needs an integral anchor")
    G = region.matrix()
    d = det(G)
    s = 1 if d > 0 else -1
    absdet = abs(d)
    adj = [[s * x for x in row] for row in adjugate(G)]
    lo = [a + sum(min(0, x) for x in row) for a, row in zip(anchor, G)]
    hi = [a + sum(max(0, x) for x in row) for a, row in zip(anchor, G)]
    closed_below = [o == CLOSED_BELOW for o in region.orientation]

    span = max(h - l for l, h in zip(lo, hi)) + max(abs(x) for x in anchor + lo + hi)
    bound = max(abs(x) for row in adj for x in row) * span * region.dim
    if _kernels.fits_int64(bound):
        pts, found = _kernels.box_points(adj, absdet, closed_below, anchor, lo, hi)
        points = [tuple(int(x) for x in row) for row in pts]
    else:
        points = []
        for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            diff = [x - a for x, a in zip(p, anchor)]
            u = matvec(adj, diff)
            if all(
                (0 <= ui < absdet) if cb else (0 < ui <= absdet)
                for ui, cb in zip(u, closed_below)
            ):
                points.append(p)
        found = len(points)
    if found != absdet:
        raise InvariantViolation(f"found {found} integer points, expected {absdet}")
    return points


def _parse_rational(x):
    return Fraction(x) if not isinstance(x, str) else Fraction(x.strip())


@dataclass(frozen=True)
class ShiftingVector:
    w: tuple
    what: tuple

    @property
    def full(self):
        return self.w + self.what

    def to_json(self):
        return [str(x) for x in self.full]


def validate_shifting(D, vec, table=None):
    """Check ``vec`` (length n) against every facet span; return a ShiftingVector."""
    vec = [_parse_rational(x) for x in vec]
    if len(vec) != D.n:
        raise ValueError(f"shifting vector must have length {D.n}, got {len(vec)}")
    w, what = tuple(vec[: D.r]), tuple(vec[D.r :])
    if table is None:
        table = enumerate_bases(D)
    for B, _ in table:
        for part, region, direction in (("w", p1(D, B), w), ("what", p2(D, B), what)):
            if region.dim == 0:
                continue
            b = solve(region.matrix(), list(direction))
            for i, bi in enumerate(b):
                if bi == 0:
                    if part == "w":
                        facet = [c for t, c in enumerate(B.indices) if t != i]
                        where = f"the span of columns {facet} of D"
                    else:
                        comp = B.complement(D.n)
                        facet = [c for t, c in enumerate(comp) if t != i]
                        where = f"the span of columns {facet} of the dual matrix"
                    raise ShiftingVectorError(
                        B, part, i,
                        f"not a shifting vector: the {'first' if part == 'w' else 'last'} "
                        f"block lies in {where} (a facet of the parallelepiped of basis {B})",
                    )
    return ShiftingVector(w, what)


def _reduce_points(L, pts):
    """Canonical residues of many points at once, as a list of tuples."""
    top = max((abs(x) for p in pts for x in p), default=0)
    hmax = max(abs(x) for row in L.hnf for x in row)
    if not _kernels.fits_int64((top + hmax) * hmax * (L.n + 1) * 2):
        return [L.canonical(p).residue for p in pts]
    H = np.asarray(L.hnf, dtype=np.int64)
    V = np.array(pts, dtype=np.int64).reshape(len(pts), L.n)
    for i in range(L.n):
        q = V[:, i] // H[i, i]
        V -= q[:, None] * H[i][None, :]
    return [tuple(int(x) for x in row) for row in V]


class Multijection:
    """The map from sandpile classes to bases induced by one shifting vector."""

    def __init__(self, D, shifting, fibers, lattice, table, class_index):
        self.D = D
        self.shifting = shifting
        self.fibers = fibers  # {Basis: sorted list of point tuples}
        self.lattice = lattice
        self.table = table
        self.class_index = class_index  # {residue tuple: (Basis, point)}

    def apply(self, z):
        """Basis and the unique representative of the class of ``z``."""
        return self.class_index[self.lattice.canonical(z).residue]

    def basis_of(self, z):
        return self.apply(z)[0]

    def representatives(self):
        return sorted(p for pts in self.fibers.values() for p in pts)

    def same_map(self, other):
        """True iff both send every class to the same basis."""
        if self.class_index.keys() != other.class_index.keys():
            return False
        return all(self.class_index[k][0] == other.class_index[k][0] for k in self.class_index)

    def same_representatives(self, other):
        return {B: set(v) for B, v in self.fibers.items()} == {
            B: set(v) for B, v in other.fibers.items()
        }

    def to_json(self):
        return {
            "shifting": self.shifting.to_json(),
            "fibers": [
                {
                    "basis": list(B.indices),
                    "multiplicity": self.table.multiplicity(B),
                    "points": [list(p) for p in self.fibers[B]],
                }
                for B in sorted(self.fibers)
            ],
            "group_order": self.lattice.order(),
        }


def associated_points(D, B, shifting):
    """Integer points of Z^n pushed into P(B) by the shifting vector, lexicographic."""
    first = integer_points(orient(p1(D, B), shifting.w))
    last = integer_points(orient(p2(D, B), shifting.what))
    return [a + b for a in first for b in last]


def w_representatives(D, vec, lattice=None, table=None):
    """Build the multijection for shifting vector ``vec``."""
    if table is None:
        table = enumerate_bases(D)
    if lattice is None:
        lattice = SandpileLattice(D)
    shifting = vec if isinstance(vec, ShiftingVector) else validate_shifting(D, vec, table)
    fibers = {}
    for B, m in table:
        pts = associated_points(D, B, shifting)
        if len(pts) != m * m:
            raise InvariantViolation(f"basis {B}: {len(pts)} representatives, expected {m * m}")
        fibers[B] = pts
    allpts = [p for pts in fibers.values() for p in pts]
    if len(allpts) != lattice.order():
        raise InvariantViolation(f"{len(allpts)} representatives for a group of order {lattice.order()}")
    owners = [B for B, pts in fibers.items() for _ in pts]
    class_index = {}
    for res, B, p in zip(_reduce_points(lattice, allpts), owners, allpts):
        if res in class_index:
            raise InvariantViolation(f"representatives {class_index[res][1]} and {p} share a class")
        class_index[res] = (B, p)
    return Multijection(D, shifting, fibers, lattice, table, class_index)


def apply(f, z):
    return f.apply(z)


@dataclass(frozen=True)
class CornerPoint:
    point: tuple
    basis: Basis
    zero_one: tuple


def _split_coefficients(D, B, shifting):
    a = solve(p1(D, B).matrix(), list(shifting.w)) if D.r else []
    ah = solve(p2(D, B).matrix(), list(shifting.what)) if D.k else []
    return a, ah


def corner_candidates(D, B, shifting):
    """The two corner sums: over negative and over positive direction coefficients.

    Only the negative-coefficient sum is pushed into P(B) by the shifting
    vector (a generator with positive coefficient must keep coefficient 0
    at the corner).  The positive one is the corner for the opposite
    direction.  Both are returned so callers can check this.
    """
    a, ah = _split_coefficients(D, B, shifting)
    g1 = p1(D, B).generators
    g2 = p2(D, B).generators

    def corner(sign):
        v = [0] * D.r
        for ai, g in zip(a, g1):
            if (ai > 0) == (sign > 0):
                v = [x + y for x, y in zip(v, g)]
        vh = [0] * D.k
        for ai, g in zip(ah, g2):
            if (ai > 0) == (sign > 0):
                vh = [x + y for x, y in zip(vh, g)]
        return tuple(v + vh)

    return corner(-1), corner(+1)


def corner_point(D, B, vec):
    """The unique corner of P(B) associated with the shifting vector, plus its {0,1} form."""
    shifting = vec if isinstance(vec, ShiftingVector) else validate_shifting(D, vec)
    a, ah = _split_coefficients(D, B, shifting)
    point, _ = corner_candidates(D, B, shifting)
    z = [0] * D.n
    for i, ai in zip(B.indices, a):
        z[i - 1] = 1 if ai < 0 else 0
    for i, ai in zip(B.complement(D.n), ah):
        z[i - 1] = 1 if ai < 0 else 0
    return CornerPoint(point, B, tuple(z))


def p1_corners(D, B):
    """All 2^r corner points of P1(B) (its vertices), all integral."""
    return p1(D, B).vertices()


def tile_membership(D, p, table=None):
    """Bases whose closed P(B) contains the rational point ``p``."""
    if table is None:
        table = enumerate_bases(D)
    return [B for B, _ in table if p_full(D, B).contains_closed(p)]


def locate_in_tile(D, p, table=None):
    """Find a lattice translate of T(D) containing ``p``.

    Returns ``(basis, x)`` with ``p - 𝐃^T x`` in the closed P(basis), or
    ``None`` if no translate contains ``p`` (which would contradict the
    covering property).
    """
    if table is None:
        table = enumerate_bases(D)
    FT = transpose(full_matrix(D))
    p = [Fraction(v) for v in p]
    x0 = [floor(c) for c in solve(FT, p)]
    p0 = [a - b for a, b in zip(p, matvec(FT, x0))]
    # scale to integers: q = L p0 is integral
    L = 1
    for v in p0:
        L = L * v.denominator // gcd(L, v.denominator)
    q = [int(v * L) for v in p0]
    for B, _ in table:
        G = p_full(D, B).matrix()
        d = det(G)
        s = 1 if d > 0 else -1
        adj = [[s * x for x in row] for row in adjugate(G)]
        # coefficients of q - L FT y are (a - K y) / (L |d|); need them in [0, 1]
        a = matvec(adj, q)
        K = [[L * x for x in row] for row in matmul(adj, FT)]
        top = L * abs(d)
        images = [solve(FT, [u - w for u, w in zip(p0, v)]) for v in p_full(D, B).vertices()]
        lo = [floor(min(col)) for col in zip(*images)]
        hi = [-floor(-max(col)) for col in zip(*images)]
        for y in product(*(range(u, w + 1) for u, w in zip(lo, hi))):
            if all(0 <= ai - sum(k * yj for k, yj in zip(row, y)) <= top for ai, row in zip(a, K)):
                return B, [u + w for u, w in zip(x0, y)]
    return None
