"""Central hyperplane arrangements spanned by matrix columns, and chamber signatures."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import det, primitive, rank
from .srm import dual_matrix
from .tiling import NotShiftingDirectionError, validate_shifting


@dataclass(frozen=True)
class CentralArrangement:
    ambient_dim: int
    normals: tuple  # primitive integer normals, first nonzero entry positive, sorted


@dataclass(frozen=True)
class ChamberSignature:
    signs: tuple  # +1 / -1 per normal

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


class OnHyperplaneError(NotShiftingDirectionError):
    def __init__(self, normal):
        super().__init__(f"vector lies on the hyperplane with normal {list(normal)}")
        self.normal = normal


def _normal(vectors, k):
    # generalised cross product of k-1 independent vectors in R^k
    rows = [list(v) for v in vectors]
    out = []
    for j in range(k):
        minor = [row[:j] + row[j + 1 :] for row in rows]
        out.append((-1) ** j * det(minor))
    return tuple(primitive(out))


def arrangement(columns, k):
    """Hyperplanes spanned by rank-(k-1) subsets of ``columns`` (vectors in R^k).

    Every rank-(k-1) subset spans the same hyperplane as an independent
    (k-1)-subset of it, so those are the only subsets visited.  With k = 1
    the empty set gives the origin, whose normal is ``(1,)``.
    """
    if k == 0:
        return CentralArrangement(0, ())
    if k == 1:
        return CentralArrangement(1, ((1,),))
    cols = [tuple(int(x) for x in c) for c in columns]
    normals = set()
    for S in combinations(range(len(cols)), k - 1):
        vecs = [cols[i] for i in S]
        if rank(vecs) != k - 1:
            continue
        normals.add(_normal(vecs, k))
    return CentralArrangement(k, tuple(sorted(normals)))


def signature(v, A):
    signs = []
    for nrm in A.normals:
        d = sum(Fraction(x) * y for x, y in zip(v, nrm))
        if d == 0:
            raise OnHyperplaneError(nrm)
        signs.append(1 if d > 0 else -1)
    return ChamberSignature(tuple(signs))


def arrangements(D):
    """``(H(D), H(D̂))``."""
    Dh = dual_matrix(D)
    colsD = [tuple(row[j] for row in D.D) for j in range(D.n)]
    colsDh = [tuple(row[j] for row in Dh) for j in range(D.n)] if D.k else []
    return arrangement(colsD, D.r), arrangement(colsDh, D.k)


def signatures(D, vec):
    """Chamber signatures of the two blocks of ``vec``."""
    sv = validate_shifting(D, vec)
    HD, HDh = arrangements(D)
    return signature(sv.w, HD), signature(sv.what, HDh)


def shifting_equivalent(D, vec, vec2):
    """Same chamber of H(D) for the first blocks and of H(D̂) for the last blocks."""
    return signatures(D, vec) == signatures(D, vec2)
