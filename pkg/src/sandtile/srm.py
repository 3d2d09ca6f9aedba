"""Standard representative matrices ``D = (I_r | M)`` and their bases."""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import _kernels
from .linalg import det, matmul, transpose


@dataclass(frozen=True)
class StandardRepMatrix:
    """The data ``(r, n, M)``; ``D``, its dual and the full matrix are derived.

    ``M`` is stored as a tuple of tuples so instances are hashable.
    """

    r: int
    n: int
    M: tuple = field(default=())

    def __post_init__(self):
        M = tuple(tuple(int(v) for v in row) for row in self.M)
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.n < self.r:
            raise ValueError("need n >= r")
        if self.n == self.r:
            M = tuple(() for _ in range(self.r))
        if len(M) != self.r or any(len(row) != self.n - self.r for row in M):
            raise ValueError(f"M must be {self.r}x{self.n - self.r}")
        object.__setattr__(self, "M", M)

    @classmethod
    def from_rows(cls, rows):
        """Build from the rows of ``D``; the leading block must be the identity."""
        r = len(rows)
        n = len(rows[0])
        for i, row in enumerate(rows):
            if list(row[:r]) != [int(i == j) for j in range(r)]:
                raise ValueError("matrix is not of the form (I_r | M)")
        return cls(r, n, tuple(tuple(row[r:]) for row in rows))

    @property
    def k(self):
        """Corank ``n - r``."""
        return self.n - self.r

    @property
    def D(self):
        return [[int(i == j) for j in range(self.r)] + list(self.M[i]) for i in range(self.r)]

    def to_json(self):
        return {"r": self.r, "n": self.n, "M": [list(row) for row in self.M]}


def dual_matrix(D):
    """``(-M^T | I_{n-r})``; an empty list when ``n == r``."""
    k = D.k
    return [[-D.M[i][j] for i in range(D.r)] + [int(j == l) for l in range(k)] for j in range(k)]


def full_matrix(D):
    return D.D + dual_matrix(D)


@dataclass(frozen=True, order=True)
class Basis:
    """Strictly increasing 1-based column indices."""

    indices: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"basis indices must be strictly increasing: {idx}")
        object.__setattr__(self, "indices", idx)

    def zero_based(self):
        return [i - 1 for i in self.indices]

    def complement(self, n):
        s = set(self.indices)
        return [i for i in range(1, n + 1) if i not in s]

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True)
class BasisTable:
    entries: tuple  # ((Basis, multiplicity), ...) in lexicographic order

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def bases(self):
        return [b for b, _ in self.entries]

    def multiplicity(self, B):
        if not isinstance(B, Basis):
            B = Basis(tuple(B))
        for b, m in self.entries:
            if b == B:
                return m
        raise KeyError(B)

    def as_dict(self):
        return {b.indices: m for b, m in self.entries}


def _column_minors(A, ncols, size):
    """Signed maximal minors of ``A`` over all ``size``-subsets of its columns."""
    combos = list(combinations(range(ncols), size))
    if not combos:
        return combos, []
    bound = 1
    for j in range(ncols):
        bound *= max(1, sum(row[j] * row[j] for row in A))
    # Hadamard: |minor|^2 <= bound, and Bareiss multiplies two minors per step
    if _kernels.fits_int64(bound):
        dets = _kernels.maximal_minors(A, np.array(combos)).tolist()
    else:
        dets = [det([[row[j] for j in c] for row in A]) for c in combos]
    return combos, dets


def enumerate_bases(D):
    """All ``r``-subsets of columns with nonzero determinant, with ``m(B) = |det|``."""
    combos, dets = _column_minors(D.D, D.n, D.r)
    entries = tuple(
        (Basis(tuple(j + 1 for j in c)), abs(int(d))) for c, d in zip(combos, dets) if d != 0
    )
    return BasisTable(entries)


def enumerate_dual_bases(D):
    """Bases of the dual matrix, keyed by 1-based column indices."""
    Dh = dual_matrix(D)
    if D.k == 0:
        return BasisTable(((Basis(()), 1),))
    combos, dets = _column_minors(Dh, D.n, D.k)
    entries = tuple(
        (Basis(tuple(j + 1 for j in c)), abs(int(d))) for c, d in zip(combos, dets) if d != 0
    )
    return BasisTable(entries)


@dataclass(frozen=True)
class MatrixTreeCheck:
    sum_squares: int
    det_full: int
    equal: bool


def matrix_tree_check(D, table=None):
    """Compare the sum of squared multiplicities against ``|det 𝐃|``."""
    if table is None:
        table = enumerate_bases(D)
    s = sum(m * m for _, m in table)
    d = abs(det(full_matrix(D)))
    return MatrixTreeCheck(s, d, s == d)


def gram(A):
    """``A A^T``."""
    return matmul(A, transpose(A)) if A else []
