"""The sandpile group ``Z^n / im_Z(𝐃^T)``: class identity and enumeration."""

from dataclasses import dataclass
from itertools import product

from .linalg import DimensionError, hnf_row, is_integral, solve, transpose
from .srm import full_matrix

DEFAULT_BUDGET = 10 ** 6


class EnumerationBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class SandpileClass:
    residue: tuple

    def __str__(self):
        return "(" + ",".join(map(str, self.residue)) + ")"


class SandpileLattice:
    """Row lattice of the full matrix, kept in Hermite normal form.

    The HNF is upper triangular with positive diagonal, so reducing a vector
    row by row pushes coordinate ``i`` into ``[0, h_ii)`` and leaves earlier
    coordinates alone.  That reduced vector is the canonical residue.
    """

    def __init__(self, D):
        self.source = D
        self.full = full_matrix(D)
        self.hnf = hnf_row(self.full)
        n = D.n
        if len(self.hnf) != n:
            raise ArithmeticError("full matrix is singular")  # cannot happen: det >= 1
        self.pivots = tuple(self.hnf[i][i] for i in range(n))
        self._fullT = transpose(self.full)

    @property
    def n(self):
        return self.source.n

    def order(self):
        out = 1
        for p in self.pivots:
            out *= p
        return out

    def _check(self, z):
        if len(z) != self.n:
            raise DimensionError(f"expected a vector of length {self.n}, got {len(z)}")

    def canonical(self, z):
        self._check(z)
        v = [int(x) for x in z]
        for i, row in enumerate(self.hnf):
            q = v[i] // row[i]
            if q:
                for j in range(i, self.n):
                    v[j] -= q * row[j]
        return SandpileClass(tuple(v))

    def equivalent(self, z, zp):
        """True iff ``z - z'`` is an integer combination of rows of 𝐃."""
        self._check(z)
        self._check(zp)
        x = solve(self._fullT, [a - b for a, b in zip(z, zp)])
        return is_integral(x)

    def enumerate_classes(self, budget=DEFAULT_BUDGET):
        if self.order() > budget:
            raise EnumerationBudgetError(
                f"group order {self.order()} exceeds enumeration budget {budget}"
            )
        return [SandpileClass(t) for t in product(*(range(p) for p in self.pivots))]


def group_order(L):
    return L.order()


def equivalent(L, z, zp):
    return L.equivalent(z, zp)


def canonical(L, z):
    return L.canonical(z)


def enumerate_classes(L, budget=DEFAULT_BUDGET):
    return L.enumerate_classes(budget)
