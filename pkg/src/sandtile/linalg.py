"""Exact integer and rational linear algebra.

Matrices are plain row-major lists of lists holding ``int`` or
``fractions.Fraction`` entries.  Nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd


class DimensionError(ValueError):
    """Raised when matrix/vector shapes do not fit together."""


class SingularMatrixError(ArithmeticError):
    """Raised when a linear system has no unique solution."""


def shape(A):
    rows = len(A)
    cols = len(A[0]) if rows else 0
    for row in A:
        if len(row) != cols:
            raise DimensionError("ragged matrix")
    return rows, cols


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise DimensionError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    Bt = transpose(B) if rb else [[] for _ in range(cb)]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, x):
    _, cols = shape(A)
    if cols != len(x):
        raise DimensionError(f"matrix has {cols} columns, vector has length {len(x)}")
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def columns(A, idx):
    """Submatrix made of the columns ``idx`` (0-based) of ``A``."""
    return [[row[j] for j in idx] for row in A]


def det(A):
    """Signed determinant of a square integer matrix (Bareiss elimination).

    Every intermediate value is itself a minor of ``A``, so the division
    at each step is exact and no rationals appear.
    """
    n, m = shape(A)
    if n != m:
        raise DimensionError(f"det needs a square matrix, got {n}x{m}")
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def solve(A, b):
    """Exact solution of ``A x = b`` for square invertible ``A``.

    Returns a list of ``Fraction``.
    """
    n, m = shape(A)
    if n != m:
        raise DimensionError(f"solve needs a square matrix, got {n}x{m}")
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    M = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        M[k] = [v * inv for v in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [a - f * c for a, c in zip(M[i], M[k])]
    return [row[n] for row in M]


def rank(A):
    """Rank over the rationals."""
    if not A:
        return 0
    rows, cols = shape(A)
    M = [[Fraction(v) for v in row] for row in A]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * p for a, p in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def _xgcd(a, b):
    # returns (g, x, y) with a*x + b*y = g >= 0
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_row(A):
    """Row-style Hermite normal form of the lattice spanned by the rows of A.

    The result is in echelon form with strictly positive pivots, every
    entry above a pivot reduced into ``[0, pivot)``, and zero rows dropped.
    """
    if not A:
        return []
    rows, cols = shape(A)
    H = [list(map(int, row)) for row in A]
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        # fold every row below r into row r at column c using unimodular 2x2 steps
        for i in range(r + 1, rows):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, x, y = _xgcd(a, b)
            ua, ub = a // g, b // g
            top = [x * p + y * q for p, q in zip(H[r], H[i])]
            bot = [-ub * p + ua * q for p, q in zip(H[r], H[i])]
            H[r], H[i] = top, bot
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-v for v in H[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [u - q * v for u, v in zip(H[i], H[r])]
        pivots.append(c)
        r += 1
    return H[:r]


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries; first nonzero made positive."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return [0] * len(v)
    out = [int(x) // g for x in v]
    lead = next(x for x in out if x != 0)
    return [-x for x in out] if lead < 0 else out
