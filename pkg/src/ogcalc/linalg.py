"""Exact dense linear algebra over the rationals.

Small matrices only (the largest system in the package is 64x64), plain
Gaussian elimination with Fraction arithmetic.  Matrices are lists of lists.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import check_scalar


def _clean_matrix(mat):
    return [[Fraction(check_scalar(x)) for x in row] for row in mat]


def rref(mat):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    a = _clean_matrix(mat)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def kernel_basis(mat):
    """A basis of the right kernel, as a list of Fraction vectors."""
    if not mat:
        return []
    ncols = len(mat[0])
    a, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """Solve mat @ x = rhs for a square invertible system."""
    a = _clean_matrix(mat)
    n = len(a)
    b = [Fraction(check_scalar(x)) for x in rhs]
    for r, row in enumerate(a):
        row.append(b[r])
    red, pivots = rref(a)
    if len(pivots) != n or any(p != i for i, p in enumerate(pivots)):
        raise ValueError("matrix is singular")
    return [red[i][n] for i in range(n)]


def invert(mat):
    """Inverse of a square matrix."""
    a = _clean_matrix(mat)
    n = len(a)
    for i, row in enumerate(a):
        row.extend(Fraction(int(i == j)) for j in range(n))
    red, pivots = rref(a)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]
