"""Exact dense linear algebra over Fraction: RREF, nullspaces, solves.

Pivoting is first-nonzero in row order within each column, scanned left to
right, so every result is deterministic for a deterministic input ordering.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rref(matrix: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (on a copy) and the pivot column list.

    ``ncols`` restricts pivot search to the leading columns, which turns the
    routine into an augmented-system solver.
    """
    rows = [list(row) for row in matrix]
    if not rows:
        return rows, []
    width = len(rows[0])
    if ncols is None:
        ncols = width
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(matrix: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column, in column order."""
    if not matrix:
        return [[Fraction(1 if i == j else 0) for i in range(ncols)] for j in range(ncols)]
    reduced, pivots = rref(matrix, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            vec[p] = -reduced[row_idx][f]
        basis.append(vec)
    return basis


def solve_unique(a: Matrix, b: Matrix) -> Matrix:
    """Solve A X = B where the (possibly overdetermined) system is consistent
    with a unique solution.  Inconsistency or rank deficiency raises
    AssertionError: callers use this only for systems that provably have
    exactly one solution, so failure means an implementation bug.
    """
    if not a:
        raise ValueError("empty coefficient matrix")
    n_unknowns = len(a[0])
    n_rhs = len(b[0]) if b else 0
    augmented = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    reduced, pivots = rref(augmented, n_unknowns)
    if len(pivots) != n_unknowns:
        raise AssertionError("linear system is rank deficient; this is a bug")
    for row in reduced[len(pivots):]:
        if any(row):
            raise AssertionError("linear system is inconsistent; this is a bug")
    x = [[Fraction(0)] * n_rhs for _ in range(n_unknowns)]
    for row_idx, p in enumerate(pivots):
        x[p] = reduced[row_idx][n_unknowns:]
    return x
