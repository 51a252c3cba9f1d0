"""Exact linear algebra over the rationals, sized for desk-scale matrices.

Everything works on plain tuples of Fractions so results are hashable and
reproducible; no tolerance policy exists anywhere.
"""

from __future__ import annotations

from fractions import Fraction

Row = tuple[Fraction, ...]


def rref(rows) -> tuple[Row, ...]:
    """Reduced row echelon form; zero rows dropped, pivots normalized to 1."""
    mat = [list(map(Fraction, row)) for row in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    out: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for row in mat:
        row = row[:]
        for prow, pcol in zip(out, pivot_cols):
            if row[pcol] != 0:
                f = row[pcol]
                row = [x - f * y for x, y in zip(row, prow)]
        col = next((j for j in range(ncols) if row[j] != 0), None)
        if col is None:
            continue
        inv = row[col]
        row = [x / inv for x in row]
        for prow, pcol in zip(out, pivot_cols):
            if prow[col] != 0:
                f = prow[col]
                prow[:] = [x - f * y for x, y in zip(prow, row)]
        out.append(row)
        pivot_cols.append(col)
    order = sorted(range(len(out)), key=lambda k: pivot_cols[k])
    return tuple(tuple(out[k]) for k in order)


def det(matrix) -> Fraction:
    """Determinant by fraction-free style elimination over Fractions."""
    mat = [list(map(Fraction, row)) for row in matrix]
    n = len(mat)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        result *= mat[col][col]
        inv = mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                f = mat[r][col] / inv
                for c in range(col, n):
                    mat[r][c] -= f * mat[col][c]
    return sign * result


def solve(matrix, rhs) -> tuple[Fraction, ...]:
    """Unique solution of M x = rhs; raises ValueError when M is singular."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    reduced = rref(aug)
    if len(reduced) != n or any(row[:n] == tuple([Fraction(0)] * n) for row in reduced):
        raise ValueError("matrix is singular")
    sol = [Fraction(0)] * n
    for row in reduced:
        col = next(j for j in range(n) if row[j] != 0)
        sol[col] = row[n]
    return tuple(sol)
