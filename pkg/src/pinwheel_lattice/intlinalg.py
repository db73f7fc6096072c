"""Small exact linear algebra over the integers and the rationals.

Matrices are plain nested tuples or lists of Python ints (or Fractions for
:func:`solve_rational`).  Sizes here never exceed a dozen rows, so clarity
wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_rows(gens: Sequence[Sequence[int]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Row Hermite normal form of the lattice spanned by ``gens``.

    Returns a basis (zero rows dropped) that is upper triangular in echelon
    form, with positive pivots and every entry above a pivot reduced into
    ``[0, pivot)``.  Two generator sets span the same lattice iff their
    outputs are equal.
    """
    rows = [list(map(int, g)) for g in gens]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    rows = [r for r in rows if any(r)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        # Euclid on the column until one row carries the gcd.
        while True:
            nz = [r for r in rows if r[col] != 0]
            if len(nz) <= 1:
                break
            pivot = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is pivot:
                    continue
                q = r[col] // pivot[col]
                for j in range(col, ncols):
                    r[j] -= q * pivot[j]
            rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col] != 0]
        if nz:
            pivot = nz[0]
            rows = [r for r in rows if r is not pivot]
            if pivot[col] < 0:
                pivot = [-x for x in pivot]
            basis.append(pivot)
        col += 1
    # Reduce entries above each pivot.
    for i, row in enumerate(basis):
        c = next(j for j, x in enumerate(row) if x != 0)
        for above in basis[:i]:
            q = above[c] // row[c]
            if q:
                for j in range(c, ncols):
                    above[j] -= q * row[j]
    return [tuple(r) for r in basis]


def integer_kernel(a: IntMatrix, ncols: int) -> list[tuple[int, ...]]:
    """Basis of ``{x in Z^ncols : a x = 0}`` in row Hermite normal form.

    Column operations reduce ``a`` while the same operations act on an
    identity block; columns whose ``a``-part vanishes span the kernel.
    """
    m = len(a)
    # Work with columns: each column is (a-part, identity-part).
    cols = [[int(a[i][j]) for i in range(m)] + [1 if t == j else 0 for t in range(ncols)] for j in range(ncols)]
    done = 0
    for i in range(m):
        while True:
            live = [c for c in cols[done:] if c[i] != 0]
            if len(live) <= 1:
                break
            pivot = min(live, key=lambda c: abs(c[i]))
            for c in live:
                if c is pivot:
                    continue
                q = c[i] // pivot[i]
                for t in range(len(c)):
                    c[t] -= q * pivot[t]
        idx = next((j for j in range(done, ncols) if cols[j][i] != 0), None)
        if idx is not None:
            cols[done], cols[idx] = cols[idx], cols[done]
            done += 1
    kernel = [tuple(c[m:]) for c in cols[done:]]
    return hermite_rows(kernel, ncols)


def solve_rational(m: IntMatrix, rhs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Solve ``m x = rhs`` exactly for a square nonsingular ``m``."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for k in range(n):
        p = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        aug[k], aug[p] = aug[p], aug[k]
        piv = aug[k][k]
        aug[k] = [x / piv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return tuple(row[n] for row in aug)
