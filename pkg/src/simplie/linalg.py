"""Exact dense linear algebra over the rationals and the integers.

Matrices are lists of row lists.  Rational routines work with
``fractions.Fraction`` (integers are accepted and promoted); the Smith normal
form routines require integer entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def _promote(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = _promote(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        if ncols is None:
            return []
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    ncols = len(rows[0]) if ncols is None else ncols
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One exact solution of ``rows @ x = b``, or None when inconsistent."""
    if not rows:
        return None if any(Fraction(x) != 0 for x in b) else []
    ncols = len(rows[0])
    augmented = [list(row) + [bi] for row, bi in zip(rows, b)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = reduced[r][ncols]
    return x


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bm = _promote(b)
    cols = list(zip(*bm)) if bm else []
    return [
        [sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in cols]
        for row in a
    ]


def identity_int(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form over the integers.

    Returns ``(S, U, V)`` with ``S = U @ A @ V``, U and V unimodular and S
    diagonal with each divisor dividing the next.
    """
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    m = len(a[0]) if a else 0
    u = identity_int(n)
    v = identity_int(m)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(n, m):
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(min(n, m) - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if x != 0 and y % x != 0:
                add_col(i + 1, i, 1)
                # re-clear the 2x2 block
                while a[i + 1][i] != 0 or a[i][i + 1] != 0:
                    if a[i + 1][i] != 0:
                        if a[i][i] == 0 or (a[i + 1][i] != 0 and abs(a[i + 1][i]) < abs(a[i][i])):
                            swap_rows(i, i + 1)
                        if a[i][i] != 0 and a[i + 1][i] != 0:
                            add_row(i, i + 1, -(a[i + 1][i] // a[i][i]))
                    if a[i][i + 1] != 0:
                        if a[i][i] == 0 or (a[i][i + 1] != 0 and abs(a[i][i + 1]) < abs(a[i][i])):
                            swap_cols(i, i + 1)
                        if a[i][i] != 0 and a[i][i + 1] != 0:
                            add_col(i, i + 1, -(a[i][i + 1] // a[i][i]))
                if a[i][i] < 0:
                    negate_row(i)
                if a[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    return a, u, v


def elementary_divisors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, in chain order."""
    if not rows or not rows[0]:
        return []
    s, _, _ = smith_normal_form(rows)
    return [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i] != 0]


def integer_kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of the saturated integer kernel lattice of an integer matrix."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    s, _, v = smith_normal_form(rows)
    r = len(elementary_divisors(rows))
    # kernel basis: columns of V past the rank
    return [[v[i][j] for i in range(ncols)] for j in range(r, ncols)]
