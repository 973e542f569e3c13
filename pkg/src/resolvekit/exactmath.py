"""Exact rational dense linear algebra.

Rationals are ``fractions.Fraction`` (always reduced, positive
denominator) and integers are Python's arbitrary-precision ``int``, so
nothing here ever rounds.  Elimination pivots deterministically on the
first nonzero entry by row index, which makes every output reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = Fraction


class RatMatrix:
    """Dense matrix of Fractions, immutable after construction."""

    __slots__ = ("rows", "cols", "_m")

    def __init__(self, entries: Iterable[Iterable[Rat | int]]):
        m = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if m and any(len(row) != len(m[0]) for row in m):
            raise ValueError("ragged rows")
        self._m = m
        self.rows = len(m)
        self.cols = len(m[0]) if m else 0

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, idx):
        i, j = idx
        return self._m[i][j]

    def row(self, i: int) -> tuple[Rat, ...]:
        return self._m[i]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._m)) if self.rows else RatMatrix([])

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self._m == other._m

    def __hash__(self):
        return hash(self._m)

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"


def matvec(A: RatMatrix, x: Sequence[Rat | int]) -> list[Rat]:
    """Exact product ``A @ x``."""
    if len(x) != A.cols:
        raise ValueError("dimension mismatch")
    return [sum((A[i, j] * x[j] for j in range(A.cols)), Fraction(0)) for i in range(A.rows)]


def _forward_eliminate(m: list[list[Rat]], ncols_pivot: int) -> list[int]:
    """In-place row echelon form; pivots only in the first ``ncols_pivot``
    columns.  Returns the pivot column indices (their count is the rank).

    Pivot choice is the first row (smallest index) with a nonzero entry
    in the current column.
    """
    pivot_cols = []
    piv_r = 0
    nrows = len(m)
    for col in range(ncols_pivot):
        sel = next((i for i in range(piv_r, nrows) if m[i][col] != 0), None)
        if sel is None:
            continue
        if sel != piv_r:
            m[piv_r], m[sel] = m[sel], m[piv_r]
        pivot = m[piv_r][col]
        for i in range(piv_r + 1, nrows):
            if m[i][col] != 0:
                factor = m[i][col] / pivot
                row_i, row_p = m[i], m[piv_r]
                for j in range(col, len(row_i)):
                    row_i[j] -= factor * row_p[j]
        pivot_cols.append(col)
        piv_r += 1
    return pivot_cols


def solve(A: RatMatrix, b: Sequence[Rat | int]) -> list[Rat] | None:
    """One exact solution of ``A x = b``, or None if the system is
    inconsistent.  Free variables are set to zero, so the answer is
    deterministic."""
    if len(b) != A.rows:
        raise ValueError("dimension mismatch: len(b) != A.rows")
    aug = [list(A.row(i)) + [Fraction(b[i])] for i in range(A.rows)]
    pivot_cols = _forward_eliminate(aug, A.cols)
    rank = len(pivot_cols)
    for i in range(rank, A.rows):
        if aug[i][A.cols] != 0:
            return None
    x = [Fraction(0)] * A.cols
    for r in range(rank - 1, -1, -1):
        col = pivot_cols[r]
        s = aug[r][A.cols]
        for j in range(col + 1, A.cols):
            s -= aug[r][j] * x[j]
        x[col] = s / aug[r][col]
    return x


def _int_forward_eliminate(m: list[list[int]]) -> list[int]:
    """Fraction-free (Bareiss) row echelon form of an integer matrix, in
    place.  Returns pivot column indices.  Pivot choice matches
    ``_forward_eliminate``: first nonzero entry by row index, so the
    echelon row pattern is identical to rational elimination."""
    pivot_cols = []
    piv_r = 0
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    for col in range(ncols):
        sel = next((i for i in range(piv_r, nrows) if m[i][col] != 0), None)
        if sel is None:
            continue
        if sel != piv_r:
            m[piv_r], m[sel] = m[sel], m[piv_r]
        pivot = m[piv_r][col]
        for i in range(piv_r + 1, nrows):
            row_i, row_p = m[i], m[piv_r]
            f = row_i[col]
            for j in range(col, ncols):
                row_i[j] = (row_i[j] * pivot - f * row_p[j]) // prev
        prev = pivot
        pivot_cols.append(col)
        piv_r += 1
    return pivot_cols


def left_kernel(A: RatMatrix) -> list[tuple[int, ...]]:
    """Basis of ``{y : y^T A = 0}``, i.e. the nullspace of the transpose.

    Each basis vector is integerized (integer entries, content 1) and
    sign-normalized so its first nonzero entry is positive; vectors are
    ordered by their free-variable index.  Empty iff A has full row rank.

    Columns of A are pre-scaled to integers, which leaves the left
    kernel unchanged, so the cubic elimination runs on plain ints.
    """
    cols = []
    for col in zip(*A._m):
        scale = lcm(*(x.denominator for x in col))
        cols.append([int(x * scale) for x in col])
    rows = list(zip(*cols)) if cols else [()] * A.rows
    return int_left_kernel(rows)


def int_left_kernel(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """``left_kernel`` for integer matrices, without RatMatrix overhead.

    Entirely integer arithmetic: the back-substitution rescales the
    partial vector instead of dividing, so each basis vector stays
    integral and is reduced to content 1 at the end.
    """
    n = len(rows)
    if n == 0:
        return []
    t = [list(col) for col in zip(*rows)]
    if not t:
        return [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
    pivot_cols = _int_forward_eliminate(t)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        y = [0] * n
        y[free] = 1
        live = [free]
        for r in range(len(pivot_cols) - 1, -1, -1):
            col = pivot_cols[r]
            row = t[r]
            # entries left of the pivot are zero in echelon form
            s = sum(row[j] * y[j] for j in live if j > col)
            if s == 0:
                continue
            piv = row[col]
            g = gcd(s, piv)
            f = piv // g
            if f != 1:
                for j in live:
                    y[j] *= f
            y[col] = -(s // g)
            live.append(col)
        v = integerize(y)
        first = next(x for x in v if x != 0)
        if first < 0:
            v = tuple(-x for x in v)
        basis.append(v)
    return basis


def is_invertible(A: RatMatrix) -> bool:
    """True iff ``A`` is square with nonzero determinant.

    Denominators are cleared row by row (which cannot change whether the
    determinant vanishes) and the integer matrix goes through
    fraction-free Bareiss elimination.
    """
    if A.rows != A.cols:
        raise ValueError("is_invertible requires a square matrix")
    rows = []
    for i in range(A.rows):
        scale = lcm(*(x.denominator for x in A.row(i))) if A.cols else 1
        rows.append([int(x * scale) for x in A.row(i)])
    return int_det(rows) != 0


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix via Bareiss elimination.

    All intermediate divisions are exact, so the result is the exact
    integer determinant.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("int_det requires a square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if sel is None:
                return 0
            a[k], a[sel] = a[sel], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def integerize(v: Sequence[Rat | int]) -> tuple[int, ...]:
    """Scale a nonzero rational vector by a positive rational so it
    becomes an integer vector with content (gcd of entries) 1."""
    vec = [Fraction(x) for x in v]
    if all(x == 0 for x in vec):
        raise ValueError("integerize requires a nonzero vector")
    scale = lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = gcd(*ints)
    return tuple(x // g for x in ints)
