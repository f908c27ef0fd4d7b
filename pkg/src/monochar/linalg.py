"""Exact rational linear algebra.

The production route is fraction-free (Bareiss) Gauss-Jordan elimination
on integer rows.  :func:`nullspace_naive` is a plain Fraction elimination
kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of Fraction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows
                              else tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [() for _ in range(other.cols)]
        out = tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
                    for r in self.entries)
        return RationalMatrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> list:
        return [sum((a * Fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in self.entries]

    def tolist(self) -> list:
        return [list(r) for r in self.entries]


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def bareiss_rref(rows: Sequence[Sequence[int]], ncols: int):
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(reduced_rows, pivot_columns, d)`` where the first
    ``len(pivot_columns)`` rows are ``d`` times the reduced row echelon form.
    All divisions are exact.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        prow = m[r]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            if a:
                m[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                m[i] = [(p * x) // prev for x in row]
        pivots.append(c)
        prev = p
        r += 1
    # rows 0..r-1 carry pivot values that may lag behind the final scale
    d = prev
    for i in range(r):
        pc = pivots[i]
        if m[i][pc] != d:
            f = m[i][pc]
            m[i] = [x * d // f for x in m[i]]
    return m, pivots, d


def nullspace_with_free(A) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Right nullspace basis (as rows) and the free column of each vector.

    Basis vector ``k`` has a 1 at ``free[k]`` and 0 at every other free
    column, i.e. the canonical basis read off the reduced echelon form.
    """
    rows, ncols = _rows_and_cols(A)
    ints = _integer_rows(rows)
    red, pivots, d = bareiss_rref(ints, ncols)
    pivset = set(pivots)
    free = tuple(c for c in range(ncols) if c not in pivset)
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            if red[i][f]:
                v[pc] = Fraction(-red[i][f], d)
        basis.append(v)
    return RationalMatrix(len(basis), ncols, tuple(tuple(v) for v in basis)), free


def nullspace(A) -> RationalMatrix:
    """Right nullspace basis; one basis vector per row of the result."""
    return nullspace_with_free(A)[0]


def rank(A) -> int:
    rows, ncols = _rows_and_cols(A)
    return len(bareiss_rref(_integer_rows(rows), ncols)[1])


def _rows_and_cols(A):
    if isinstance(A, RationalMatrix):
        return A.entries, A.cols
    rows = [list(r) for r in A]
    return rows, (len(rows[0]) if rows else 0)


def nullspace_naive(A) -> RationalMatrix:
    """Reference implementation with Fraction pivoting, same canonical basis."""
    rows, ncols = _rows_and_cols(A)
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(tuple(v))
    return RationalMatrix(len(basis), ncols, tuple(basis))


def same_span(A: RationalMatrix, B: RationalMatrix) -> bool:
    """Whether the row spaces of ``A`` and ``B`` coincide."""
    if A.cols != B.cols:
        return False
    ra = rank(A.entries) if A.rows else 0
    rb = rank(B.entries) if B.rows else 0
    both = list(A.entries) + list(B.entries)
    rab = rank(both) if both else 0
    return ra == rb == rab
