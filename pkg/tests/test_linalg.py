from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from monochar.linalg import (RationalMatrix, bareiss_rref, nullspace, nullspace_naive,
                             nullspace_with_free, rank, same_span)


def matrices(max_rows=6, max_cols=8, lo=-4, hi=4):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_examples():
    assert nullspace(RationalMatrix.identity(3)).rows == 0
    assert same_span(nullspace([[1, 1]]), RationalMatrix.from_rows([[1, -1]]))
    assert nullspace([[1, 1]]).tolist() == [[-1, 1]]
    assert nullspace([[0, 0]]).tolist() == [[1, 0], [0, 1]]
    assert rank([[2, 4], [1, 2]]) == 1


def test_bareiss_scaled_rref():
    red, pivots, d = bareiss_rref([[2, 1, 1], [4, 3, 3], [8, 7, 9]], 3)
    assert pivots == [0, 1, 2]
    assert [r for r in red] == [[d, 0, 0], [0, d, 0], [0, 0, d]]


def test_rational_entries():
    basis, free = nullspace_with_free([[Fraction(1, 2), Fraction(1, 3)]])
    assert free == (1,)
    assert basis.tolist() == [[Fraction(-2, 3), 1]]


@given(matrices())
def test_nullspace_is_annihilated(rows):
    basis = nullspace(rows)
    A = RationalMatrix.from_rows(rows)
    for v in basis:
        assert all(x == 0 for x in A.apply(v))
    assert basis.rows == A.cols - rank(rows)


@given(matrices())
def test_matches_naive_elimination(rows):
    assert nullspace(rows) == nullspace_naive(rows)
    assert same_span(nullspace(rows), nullspace_naive(rows))


@given(matrices(6, 8, -20, 20))
def test_rank_matches_sympy(rows):
    M = sympy.Matrix(rows)
    assert rank(rows) == M.rank()
    ours = nullspace(rows)
    theirs = RationalMatrix.from_rows([[Fraction(int(x.p), int(x.q)) for x in v]
                                       for v in M.nullspace()], len(rows[0]))
    if ours.rows or theirs.rows:
        assert same_span(ours, theirs)


@given(matrices())
def test_canonical_free_columns(rows):
    basis, free = nullspace_with_free(rows)
    for k, v in enumerate(basis):
        assert [v[f] for f in free] == [int(i == k) for i in range(len(free))]


def test_same_span():
    a = RationalMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    b = RationalMatrix.from_rows([[1, 1, 2], [1, -1, 0]])
    c = RationalMatrix.from_rows([[1, 1, 1]])
    assert same_span(a, b) and not same_span(a, c)


def test_matmul_and_transpose():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ RationalMatrix.identity(2)) == a
    assert a.transpose().tolist() == [[1, 3], [2, 4]]
