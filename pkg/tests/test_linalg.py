from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from qhk.linalg import (
    Echelon,
    Matrix,
    determinant,
    direct_sum,
    find_invertible,
    format_rational,
    is_invertible,
    matrix_power,
    nullspace,
    parse_rational,
    rank,
)


@st.composite
def small_matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    return rows


def test_matrix_basics():
    m = Matrix.from_dense([[1, 2], [0, 3]])
    assert m.shape == (2, 2)
    assert m[0, 1] == 2 and m[1, 0] == 0
    assert (m @ Matrix.identity(2)) == m
    assert m.transpose().to_dense() == [[1, 0], [2, 3]]
    assert (m - m).is_zero()
    assert m.apply({0: 1, 1: 1}) == {0: 3, 1: 3}


def test_zero_entries_are_not_stored():
    m = Matrix(2, 2)
    m.add_entry(0, 0, 1)
    m.add_entry(0, 0, -1)
    assert m.is_zero() and m.nnz() == 0


def test_direct_sum_and_power():
    a = Matrix.from_dense([[0, 1], [0, 0]])
    assert matrix_power(a, 2).is_zero()
    s = direct_sum(a, Matrix.identity(1))
    assert s.to_dense() == [[0, 1, 0], [0, 0, 0], [0, 0, 1]]


def test_rational_round_trip():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("4") == 4
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"


@given(small_matrices())
def test_rank_matches_sympy(rows):
    assert rank(Matrix.from_dense(rows)) == sympy.Matrix(rows).rank()


@given(small_matrices())
def test_nullspace_is_kernel_of_full_dimension(rows):
    m = Matrix.from_dense(rows)
    ns = nullspace(m)
    assert len(ns) == m.ncols - rank(m)
    for v in ns:
        assert m.apply(v) == {}


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_sympy(rows):
    assert determinant(Matrix.from_dense(rows)) == sympy.Matrix(rows).det()


def test_echelon_priority_controls_pivots():
    e = Echelon(3, priority=lambda c: -c)
    e.add({0: 1, 2: 1})
    assert list(e.pivots) == [2]
    assert e.free_columns() == [0, 1]
    assert e.contains({0: 2, 2: 2})


def test_find_invertible_combination():
    a = Matrix.from_dense([[1, 0], [0, 0]])
    b = Matrix.from_dense([[0, 0], [0, 1]])
    w = find_invertible([a, b])
    assert w is not None and is_invertible(w)
    assert find_invertible([a]) is None
