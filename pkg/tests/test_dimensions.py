from math import factorial

import pytest
from hypothesis import given, strategies as st

from qhk.dimensions import (
    dim_beta,
    dim_block,
    dim_n,
    dim_principal_series,
    factorial_identity_check,
    is_realizable,
    principal_sequence,
    roots_of_height,
)
from qhk.tableaux import count_tableaux, strict_partitions


def test_dim_block_examples():
    for ell in (2, 3, 4):
        nu = tuple(range(ell + 1))
        assert dim_block(ell, nu, nu) == 2
    assert dim_block(2, (0, 1, 2), (0, 1, 0)) == 0
    assert dim_block(2, (0, 1, 2, 0, 1, 2), (0, 1, 2, 0, 1, 2)) == 4


def test_dim_beta_examples():
    assert dim_beta(2, (2, 2, 2)) == 172
    assert dim_beta(2, (2, 2, 1)) == 8
    for ell in (1, 2, 3, 4):
        assert dim_beta(ell, (1,) * (ell + 1)) == 2


def test_realizability():
    for ell in (1, 2, 3):
        assert is_realizable(ell, tuple(range(ell + 1)))
    assert not is_realizable(2, (1, 0, 2))
    assert is_realizable(2, (0, 1, 0))


def test_factorial_identity():
    r = factorial_identity_check(2, 3)
    assert r.lhs == r.rhs == 6 and r.ok
    assert sorted(r.terms) == [((1, 1, 1), 1, 2), ((2, 1, 0), 1, 1)]
    assert factorial_identity_check(2, 1).rhs == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_factorial_identity_ell1_matches_classical(n):
    classical = sum(2 ** (n - len(lam)) * count_tableaux(lam) ** 2 for lam in strict_partitions(n))
    assert classical == factorial(n)
    assert factorial_identity_check(1, n).rhs == factorial(n)


def test_principal_series():
    assert principal_sequence(2, 2, 0) == (0, 1, 2, 0, 1, 2)
    for ell in (2, 3):
        for s in range(ell + 1):
            assert dim_principal_series(ell, 0, s) == 1
        for r in range(3):
            for s in range(ell + 1):
                assert dim_principal_series(ell, r, s) == 2 ** r
        assert dim_principal_series(ell, 3, 0) == 8
    with pytest.raises(ValueError):
        principal_sequence(2, 3, 1)


@st.composite
def sequence_pairs(draw):
    ell = draw(st.integers(1, 3))
    n = draw(st.integers(1, 5))
    a = tuple(draw(st.lists(st.integers(0, ell), min_size=n, max_size=n)))
    b = tuple(draw(st.permutations(a)))
    return ell, a, b


@given(sequence_pairs())
def test_dim_block_symmetric(args):
    ell, a, b = args
    assert dim_block(ell, a, b) == dim_block(ell, b, a)


@given(sequence_pairs())
def test_realizable_iff_positive_diagonal(args):
    ell, a, _ = args
    assert is_realizable(ell, a) == (dim_block(ell, a, a) > 0)


@given(st.integers(1, 3), st.integers(1, 4))
def test_dim_n_sums_over_roots(ell, n):
    assert dim_n(ell, n) == sum(dim_beta(ell, b) for b in roots_of_height(ell, n))
