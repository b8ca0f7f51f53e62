from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhk.cartan import (
    Weight,
    apply_word,
    bilinear_alpha,
    build_datum,
    pair_coroot,
    pair_d,
    pair_sd,
    reflect,
)


def test_cartan_matrices():
    assert build_datum(2).a == ((2, -2, 0), (-1, 2, -1), (0, -2, 2))
    assert build_datum(1).a == ((2, -2), (-2, 2))
    assert build_datum(3).a[3] == (0, 0, -2, 2)


@pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
def test_rows_sum_to_zero_and_symmetrizable(ell):
    D = build_datum(ell)
    assert all(sum(row) == 0 for row in D.a)
    n = ell + 1
    assert all(D.d_sym[i] * D.a[i][j] == D.d_sym[j] * D.a[j][i] for i in range(n) for j in range(n))


def test_invalid_rank():
    with pytest.raises(ValueError):
        build_datum(0)


def test_pairings():
    D = build_datum(2)
    L0 = D.lambda0()
    assert all(pair_coroot(D, i, D.delta()) == 0 for i in range(3))
    assert pair_coroot(D, 0, L0) == 1
    assert pair_coroot(D, 1, L0 - D.alpha(0)) == 1
    assert pair_sd(D, L0) == 0
    assert pair_sd(D, D.alpha(1)) == 0 and pair_sd(D, D.alpha(0)) == 1
    assert pair_sd(D, D.delta() * 2) == 4
    assert pair_d(D, D.alpha(0)) == 1


def test_symmetric_form():
    D = build_datum(3)
    assert bilinear_alpha(D, 0, D.alpha(0)) == 2
    assert bilinear_alpha(D, 1, D.alpha(1)) == 4
    assert bilinear_alpha(D, 0, D.alpha(1)) == bilinear_alpha(D, 1, D.alpha(0)) == -2
    assert all(bilinear_alpha(D, i, D.delta()) == 0 for i in range(4))


def test_extremal_weights():
    D = build_datum(2)
    L0, d = D.lambda0(), D.delta()
    assert apply_word(D, [1, 2, 1, 0], L0) == L0 - d * 2 + D.alpha(0)
    for ell in (2, 3, 4):
        D = build_datum(ell)
        word = list(range(ell - 1, -1, -1))
        assert apply_word(D, word, D.lambda0() - D.delta()) == D.lambda0() - D.delta() * 2 + D.alpha(ell)


@st.composite
def weights(draw, ell=None):
    ell = ell or draw(st.integers(1, 4))
    c = draw(st.integers(-2, 2))
    m = tuple(draw(st.lists(st.integers(-4, 4), min_size=ell + 1, max_size=ell + 1)))
    return ell, Weight(c, m)


@given(weights(), st.data())
def test_reflection_is_an_involution(em, data):
    ell, mu = em
    D = build_datum(ell)
    i = data.draw(st.integers(0, ell))
    assert reflect(D, i, reflect(D, i, mu)) == mu
    if pair_coroot(D, i, mu) == 0:
        assert reflect(D, i, mu) == mu


@given(st.integers(1, 4).flatmap(lambda ell: st.tuples(st.just(ell), st.lists(st.integers(0, ell), max_size=8))))
def test_delta_is_weyl_invariant(args):
    ell, word = args
    D = build_datum(ell)
    assert apply_word(D, word, D.delta()) == D.delta()


@given(weights())
def test_modified_pairing_agrees_with_its_definition(em):
    ell, mu = em
    D = build_datum(ell)
    # pair_sd raises on any mismatch between the closed form and the rational sum
    expected = Fraction(0)
    if ell >= 2:
        expected = sum(Fraction(i) * pair_coroot(D, i, mu) for i in range(1, ell))
        expected += Fraction(ell, 2) * pair_coroot(D, ell, mu) + 2 * mu.m[0]
        assert pair_sd(D, mu) == expected
    else:
        assert pair_sd(D, mu) == mu.m[0] + mu.m[1]
