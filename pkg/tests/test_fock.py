import pytest
from hypothesis import given, strategies as st

from qhk.cartan import build_datum, pair_coroot
from qhk.fock import (
    FockVector,
    apply_word,
    chevalley_e,
    chevalley_f,
    mode_e,
    mode_f,
    monomial_e,
    monomial_f,
    parse_word,
)
from qhk.tableaux import shape_weight, strict_partitions

V = FockVector.basis
VAC = FockVector.vacuum()


@st.composite
def basis_vectors(draw, max_size=8):
    ell = draw(st.integers(1, 3))
    n = draw(st.integers(0, max_size))
    lam = draw(st.sampled_from(strict_partitions(n)))
    i = draw(st.integers(0, ell))
    return ell, lam, i


def test_modes():
    assert mode_f(2, 0, VAC) == V((1,))
    assert not mode_f(2, 0, V((1,)))
    assert mode_e(2, 2, V((3,))) == V((2,))
    assert not mode_e(2, 2, V((3, 2)))


def test_chevalley_examples():
    assert chevalley_e(2, 0, V((6,))) == 2 * V((5,))
    for i in range(3):
        assert chevalley_f(2, i, VAC) == (V((1,)) if i == 0 else FockVector())
    one = V((1,))
    comm = chevalley_e(2, 1, chevalley_f(2, 1, one)) - chevalley_f(2, 1, chevalley_e(2, 1, one))
    assert comm == one


def test_monomials():
    assert monomial_f(2, (0, 1, 2), VAC) == V((3,))
    assert monomial_e(2, (0, 1, 2), V((3,))) == 2 * VAC
    assert not monomial_e(2, (0, 1, 1), V((3,)))


def test_word_parsing():
    assert parse_word("f0 f1 e2") == [("f", 0), ("f", 1), ("e", 2)]
    assert apply_word(2, parse_word("f2 f1 f0"), VAC) == V((3,))
    with pytest.raises(ValueError):
        parse_word("g1")


def test_vector_arithmetic():
    v = V((2,)) + 3 * V((1,))
    assert v.coefficient((1,)) == 3
    assert not (v - v)
    assert v.scale(2).coefficient((2,)) == 2


@given(basis_vectors())
def test_weight_homogeneity(args):
    ell, lam, i = args
    D = build_datum(ell)
    wt = shape_weight(ell, lam)
    for mu, _ in chevalley_f(ell, i, V(lam)).items():
        assert shape_weight(ell, mu) == wt - D.alpha(i)
    for mu, _ in chevalley_e(ell, i, V(lam)).items():
        assert shape_weight(ell, mu) == wt + D.alpha(i)


@given(basis_vectors())
def test_chevalley_commutator(args):
    ell, lam, i = args
    v = V(lam)
    comm = chevalley_e(ell, i, chevalley_f(ell, i, v)) - chevalley_f(ell, i, chevalley_e(ell, i, v))
    assert comm == pair_coroot(build_datum(ell), i, shape_weight(ell, lam)) * v
