import pytest
from hypothesis import given, strategies as st

from qhk.cartan import build_datum
from qhk.tableaux import (
    StandardShiftedTableau,
    StrictPartition,
    canonical_tableau,
    count_K,
    count_by_enumeration,
    count_by_hooks,
    count_by_product_formula,
    count_tableaux,
    enumerate_ST,
    is_standard,
    residue,
    residue_pattern,
    residue_sequence,
    sequence_content,
    shape_weight,
    shapes_of_weight,
    strict_partitions,
    tableaux_with_residues,
)


@st.composite
def strict_shapes(draw, max_size=9):
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(strict_partitions(n)))


def test_residue_pattern():
    assert residue(3, 2, 7) == 2
    assert residue_pattern(2) == (0, 1, 2, 2, 1, 0)
    assert [residue(2, 1, j) for j in range(1, 7)] == [0, 1, 2, 2, 1, 0]
    assert all(residue(ell, i, i) == 0 for ell in (1, 2, 3) for i in range(1, 6))


def test_strict_partition_validation():
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    with pytest.raises(ValueError):
        StrictPartition((1, 3))
    assert StrictPartition((5, 2)).cells()[-1] == (2, 3)


def test_shape_weight():
    D = build_datum(2)
    L0, d = D.lambda0(), D.delta()
    assert shape_weight(2, ()) == L0
    assert shape_weight(2, (6,)) == L0 - d * 2
    assert shape_weight(2, (3, 2)) == L0 - d * 2 + D.alpha(2)


def test_enumeration_small_shapes():
    assert len(enumerate_ST((5, 2))) == 9
    assert len(enumerate_ST((7,))) == 1
    rows = sorted(T.rows for T in enumerate_ST((3, 2)))
    assert rows == [((1, 2, 3), (4, 5)), ((1, 2, 4), (3, 5))]
    assert count_tableaux((2, 1)) == 1


def test_displayed_members_of_ST_5_2_occur():
    found = {T.rows for T in enumerate_ST((5, 2))}
    assert ((1, 2, 3, 4, 5), (6, 7)) in found
    assert ((1, 2, 3, 5, 7), (4, 6)) in found


def test_residue_sequences():
    assert residue_sequence(2, StandardShiftedTableau(StrictPartition((3, 2)), ((1, 2, 3), (4, 5)))) == (0, 1, 2, 0, 1)
    assert residue_sequence(2, StandardShiftedTableau(StrictPartition((3, 2)), ((1, 2, 4), (3, 5)))) == (0, 1, 0, 2, 1)
    for ell in (2, 3, 4):
        assert residue_sequence(ell, canonical_tableau((ell + 1,))) == tuple(range(ell + 1))


def test_K_counts():
    assert count_K(2, (3, 2), (0, 1, 2, 0, 1)) == 1
    assert count_K(2, (3, 2), (0, 1, 2, 2, 1)) == 0
    assert count_K(2, (6,), (0, 1, 2, 2, 1, 0)) == 1


def test_two_row_shapes_determined_by_residues():
    for ell in (2, 3):
        h = 2 * ell + 2
        for i in range(1, ell):
            shape = (h - 1 - i, i)
            seqs = [residue_sequence(ell, T) for T in enumerate_ST(shape)]
            assert len(seqs) == len(set(seqs))


def test_canonical_tableau():
    assert canonical_tableau((5, 2)).rows == ((1, 2, 3, 4, 5), (6, 7))
    assert canonical_tableau((4,)).rows == ((1, 2, 3, 4),)


def test_shapes_of_weight():
    assert shapes_of_weight(2, (2, 2, 2)) == [StrictPartition((6,)), StrictPartition((5, 1)), StrictPartition((4, 2))]
    for ell in (1, 2, 3):
        assert shapes_of_weight(ell, (1,) * (ell + 1)) == [StrictPartition((ell + 1,))]
    assert shapes_of_weight(2, (0, 0, 0)) == [StrictPartition(())]


def test_ell2_dim_L1_cross_check():
    assert count_tableaux((4, 1)) == 3


@given(strict_shapes())
def test_count_oracles_agree(lam):
    n = count_by_enumeration(lam)
    assert n == count_by_product_formula(lam) == count_by_hooks(lam) == count_tableaux(lam)


@given(strict_shapes(max_size=8))
def test_enumerated_tableaux_are_standard(lam):
    for T in enumerate_ST(lam):
        assert is_standard(T.shape, T.rows)


@given(strict_shapes(max_size=8), st.integers(1, 3))
def test_residue_filter_partitions_tableaux(lam, ell):
    Ts = enumerate_ST(lam)
    seqs = {residue_sequence(ell, T) for T in Ts}
    assert sum(len(tableaux_with_residues(ell, lam, nu)) for nu in seqs) == len(Ts)
    for nu in seqs:
        assert sequence_content(ell, nu) == tuple(
            sum(1 for x in nu if x == i) for i in range(ell + 1)
        )
