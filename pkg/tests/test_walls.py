from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhk.cartan import build_datum
from qhk.walls import (
    YoungWall,
    build_Yi,
    column_height,
    crosscheck,
    enumerate_reduced,
    has_removable_delta,
    is_full,
    is_proper,
    weight_of_wall,
)


def test_column_heights():
    assert column_height(2, 3) == 2 and is_full(2, 3)
    assert column_height(2, 5) == Fraction(7, 2) and not is_full(2, 5)
    assert column_height(2, 0) == 0 and is_full(2, 0)


def test_properness():
    assert not is_proper(2, (3, 3))
    assert is_proper(2, (5, 1))
    assert is_proper(2, ())


def test_wall_weights():
    D = build_datum(2)
    L0, d = D.lambda0(), D.delta()
    assert weight_of_wall(2, ()) == L0
    assert weight_of_wall(2, (5,)) == L0 - d * 2 + D.alpha(0)
    assert weight_of_wall(2, (4, 2)) == L0 - d * 2


def test_removable_delta():
    assert not has_removable_delta(2, (6,))
    assert has_removable_delta(2, (7,))
    assert not has_removable_delta(2, (5, 1))


def test_reduced_walls():
    assert [w.columns for w in enumerate_reduced(2, (2, 2, 2))] == [(6,), (5, 1), (4, 2)]
    assert enumerate_reduced(2, (0, 0, 0)) == [YoungWall(())]
    for i in range(3):
        beta = [2, 2, 2]
        beta[i] -= 1
        assert enumerate_reduced(2, beta) == [build_Yi(2, i)]


def test_Yi():
    D = build_datum(2)
    assert build_Yi(2, 1).columns == (4, 1)
    assert weight_of_wall(2, build_Yi(2, 1)) == D.lambda0() - D.delta() * 2 + D.alpha(1)
    assert build_Yi(3, 3).columns == (4, 3)
    for ell in (2, 3, 4):
        for i in range(ell + 1):
            y = build_Yi(ell, i)
            assert is_proper(ell, y) and not has_removable_delta(ell, y)


def test_invalid_wall():
    with pytest.raises(ValueError):
        YoungWall((1, 2))


def test_crosscheck_on_pinned_weights():
    # the full table is reported by the CLI; only weights with known counts are asserted here
    for ell in (2, 3):
        h = ell + 1
        pinned = {(0,) * h, (1,) * h, (2,) * h}
        for i in range(h):
            beta = [2] * h
            beta[i] -= 1
            pinned.add(tuple(beta))
        rows = {r.beta: r for r in crosscheck(ell, 2 * h)}
        for beta in pinned:
            assert rows[beta].match, beta
        assert rows[(2,) * h].walls == ell + 1


@st.composite
def weights_near_2delta(draw):
    ell = draw(st.integers(1, 3))
    beta = [2] * (ell + 1)
    for _ in range(draw(st.integers(0, 3))):
        i = draw(st.integers(0, ell))
        beta[i] = max(0, beta[i] - 1)
    return ell, tuple(beta)


@given(weights_near_2delta())
def test_reduced_walls_are_proper_with_requested_weight(args):
    ell, beta = args
    D = build_datum(ell)
    target = D.lambda0() - D.root(beta)
    for w in enumerate_reduced(ell, beta):
        assert is_proper(ell, w)
        assert not has_removable_delta(ell, w)
        assert weight_of_wall(ell, w) == target
