from math import comb

import pytest

from qhk.constructions import (
    all_named_modules,
    build_L,
    build_Lell,
    build_Ltilde,
    build_M,
    build_named,
    build_R_delta_rep,
    build_S,
    build_Shat,
    first_coordinate_vectors,
    two_row_shape,
)
from qhk.dimensions import dim_beta
from qhk.probes import (
    action_algebra_dim,
    certify_isomorphism,
    hom_basis,
    hom_dim,
    hom_to_global,
    is_module_map,
    spin_dimension,
    submodule,
)
from qhk.qha import (
    character,
    graded_character,
    restrict_E,
    verify_relations,
    zero_module,
)
from qhk.linalg import Matrix

ELLS = [2, 3]


@pytest.mark.parametrize("ell", ELLS)
def test_all_named_modules_satisfy_relations(ell):
    for name, m in all_named_modules(ell).items():
        assert verify_relations(m), name


def test_ell2_dimensions():
    dims = [build_S(2, 0).dim, build_S(2, 1).dim, build_S(2, 2).dim, build_Shat(2).dim, build_M(2).dim]
    assert dims == [2, 6, 2, 4, 10]
    h = 6
    assert build_L(2, 1).dim == 2 * comb(h - 2, 1) - 2 * comb(h - 2, 0)
    assert build_Ltilde(2).dim == comb(h - 2, 2) - comb(h - 2, 1)


def test_two_row_shape():
    assert two_row_shape(2, 1) == (4, 1)


def test_character_of_L20():
    assert character(build_L(2, 0)) == {(0, 1, 2, 2, 1): 2}
    assert graded_character(build_L(2, 0)) == {(0, 1, 2, 2, 1): {0: 1, 2: 1}}


@pytest.mark.parametrize("ell", ELLS)
def test_epsilon_separation(ell):
    for i in range(ell + 1):
        s = build_S(ell, i)
        for j in range(ell + 1):
            if j != i:
                assert restrict_E(j, s).dim == 0


@pytest.mark.parametrize("ell", ELLS)
def test_restriction_of_S_is_L(ell):
    for i in range(ell):
        r = restrict_E(i, build_S(ell, i))
        assert character(r) == character(build_L(ell, i))
        assert certify_isomorphism(r, build_L(ell, i)).verdict == "yes"
    assert restrict_E(ell, build_Shat(ell)).dim == build_Lell(ell).dim


@pytest.mark.parametrize("ell", ELLS)
def test_restrictions_of_L_vanish_off_neighbours(ell):
    for i in range(ell):
        for j in range(ell):
            assert (restrict_E(j, build_L(ell, i)).dim == 0) == (j not in (i - 1, i + 1))


@pytest.mark.parametrize("ell", ELLS)
def test_restriction_is_character_restriction(ell):
    m = build_M(ell)
    for i in range(ell + 1):
        expected = {nu[:-1]: d for nu, d in character(m).items() if nu[-1] == i}
        assert character(restrict_E(i, m)) == expected


@pytest.mark.parametrize("ell", ELLS)
def test_M_last_crossing_support(ell):
    m = build_M(ell)
    k = 2 * ell + 1
    for nu in m.order:
        assert (not m.P(k, nu).is_zero()) == (nu[k - 1] == ell)


@pytest.mark.parametrize("ell", ELLS)
def test_endomorphisms(ell):
    assert hom_dim(build_Ltilde(ell), build_Ltilde(ell)) == 1
    assert hom_dim(build_Lell(ell), build_Lell(ell)) == 2


def test_nonsplit_self_extension():
    target = restrict_E(2, build_L(2, 1))
    source = build_Ltilde(2)
    assert hom_dim(restrict_E(1, source), target) == 1
    assert hom_dim(target, target) == 2


@pytest.mark.parametrize("ell", ELLS)
def test_action_algebras(ell):
    assert action_algebra_dim(build_R_delta_rep(ell)) == 2 == dim_beta(ell, (1,) * (ell + 1))
    for i in range(ell):
        assert action_algebra_dim(build_L(ell, i)) == build_L(ell, i).dim ** 2
    beta = [2] * (ell + 1)
    beta[ell] -= 1
    assert action_algebra_dim(build_Lell(ell)) == 2 * build_Ltilde(ell).dim ** 2 == dim_beta(ell, beta)


def test_action_algebra_of_trivial_datum():
    m = zero_module(2, (1, 0, 0))
    m.components = {(0,): 1}
    m.x = [{(0,): Matrix(1, 1)}]
    assert action_algebra_dim(m) == 1


@pytest.mark.parametrize("ell", ELLS)
def test_spin(ell):
    lt = build_Ltilde(ell)
    nu = lt.order[0]
    assert sum(spin_dimension(lt, [(nu, {0: 1})]).values()) == lt.dim
    le = build_Lell(ell)
    assert sum(spin_dimension(le, first_coordinate_vectors(le)).values()) == lt.dim
    assert sum(spin_dimension(lt, []).values()) == 0


def test_submodule_is_a_module():
    le = build_Lell(2)
    sub = submodule(le, first_coordinate_vectors(le))
    assert sub.dim == 2 and verify_relations(sub)


def test_hom_basis_elements_are_module_maps():
    m = build_M(2)
    for b in hom_basis(m, m):
        assert is_module_map(m, m, hom_to_global(m, m, b))


def test_isomorphism_verdicts():
    assert certify_isomorphism(build_M(2), build_M(2)).verdict == "yes"
    assert certify_isomorphism(build_S(2, 0), build_S(2, 2)).verdict == "no"


def test_build_named():
    assert build_named(2, "M").dim == 10
    assert build_named(2, "L:1").dim == 6
    with pytest.raises((KeyError, ValueError)):
        build_named(2, "nope")
