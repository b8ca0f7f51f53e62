import pytest
from hypothesis import given, strategies as st

from qhk.basic_algebra import (
    algebra_biserial_check,
    build_basic,
    cartan_2delta,
    cartan_from_table,
    check_associativity,
    check_relations,
    check_unit,
    dim_consistency,
    expected_quotient_relations,
    gram_report,
    kronecker_check,
    label,
    nonzero_in_quotient,
    quiver_dot,
    quotient_dimension,
    socle_annihilates_radical,
    socle_quotient,
    special_biserial_check,
)

ELLS = [2, 3, 4]


@pytest.mark.parametrize("ell", ELLS)
def test_dimension(ell):
    assert build_basic(ell).dim == 4 * ell + 7


@pytest.mark.parametrize("ell", ELLS)
def test_table_is_an_algebra(ell):
    alg = build_basic(ell)
    assert check_associativity(alg) is None
    assert check_unit(alg)
    assert check_relations(alg) == []


def test_corner_at_vertex_ell():
    alg = build_basic(2)
    corner = sorted(label(alg.basis[k]) for k in range(alg.dim) if alg.source[k] == 2 == alg.target[k])
    assert corner == sorted(["e2", "delta", "beta2 alpha2", "delta beta2 alpha2"])


@pytest.mark.parametrize("ell", ELLS)
def test_gram(ell):
    r = gram_report(build_basic(ell))
    assert r.ok
    if ell == 2:
        assert r.determinant == -1


@pytest.mark.parametrize("ell", ELLS)
def test_socle(ell):
    alg = build_basic(ell)
    assert socle_annihilates_radical(alg)
    assert sum(alg.trace) == ell + 1
    assert quotient_dimension(alg) == 3 * ell + 6


@pytest.mark.parametrize("ell", ELLS)
def test_socle_quotient_relations(ell):
    q = socle_quotient(build_basic(ell))
    assert set(q.relations) == expected_quotient_relations(ell)
    assert nonzero_in_quotient(build_basic(ell), (f"beta{ell}", f"alpha{ell}"))


@pytest.mark.parametrize("ell", ELLS)
def test_biserial(ell):
    assert algebra_biserial_check(build_basic(ell)).ok


def test_biserial_synthetic_failures():
    three_out = [("a", 0, 1), ("b", 0, 1), ("c", 0, 1)]
    r = special_biserial_check([0, 1], three_out, lambda p: False)
    assert not r.ok and any(f.startswith("(a2)") for f in r.failures)
    fork = [("x", 0, 1), ("y", 1, 2), ("z", 1, 2)]
    r = special_biserial_check([0, 1, 2], fork, lambda p: True)
    assert not r.ok and any(f.startswith("(b1)") for f in r.failures)
    assert special_biserial_check([0, 1], [("x", 0, 1)], lambda p: True).ok


def test_cartan_matrix_ell2():
    assert cartan_2delta(2) == [[3, 1, 0], [1, 2, 2], [0, 2, 4]]


@pytest.mark.parametrize("ell", ELLS)
def test_cartan_matrix_matches_table(ell):
    c = cartan_2delta(ell)
    assert c == cartan_from_table(build_basic(ell))
    assert all(c[i][j] == c[j][i] for i in range(ell + 1) for j in range(ell + 1))


def test_consistency_ell2():
    r = dim_consistency(2)
    assert r.simple_dims == (2, 6, 2)
    assert r.projective_dims == (12, 18, 20)
    assert r.total == r.expected == 172


@pytest.mark.parametrize("ell", [3])
def test_consistency_higher(ell):
    assert dim_consistency(ell).ok


@pytest.mark.parametrize("ell", ELLS)
def test_local_corner(ell):
    r = kronecker_check(build_basic(ell))
    assert r.ok
    assert r.product == f"1*delta beta{ell} alpha{ell}"


def test_quiver_dot():
    dot = quiver_dot(2)
    assert dot.startswith("digraph A {") and 'v2 -> v2 [label="delta"]' in dot


@given(st.sampled_from(ELLS), st.data())
def test_unit_is_two_sided(ell, data):
    alg = build_basic(ell)
    k = data.draw(st.integers(0, alg.dim - 1))
    one = alg.unit()
    assert alg.multiply(one, {k: 1}) == {k: 1} == alg.multiply({k: 1}, one)
