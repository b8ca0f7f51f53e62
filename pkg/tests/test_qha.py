import json

import pytest
from hypothesis import given, strategies as st

from qhk.linalg import Matrix
from qhk.qha import (
    ModuleDatum,
    Mutation,
    QPolynomial,
    character,
    check_grading,
    divided_difference,
    dumps,
    module_from_json,
    module_to_json,
    multiply_back,
    mutate,
    mutation_sites,
    q_polynomial,
    q_polynomial_is_admissible,
    random_mutations,
    swap_seq,
    verify_relations,
    zero_module,
)
from qhk.constructions import build_L, build_M, build_R_delta_rep


def test_q_polynomials():
    assert q_polynomial(2, 0, 1).as_dict() == {(2, 0): 1, (0, 1): 1}
    assert q_polynomial(2, 1, 0).as_dict() == {(0, 2): 1, (1, 0): 1}
    assert q_polynomial(3, 0, 2).as_dict() == {(0, 0): 1}
    assert q_polynomial(2, 1, 1).is_zero()
    assert str(q_polynomial(2, 0, 1)) == "v + u^2"


def test_middle_polynomial_variants_are_admissible():
    for c in (1, 3):
        q = q_polynomial(3, 1, 2, middle=c)
        assert q_polynomial_is_admissible(3, 1, 2, q)
        assert q.as_dict() == {(1, 0): c, (0, 1): c}


def test_divided_differences():
    # keys are exponents of (x_k, x_{k+1}, x_{k+2})
    assert divided_difference(QPolynomial.from_dict({(2, 0): 1, (0, 1): 1})).as_dict() == {(1, 0, 0): 1, (0, 0, 1): 1}
    assert divided_difference(QPolynomial.from_dict({(0, 0): 1})).as_dict() == {}
    assert divided_difference(QPolynomial.from_dict({(1, 0): 1, (0, 2): 1})).as_dict() == {(0, 0, 0): 1}


@st.composite
def q_polys(draw):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3), max_size=4))
    return QPolynomial.from_dict(terms)


@given(q_polys())
def test_divided_difference_multiplies_back(q):
    # (x_k - x_{k+2}) * dd == Q(x_k, x_{k+1}) - Q(x_{k+2}, x_{k+1})
    expected = {}
    for (a, b), c in q.as_dict().items():
        expected[(a, b, 0)] = expected.get((a, b, 0), 0) + c
        expected[(0, b, a)] = expected.get((0, b, a), 0) - c
    expected = {k: v for k, v in expected.items() if v}
    assert multiply_back(divided_difference(q)) == expected


def test_swap_seq():
    assert swap_seq((0, 1, 2), 1) == (1, 0, 2)
    assert swap_seq((0, 1, 2), 2) == (0, 2, 1)


def test_rdelta_datum():
    m = build_R_delta_rep(2)
    assert m.dim == 2 and list(m.components) == [(0, 1, 2)]
    x = m.X(3, (0, 1, 2))
    assert (x @ x).is_zero() and not x.is_zero()
    assert verify_relations(m)


def test_shape_validation():
    with pytest.raises(ValueError):
        ModuleDatum(2, (1, 1, 1), {(0, 1, 2): 2}, [{(0, 1, 2): Matrix(1, 1)}, {}, {}], [{}, {}])
    with pytest.raises(ValueError):
        ModuleDatum(2, (1, 1, 1), {(0, 1, 2): 1}, [{}, {}], [{}, {}])


def test_zero_module_satisfies_relations():
    z = zero_module(2, (1, 1, 1))
    assert z.dim == 0 and verify_relations(z)


def test_perturbed_entry_fails():
    m = build_L(2, 1)
    site = mutation_sites(m)[0]
    report = verify_relations(mutate(m, Mutation(*site, 1)))
    assert not report and report.relation


def test_most_random_mutations_are_detected():
    m = build_M(2)
    muts = random_mutations(m, 20, seed=1)
    assert muts == random_mutations(m, 20, seed=1)
    assert sum(not verify_relations(mutate(m, mu)) for mu in muts) >= 18


def test_grading_of_M():
    assert check_grading(build_M(2))


def test_json_round_trip():
    m = build_M(2)
    back = module_from_json(json.loads(dumps(m)))
    assert module_to_json(back) == module_to_json(m)
    assert character(back) == character(m)
