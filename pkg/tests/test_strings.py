import json
import warnings
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qhk.ar import band_words, string_algebra
from qhk.strings import (
    ProjectiveSummandWarning,
    QuiverRep,
    QuiverSpec,
    Walk,
    algebra_dimension,
    band_module,
    boundary_module,
    canonical_band,
    canonical_string,
    direct_sum_reps,
    enumerate_bands,
    enumerate_strings,
    hom_space,
    is_band,
    is_rep_map,
    is_string,
    iso_test,
    make_walk,
    min_presentation,
    parse_walk,
    projective,
    projective_summands,
    simple,
    string_module,
    tau,
    top_dims,
)

B2 = string_algebra(2)
TOY = QuiverSpec(vertices=(1, 2), arrows=(("a", 1, 2),), relations=())


def naive_is_string(q, letters):
    """No letter followed by its inverse, and no zero relation read in either direction."""
    for (x, e), (y, f) in zip(letters, letters[1:]):
        if x == y and e == -f:
            return False
    for i in range(len(letters)):
        for j in range(i + 1, len(letters) + 1):
            run = letters[i:j]
            if all(e == 1 for _, e in run) and q.is_zero_path([x for x, _ in run]):
                return False
            if all(e == -1 for _, e in run) and q.is_zero_path([x for x, _ in reversed(run)]):
                return False
    return True


def test_quiver_spec_round_trip():
    assert QuiverSpec.from_json(json.loads(json.dumps(B2.to_json()))) == B2
    assert "->" in B2.to_dot()
    with pytest.raises(ValueError):
        QuiverSpec(vertices=(0,), arrows=(("a", 0, 1),), relations=())


def test_algebra_dimension():
    assert algebra_dimension(B2) == 12
    assert algebra_dimension(string_algebra(3)) == 15


def test_projective_basis():
    p = projective(B2, 2)
    assert p.dim == 5
    assert sorted(p.labels[2]) == sorted(["e2", "delta", "beta2 alpha2"])
    assert sorted(p.labels[1]) == sorted(["alpha2", "alpha2 delta"])
    assert p.is_valid()


@pytest.mark.parametrize("i", [0, 1, 2])
def test_top_of_projective_is_simple(i):
    assert {v: d for v, d in top_dims(projective(B2, i)).items() if d} == {i: 1}
    pres = min_presentation(simple(B2, i))
    assert pres.p0 == (i,)


def test_strings_and_bands():
    assert is_string(B2, parse_walk(B2, "beta2 alpha2"))
    assert not is_string(B2, parse_walk(B2, "alpha1 alpha1^-1"))
    a, b = band_words(2)
    assert str(a) == "delta alpha2^-1 beta2^-1"
    assert is_band(B2, a) and is_band(B2, b)
    assert not is_band(B2, a * a)
    assert canonical_band(B2, a) != canonical_band(B2, b)


def test_walk_parsing():
    w = parse_walk(B2, "alpha2^{-1} beta1")
    assert w.letters == (("alpha2", -1), ("beta1", 1))
    assert (w.start, w.end) == (2, 0)
    assert str(w) == "alpha2^-1 beta1"
    assert parse_walk(B2, "e1") == Walk(1, 1, ())
    assert parse_walk(B2, "alpha2'").letters == (("alpha2", -1),)
    with pytest.raises(ValueError):
        parse_walk(B2, "alpha1 alpha1")


def test_trivial_strings_are_simples():
    strings = enumerate_strings(B2, 0)
    assert len(strings) == len(B2.vertices)
    for v in B2.vertices:
        assert iso_test(string_module(B2, Walk(v, v, ())), simple(B2, v)).verdict == "yes"


def test_string_module_dimension_vector():
    m = string_module(B2, parse_walk(B2, "beta2 alpha2"))
    assert m.dim_vector() == (0, 1, 2)


def test_band_module():
    a, _ = band_words(2)
    m = band_module(B2, a, 1)
    assert m.dim == 3 and m.is_valid()


def test_band_ab_counted_once():
    a, b = band_words(2)
    bands = enumerate_bands(B2, len(a) + len(b))
    keys = [canonical_band(B2, w) for w in bands]
    assert canonical_band(B2, a * b) == canonical_band(B2, b * a)
    assert keys.count(canonical_band(B2, a * b)) == 1
    assert all(is_band(B2, w) for w in bands)


def test_enumeration_matches_brute_force():
    letters = [(x, e) for x in B2.arrow_names for e in (1, -1)]
    found = set()
    for n in range(1, 4):
        for word in product(letters, repeat=n):
            try:
                w = make_walk(B2, word)
            except ValueError:
                continue
            if naive_is_string(B2, list(word)):
                found.add(canonical_string(w).letters)
    enum = {canonical_string(w).letters for w in enumerate_strings(B2, 3) if len(w)}
    assert enum == found


def test_iso_and_hom():
    s0, s1 = simple(B2, 0), simple(B2, 1)
    assert iso_test(s0, s0).verdict == "yes"
    assert iso_test(s0, s1).verdict == "no"
    p = projective(B2, 0)
    for blocks in hom_space(p, p):
        assert is_rep_map(p, p, blocks)


def test_direct_sum():
    s = direct_sum_reps(simple(B2, 0), simple(B2, 1))
    assert s.dim_vector() == (1, 1, 0)


def test_toy_tau():
    # arrow a from 1 to 2: S1 is projective, P2 has top S2 and socle S1
    assert projective(TOY, 1).dim == 1
    assert iso_test(tau(simple(TOY, 2)), simple(TOY, 1)).verdict == "yes"


def test_tau_of_projective_warns():
    with pytest.warns(ProjectiveSummandWarning):
        t = tau(projective(B2, 0))
    assert t.dim == 0
    assert projective_summands(direct_sum_reps(projective(B2, 1), simple(B2, 0))) == [1]


def test_tau_examples():
    m = string_module(B2, parse_walk(B2, "beta2 alpha2"))
    assert iso_test(tau(m), m).verdict == "yes"
    b1 = string_module(B2, parse_walk(B2, "beta1"))
    assert iso_test(tau(b1), string_module(B2, parse_walk(B2, "alpha1"))).verdict == "yes"
    assert iso_test(tau(tau(b1)), string_module(B2, parse_walk(B2, "delta beta2"))).verdict == "yes"
    assert iso_test(b1, boundary_module(B2, "gamma")).verdict == "yes"


def test_rep_json_round_trip():
    m = string_module(B2, parse_walk(B2, "delta beta2"))
    back = QuiverRep.from_json(B2, json.loads(json.dumps(m.to_json())))
    assert iso_test(back, m).verdict == "yes"


STRINGS_L2 = [w for w in enumerate_strings(B2, 4)]


@given(st.sampled_from(STRINGS_L2))
def test_string_modules_are_valid(w):
    m = string_module(B2, w)
    assert m.is_valid()
    assert m.dim == len(w) + 1
    assert is_string(B2, w.inverse())
    assert iso_test(m, string_module(B2, w.inverse())).verdict == "yes"


@given(st.sampled_from(enumerate_bands(B2, 9)), st.integers(1, 4))
def test_band_modules_are_valid(w, lam):
    m = band_module(B2, w, lam)
    assert m.is_valid() and m.dim == len(w)
