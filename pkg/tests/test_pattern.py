import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubsing.pattern import (
    GORENSTEIN_FAMILIES, SINGULAR_FAMILIES, SINGULAR_FAMILIES_STRICT_A, classical_embeddings,
    contains_pattern, family_instances, instantiate_family, interval_contains,
    interval_embeddings, interval_poset_isomorphic, maximal_elements, order_ideal_member,
    phi_of_u, seg,
)
from schubsing.perm import Permutation, all_perms, bruhat_leq, parse_one_line

from .helpers import perms

P = parse_one_line


def test_embedding_golden_data():
    v, w = P("45132"), P("781295634")
    assert (1, 2, 4, 6, 8) in [tuple(e) for e in classical_embeddings(v, w)]
    assert phi_of_u(P("21453"), w, (1, 2, 4, 6, 8)) == P("321798654")


def test_interval_embedding_golden_and_isomorphism():
    u, v, w = P("21453"), P("45132"), P("781295634")
    embs = interval_embeddings(u, v, w)
    assert any(tuple(e.phi) == (1, 2, 4, 6, 8) for e in embs)
    assert interval_poset_isomorphic(u, v, P("321798654"), w)


def test_interval_avoidance_despite_classical_containment():
    w = P("413625")
    assert contains_pattern(P("31524"), w)
    assert interval_embeddings(P("21534"), P("31524"), w) == []
    assert not interval_contains(P("21534"), P("31524"), w)


def test_inversions_are_21_patterns_s4():
    for w in all_perms(4):
        assert len(classical_embeddings(P("21"), w)) == w.length()


@settings(max_examples=60, deadline=None)
@given(perms(2, 4), perms(5, 6), st.randoms(use_true_random=False))
def test_phi_of_u_is_permutation(u, w, rnd):
    m = u.n
    phi = sorted(rnd.sample(range(1, w.n + 1), m))
    x = phi_of_u(u, w, phi)
    assert sorted(x.word) == list(range(1, w.n + 1))
    # outside phi nothing moves
    assert all(x(i) == w(i) for i in range(1, w.n + 1) if i not in phi)


@settings(max_examples=40, deadline=None)
@given(perms(3, 4), perms(3, 4), perms(5, 6))
def test_embeddings_respect_poset_isomorphism(u, v, w):
    if u.n != v.n or not bruhat_leq(u, v):
        return
    for e in interval_embeddings(u, v, w)[:3]:
        assert interval_poset_isomorphic(u, v, e.bottom, w)


def test_seg():
    assert seg(4, 2) == [4, 3, 2]
    assert seg(1, 2) == []


def test_family_templates():
    f1, f2, f3 = SINGULAR_FAMILIES
    assert instantiate_family(f1, 1, 1) == (P("2143"), P("4231"))
    assert instantiate_family(f2, 0, 0) == (P("1324"), P("3412"))
    assert instantiate_family(f3, 1) == (P("14325"), P("45312"))
    for fam in SINGULAR_FAMILIES + GORENSTEIN_FAMILIES:
        for _, u, v in family_instances(fam, 7):
            assert bruhat_leq(u, v) and v.length() - u.length() >= 1
    with pytest.raises(ValueError):
        instantiate_family(GORENSTEIN_FAMILIES[0], 1, 1)   # a = b excluded


def test_strict_family_range_misses_45312():
    w = P("45312")
    ident = Permutation.identity(5)
    assert order_ideal_member(SINGULAR_FAMILIES, P("14325"), w) is not None
    assert order_ideal_member(SINGULAR_FAMILIES_STRICT_A, ident, w) is None


def test_order_ideal_membership_examples():
    wit = order_ideal_member(SINGULAR_FAMILIES, Permutation.identity(4), P("3412"))
    assert wit is not None and wit.family == "singular(2)" and tuple(wit.params) == (0, 0)
    assert order_ideal_member(SINGULAR_FAMILIES, P("142653"), P("461253")) is not None
    assert order_ideal_member(SINGULAR_FAMILIES, Permutation.identity(4), P("2143")) is None


def test_maximal_elements():
    got = maximal_elements([P("1234"), P("2134"), P("1243"), P("2143")])
    assert got == [P("2143")]
    assert maximal_elements([P("2134"), P("1243")]) == [P("1243"), P("2134")]


def test_random_embeddings_found_by_construction():
    rnd = random.Random(7)
    for _ in range(30):
        w = Permutation(rnd.sample(range(1, 8), 7))
        idx = sorted(rnd.sample(range(1, 8), 4))
        vals = [w(i) for i in idx]
        ranks = sorted(vals)
        v = Permutation(ranks.index(a) + 1 for a in vals)
        assert tuple(idx) in [tuple(e) for e in classical_embeddings(v, w)]
