import pytest
from hypothesis import given, settings

from schubsing.pattern import contains_pattern
from schubsing.perm import Permutation, all_perms, parse_one_line, reflection_count
from schubsing.singclass import (
    LCI_PATTERNS, classify, conjectural_locus, is_factorial, is_gorenstein, is_lci, is_smooth,
    is_smooth_at, singular_locus, singular_locus_bruteforce,
)

from .helpers import perms

P = parse_one_line


def test_smallest_singular():
    assert not is_smooth(P("3412"))
    assert not is_smooth(P("4231"))
    assert not is_smooth_at(Permutation.identity(4), P("4231"))


def test_smooth_counts_match_count_oracle():
    for n in range(1, 7):
        ident = Permutation.identity(n)
        a = sum(is_smooth(w) for w in all_perms(n))
        b = sum(reflection_count(ident, w) == w.length() for w in all_perms(n))
        assert a == b
    # known counts of smooth permutations
    assert [sum(is_smooth(w) for w in all_perms(n)) for n in range(1, 7)] == [1, 2, 6, 22, 88, 366]


def test_singular_locus_golden():
    assert singular_locus(P("461253")) == sorted([P("142653"), P("241365"), P("143265")], key=lambda p: p.word)
    assert singular_locus(P("523614")) == sorted([P("215634"), P("321546")], key=lambda p: p.word)
    for w in ("461253", "523614"):
        assert singular_locus(P(w)) == singular_locus_bruteforce(P(w))


@pytest.mark.slow
def test_singular_locus_matches_bruteforce_s5():
    for w in all_perms(5):
        assert singular_locus(w) == singular_locus_bruteforce(w)


@settings(max_examples=25, deadline=None)
@given(perms(6, 6))
def test_singular_locus_random_s6(w):
    assert singular_locus(w) == singular_locus_bruteforce(w)


def test_gorenstein_golden():
    assert not is_gorenstein(P("42513"))
    assert is_gorenstein(P("526413"))


def test_lci_patterns_are_non_lci():
    for p in LCI_PATTERNS:
        assert not is_lci(P(p))


def test_factorial():
    assert not is_factorial(P("3412"))
    assert not is_factorial(P("4231"))
    assert is_factorial(P("2143"))


@settings(max_examples=60, deadline=None)
@given(perms(1, 6))
def test_implication_chain(w):
    s, g, l, f = is_smooth(w), is_gorenstein(w), is_lci(w), is_factorial(w)
    assert not s or (l and f)
    assert not l or g
    assert not f or g


def test_conjectural_locus_flags():
    loc = conjectural_locus("lci", P("52341"))
    assert loc.conjecture is True
    assert P("21354") in loc.components
    with pytest.raises(ValueError):
        conjectural_locus("smooth", P("3412"))


def test_conjectural_gorenstein_consistent_s5():
    for w in all_perms(5):
        assert (not conjectural_locus("gorenstein", w).components) == is_gorenstein(w)


def test_classify_report():
    rep = classify(P("461253"))
    assert not rep.smooth
    assert rep.witnesses["smooth"]["pattern"] in ("3412", "4231")
    d = rep.to_json()
    assert d["w"] == "461253" and d["smooth"] is False
    assert contains_pattern(P(d["witnesses"]["smooth"]["pattern"]), P("461253"))
