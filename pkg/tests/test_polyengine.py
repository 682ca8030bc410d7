import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubsing.klideal import generic_matrix, order_antidiagonal, order_row_lex
from schubsing.polyengine import (
    GradingError, LaurentPolynomial as L, MonomialIdeal, NotGroebnerError, TermOrder,
    buchberger, det, exact_rank, ideals_equal, initial_ideal, is_groebner, k_polynomial,
    multidegree, normal_form, prime_decomposition, reduced_groebner, regularity_cm,
    series_coefficients, stanley_reisner, standard_monomial_counts,
)

x, y, z = L.var("x"), L.var("y"), L.var("z")
VARS3 = [f"z{i}{j}" for i in range(1, 4) for j in range(1, 4)]


def running_example_gens():
    rows = generic_matrix(3).top_down()
    return [det([[L.var(rows[i][j]) for j in c] for i in r])
            for r in itertools.combinations(range(3), 2) for c in itertools.combinations(range(3), 2)]


def running_initial():
    return initial_ideal(running_example_gens(), order_row_lex(VARS3, 3))


# arithmetic -----------------------------------------------------------------

small_polys = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2), st.integers(-1, 1)),
    max_size=4,
).map(lambda ts: sum((L.monomial({"x": a, "y": b, "z": c}, k) for k, a, b, c in ts), L.const(0)))


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == L.const(0)


@given(small_polys, small_polys)
def test_divexact_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


def test_laurent_monomial_powers():
    assert (x ** -2) * (x ** 2) == L.const(1)
    assert (x / y) * y == x
    with pytest.raises(Exception):
        (x + y) ** -1


def test_cleared_form():
    f = (x - y) * (x - z) / (y * z)
    num, den = f.cleared()
    assert num == (x - y) * (x - z)
    assert den == y * z


def test_subs_and_evaluate():
    f = x * x - 2 * y
    assert f.subs({"x": y + 1}) == y * y + 1
    assert f.evaluate({"x": 3, "y": 1}) == 7


# determinants and ranks -------------------------------------------------------

def test_det_2x2_lead_term():
    m = [[L.var("z21"), L.var("z22")], [L.var("z11"), L.var("z12")]]
    d = det(m)
    assert d == L.var("z21") * L.var("z12") - L.var("z22") * L.var("z11")
    order = order_row_lex(VARS3, 3)
    assert order.lead_monomial(d) == L.var("z11") * L.var("z22")


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_fraction_rank(rows):
    d = det([[L.const(a) for a in r] for r in rows])
    full = exact_rank(rows) == 3
    assert (d.constant_term() != 0) == full


def test_exact_rank_fraction():
    assert exact_rank([[Fraction(1, 2), 1], [1, 2]]) == 1


# Groebner bases ---------------------------------------------------------------

def test_lex_changes_initial_ideal():
    f = L.var("x1") * L.var("x2") - L.var("x3") ** 2
    i1 = initial_ideal([f], TermOrder.lex(["x1", "x2", "x3"]))
    i2 = initial_ideal([f], TermOrder.lex(["x3", "x1", "x2"]))
    assert i1.is_squarefree and [str(m) for m in i1.monomials()] == ["x1*x2"]
    assert not i2.is_squarefree and [str(m) for m in i2.monomials()] == ["x3^2"]


def test_simple_groebner_check():
    o = TermOrder.lex(["x", "y"])
    # S(x+y, x) = y is not reducible by the lead terms {x}
    assert not is_groebner([x + y, x], o)
    assert is_groebner(buchberger([x + y, x], o), o)
    assert ideals_equal(buchberger([x + y, x], o), [x, y], o)
    assert not is_groebner([x * x + y, x * y], o)
    gb = buchberger([x * x + y, x * y], o)
    assert is_groebner(gb, o)
    assert ideals_equal(gb, [x * x + y, x * y], o)


def test_normal_form_of_ideal_member_vanishes():
    o = TermOrder.lex(["x", "y", "z"])
    gb = reduced_groebner([x * y - z, y * z - x], o)
    assert normal_form((x * y - z) * (x + 3) + (y * z - x) * y, gb, o).is_zero()


def test_initial_ideal_rejects_non_gb():
    with pytest.raises(NotGroebnerError):
        initial_ideal([x * x + y, x * y], TermOrder.lex(["x", "y"]))


def test_generic_minors_are_groebner_in_both_orders():
    gens = running_example_gens()
    assert is_groebner(gens, order_row_lex(VARS3, 3))
    assert is_groebner(gens, order_antidiagonal(VARS3, 3))


# running example --------------------------------------------------------------

QUADRICS = {"z11*z22", "z11*z23", "z11*z32", "z11*z33", "z12*z23", "z12*z33",
            "z21*z32", "z21*z33", "z22*z33"}
COMPONENTS = [{"z11", "z12", "z21", "z22"}, {"z11", "z12", "z21", "z33"}, {"z11", "z12", "z32", "z33"},
              {"z11", "z21", "z23", "z33"}, {"z11", "z23", "z32", "z33"}, {"z22", "z23", "z32", "z33"}]


def _mono_set(ideal):
    return {"*".join(sorted(v for v, a in zip(ideal.variables, e) if a)) for e in ideal.gens}


def test_running_example_initial_ideal():
    assert _mono_set(running_initial()) == QUADRICS


def test_running_example_primes_and_facets():
    I = running_initial()
    primes = [set(p) for p in prime_decomposition(I)]
    assert sorted(map(sorted, primes)) == sorted(map(sorted, COMPONENTS))
    cx = stanley_reisner(I, VARS3)
    assert len(cx.facets) == 6
    assert {frozenset(VARS3) - frozenset(f) for f in cx.facets} == {frozenset(c) for c in COMPONENTS}


def test_running_example_multidegree_is_plus_diagram_sum():
    I = running_initial()
    grading = {f"z{i}{j}": tuple([int(k == i - 1) for k in range(3)] + [-int(k == j - 1) for k in range(3)])
               for i in range(1, 4) for j in range(1, 4)}
    K = k_polynomial(I, grading, ("x1", "x2", "x3", "y1", "y2", "y3"))
    total = L.const(0)
    for comp in COMPONENTS:
        term = L.const(1)
        for v in comp:
            term = term * (L.var(f"x{v[1]}") - L.var(f"y{v[2]}"))
        total = total + term
    md = multidegree(K)
    assert md == total.in_ring(md.ring)


def test_running_example_standard_series():
    I = running_initial()
    K = k_polynomial(I, {v: (1,) for v in VARS3}, ("t",))
    t = L.var("t")
    assert K == 1 - 9 * t ** 2 + 16 * t ** 3 - 9 * t ** 4 + t ** 6
    assert regularity_cm(I) == 2
    assert standard_monomial_counts(I, 5) == series_coefficients(K, 9, 5)


# monomial ideals and K-polynomials ------------------------------------------------

def _xy_grading(vars2):
    return {v: tuple([int(k == int(v[1]) - 1) for k in range(2)] + [-int(k == int(v[2]) - 1) for k in range(2)])
            for v in vars2}


def test_k_polynomial_two_quadrics_agree():
    vars2 = ["z11", "z12", "z21", "z22"]
    gr = _xy_grading(vars2)
    tv = ("x1", "x2", "y1", "y2")
    a = k_polynomial(MonomialIdeal.from_monomials(vars2, [L.var("z11") * L.var("z22")]), gr, tv)
    b = k_polynomial(MonomialIdeal.from_monomials(vars2, [L.var("z12") * L.var("z21")]), gr, tv)
    x1, x2, y1, y2 = (L.var(v) for v in tv)
    p, q = 1 - x1 / y1, 1 - x2 / y2
    assert a == (p + q - p * q).in_ring(tv)
    assert a == b
    assert multidegree(a) == (x1 - y1 + x2 - y2).in_ring(a.ring)


def test_principal_quadric_regularity():
    I = MonomialIdeal.from_monomials(["z11", "z22"], [L.var("z11") * L.var("z22")])
    assert k_polynomial(I, {"z11": (1,), "z22": (1,)}, ("t",)).total_degree() == 2
    assert regularity_cm(I) == 1


def test_nonpositive_grading_rejected():
    I = MonomialIdeal.from_monomials(["a", "b"], [L.var("a") * L.var("b")])
    with pytest.raises(GradingError):
        k_polynomial(I, {"a": (1,), "b": (-1,)}, ("t",))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.frozensets(st.sampled_from("abcde"), min_size=1, max_size=3), min_size=1, max_size=5))
def test_squarefree_series_matches_monomial_count(supports):
    vs = list("abcde")
    I = MonomialIdeal.from_monomials(vs, [set(s) for s in supports])
    K = k_polynomial(I, {v: (1,) for v in vs}, ("t",))
    assert standard_monomial_counts(I, 4) == series_coefficients(K, 5, 4)
    # facets are exactly the complements of minimal primes
    cx = stanley_reisner(I, vs)
    assert {frozenset(vs) - frozenset(f) for f in cx.facets} == {frozenset(p) for p in prime_decomposition(I)}


def test_series_coefficients_without_variables():
    t = L.var("t")
    assert series_coefficients(1 + t, 0, 3) == [1, 1, 0, 0]
