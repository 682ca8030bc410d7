import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubsing.heckealg import (
    Q, V, DivisionRemainderError, HeckeElement, KLTable, grothendieck, grothendieck_w0,
    hecke_mul, isobaric_dd, kl_element, kl_polynomial, mu_coefficient, r_polynomial,
    specialize_hilbert, t_inverse, t_simple_inverse, xy_ring,
)
from schubsing.klideal import torus_grading
from schubsing.perm import Permutation, all_perms, bruhat_leq, parse_one_line
from schubsing.polyengine import LaurentPolynomial as L

P = parse_one_line
q = L.var("q")


def random_element(rnd, n, terms=3):
    ps = list(all_perms(n))
    coeffs = {}
    for _ in range(terms):
        coeffs[rnd.choice(ps)] = L.const(rnd.randint(-2, 2)) + rnd.randint(-1, 1) * V ** rnd.randint(-2, 2)
    return HeckeElement(n, coeffs)


# Hecke algebra -------------------------------------------------------------------

def test_quadratic_relation():
    s = Permutation.simple(1, 3)
    ts = HeckeElement.T(s)
    assert ts * ts == HeckeElement.T(s).scale(Q - 1) + HeckeElement.one(3).scale(Q)


def test_simple_inverse():
    for i in (1, 2, 3):
        ts = HeckeElement.T(Permutation.simple(i, 4))
        assert hecke_mul(ts, t_simple_inverse(i, 4)) == HeckeElement.one(4)
        assert hecke_mul(t_simple_inverse(i, 4), ts) == HeckeElement.one(4)


def test_associativity_random_s4():
    rnd = random.Random(1)
    for _ in range(100):
        a, b, c = (random_element(rnd, 4) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_bar_is_involutive_ring_map_s4():
    rnd = random.Random(2)
    for _ in range(15):
        a, b = random_element(rnd, 4, 2), random_element(rnd, 4, 2)
        assert a.bar().bar() == a
        assert (a * b).bar() == a.bar() * b.bar()


def test_t_inverse():
    for w in all_perms(3):
        assert hecke_mul(HeckeElement.T(w), t_inverse(w)) == HeckeElement.one(3)


# R-polynomials ---------------------------------------------------------------------

def test_r_recursion_matches_inversion_s3():
    # oracle: (T_{w^-1})^-1 = eps_w q^-l(w) sum_x eps_x R_{x,w} T_x
    t = KLTable(3)
    for x, w in itertools.product(all_perms(3), repeat=2):
        direct = t_inverse(w.inverse()).coeff(x) * (Q ** w.length()) * ((-1) ** (w.length() + x.length()))
        rec = r_polynomial(x, w, t).subs({"q": Q})
        assert (direct - rec).is_zero()


def test_r_simple():
    assert r_polynomial(Permutation.identity(2), P("21")) == q - 1


def test_r_degree_s4():
    t = KLTable(4)
    for x, w in itertools.product(all_perms(4), repeat=2):
        r = t.r(x, w)
        if bruhat_leq(x, w):
            assert len(r) - 1 == w.length() - x.length()
        else:
            assert r == ()


# KL polynomials -------------------------------------------------------------------

def test_kl_golden():
    ident = Permutation.identity(4)
    assert kl_polynomial(ident, P("3412")) == 1 + q
    assert kl_polynomial(ident, P("4231")) == 1 + q
    assert mu_coefficient(ident, P("3412")) == 0          # l = 4, even
    assert mu_coefficient(P("1324"), P("3412")) == 1


def test_kl_trivial_for_smooth_s4():
    t = KLTable(4)
    ident = Permutation.identity(4)
    for w in all_perms(4):
        if str(w) not in ("3412", "4231"):
            assert t.p(ident, w) == (1,)


def test_kl_element_bar_invariant():
    t = KLTable(4)
    for w in (P("3412"), P("4231"), P("2143")):
        c = kl_element(w, t)
        assert c.bar() == c


def test_kl_element_unitriangular():
    t = KLTable(4)
    for w in all_perms(4):
        c = kl_element(w, t)
        assert c.coeff(w) == V ** (-w.length())
        assert all(bruhat_leq(x, w) for x in c.coeffs)


def test_kl_table_explicit_memo():
    t = KLTable(4)
    kl_polynomial(Permutation.identity(4), P("3412"), t)
    assert ((1, 2, 3, 4), (3, 4, 1, 2)) in t.memo
    fresh = KLTable(4)
    assert not fresh.memo and not fresh.rmemo


# Grothendieck polynomials -----------------------------------------------------------

def X(i):
    return L.var(f"x{i}")


def Y(j):
    return L.var(f"y{j}")


def _eq(a, b, n=3):
    return a.in_ring(xy_ring(n)) == b.in_ring(xy_ring(n))


def test_grothendieck_golden():
    # the denominator of G_231 is y_1^2 (not y_2^2): it follows from the product
    # formula and agrees with the Hilbert-series golden value
    assert _eq(grothendieck(P("231")), (X(2) - Y(1)) * (X(1) - Y(1)) / Y(1) ** 2)
    assert _eq(isobaric_dd(grothendieck_w0(3), 1), grothendieck(P("231")))
    assert _eq(grothendieck(P("312")), (X(1) - Y(1)) * (X(1) - Y(2)) / (Y(1) * Y(2)))
    assert _eq(grothendieck(P("132")), -(X(1) * X(2) - Y(1) * Y(2)) / (Y(1) * Y(2)))
    assert _eq(grothendieck(Permutation.identity(3)), L.const(1))


def test_grothendieck_path_independence():
    for n in (3, 4):
        for w in all_perms(n):
            assert _eq(grothendieck(w, choose=min), grothendieck(w, choose=max), n)


def test_grothendieck_memo_is_explicit():
    memo = {}
    grothendieck(P("1324"), memo=memo)
    assert (1, 3, 2, 4) in memo


small = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2),
                           st.integers(-1, 0)), max_size=4)


def _poly(ts):
    f = L.const(0)
    for c, a, b, d, e in ts:
        f = f + L.monomial({"x1": a, "x2": b, "x3": d, "y1": e}, c)
    return f


@settings(max_examples=100, deadline=None)
@given(small)
def test_isobaric_idempotent_and_braid(ts):
    f = _poly(ts)
    for i in (1, 2):
        once = isobaric_dd(f, i)
        assert _eq(isobaric_dd(once, i), once)
    lhs = isobaric_dd(isobaric_dd(isobaric_dd(f, 1), 2), 1)
    rhs = isobaric_dd(isobaric_dd(isobaric_dd(f, 2), 1), 2)
    assert _eq(lhs, rhs)


def test_isobaric_commuting():
    f = X(1) ** 2 * X(4) + 3 * X(3) * Y(2)
    assert _eq(isobaric_dd(isobaric_dd(f, 1), 3), isobaric_dd(isobaric_dd(f, 3), 1), 4)


def test_division_remainder_error_type():
    assert issubclass(DivisionRemainderError, ArithmeticError)


def test_specialize_hilbert_golden():
    t1, t2, t3 = (L.var(f"t{i}") for i in range(1, 4))
    tv = ("t1", "t2", "t3")
    assert specialize_hilbert(Permutation.identity(3), P("213")) == ((t3 - t1) * (t3 - t2) / t3 ** 2).in_ring(tv)
    assert specialize_hilbert(P("132"), P("132")) == ((t1 - t3) * (t1 - t2) / (t2 * t3)).in_ring(tv)


def test_specialize_hilbert_w_w_is_one():
    # I_{w,w} is generated by every variable of Z^(w): K is the full denominator, series 1
    tv = ("t1", "t2", "t3", "t4")
    for w in all_perms(4):
        denom = L.const(1)
        for d in torus_grading(w).values():
            denom = denom * (1 - L({tuple(d): 1}, tv))
        assert specialize_hilbert(w, w) == denom.in_ring(tv)
