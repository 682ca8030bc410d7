"""Exact sparse (Laurent) polynomials, Buchberger, and squarefree monomial ideals.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing here
ever touches floating point.  Exponents may be negative, which is how the
torus-graded Hilbert series numerators (``x1/y1`` and friends) are stored.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Exps = tuple  # tuple[int, ...]

__all__ = [
    "LaurentPolynomial", "TermOrder", "MonomialIdeal", "SimplicialComplex",
    "NotGroebnerError", "GradingError", "det", "buchberger", "reduced_groebner",
    "is_groebner", "normal_form", "initial_ideal", "prime_decomposition",
    "stanley_reisner", "k_polynomial", "multidegree", "regularity_cm",
    "standard_monomial_counts", "series_coefficients", "exact_rank",
    "ideals_equal",
]


class NotGroebnerError(ValueError):
    """Raised when an operation needs a Groebner basis and did not get one."""


class GradingError(ValueError):
    """Raised for non-positive gradings or unsupported grading input."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial over an ordered list of variables.

    ``terms`` maps exponent tuples (aligned with ``ring``) to nonzero
    coefficients.  Equality and hashing ignore variables that do not occur,
    so ``x`` over ``(x,)`` equals ``x`` over ``(x, y)``.
    """

    __slots__ = ("ring", "terms", "_key")

    def __init__(self, terms: Mapping[Exps, Coeff] | None = None,
                 ring: Sequence[str] = ()):
        self.ring = tuple(ring)
        k = len(self.ring)
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != k:
                        raise ValueError(f"exponent {e} does not match ring {self.ring}")
                    clean[tuple(e)] = _norm(c)
        self.terms = clean
        self._key = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "LaurentPolynomial":
        return cls({(1,): 1}, (name,))

    @classmethod
    def const(cls, c: Coeff) -> "LaurentPolynomial":
        return cls({(): c} if c else {}, ())

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Coeff = 1) -> "LaurentPolynomial":
        ring = tuple(exps)
        return cls({tuple(exps[v] for v in ring): coeff}, ring)

    @classmethod
    def coerce(cls, x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, str):
            return cls.var(x)
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {x!r} to a polynomial")

    # -- ring juggling ------------------------------------------------------
    def in_ring(self, ring: Sequence[str]) -> "LaurentPolynomial":
        """Re-express over ``ring``; every occurring variable must be present."""
        ring = tuple(ring)
        if ring == self.ring:
            return self
        pos = {v: i for i, v in enumerate(ring)}
        used = self.used_vars()
        missing = [v for v in used if v not in pos]
        if missing:
            raise ValueError(f"variables {missing} not in target ring")
        idx = [(pos[v], i) for i, v in enumerate(self.ring) if v in pos]
        out = {}
        k = len(ring)
        for e, c in self.terms.items():
            ne = [0] * k
            for j, i in idx:
                ne[j] = e[i]
            out[tuple(ne)] = c
        new = LaurentPolynomial.__new__(LaurentPolynomial)
        new.ring, new.terms, new._key = ring, out, None
        return new

    def used_vars(self) -> tuple:
        used = [False] * len(self.ring)
        for e in self.terms:
            for i, a in enumerate(e):
                if a:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring, used) if u)

    def trim(self) -> "LaurentPolynomial":
        return self.in_ring(self.used_vars())

    def _aligned(self, other: "LaurentPolynomial"):
        if self.ring == other.ring:
            return self.ring, self.terms, other.terms
        ring = self.ring + tuple(v for v in other.ring if v not in set(self.ring))
        return ring, self.in_ring(ring).terms, other.in_ring(ring).terms

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = LaurentPolynomial.coerce(other)
        ring, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial(out, ring)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-LaurentPolynomial.coerce(other))

    def __rsub__(self, other):
        return LaurentPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()}, self.ring)
        other = LaurentPolynomial.coerce(other)
        ring, a, b = self._aligned(other)
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPolynomial(out, ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            return self._mono_pow(k)
        result = LaurentPolynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _mono_pow(self, k: int) -> "LaurentPolynomial":
        (e, c), = self.terms.items()
        coeff = Fraction(c) ** k
        return LaurentPolynomial({tuple(a * k for a in e): coeff}, self.ring)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                _zerodiv()
            return self * (Fraction(1) / other)
        other = LaurentPolynomial.coerce(other)
        if other.is_monomial():
            return self * other._mono_pow(-1)
        return self.divexact(other)

    def divexact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ``ArithmeticError`` on a nonzero remainder."""
        other = LaurentPolynomial.coerce(other)
        if not other.terms:
            _zerodiv()
        ring, a, b = self._aligned(other)
        num = LaurentPolynomial(a, ring)
        den = LaurentPolynomial(b, ring)
        # shift both into honest polynomials
        shift = [0] * len(ring)
        for terms in (num.terms, den.terms):
            for e in terms:
                for i, x in enumerate(e):
                    shift[i] = min(shift[i], x)
        mono_n = LaurentPolynomial({tuple(-s for s in shift): 1}, ring)
        num = num * mono_n
        dmin = [min(e[i] for e in den.terms) for i in range(len(ring))]
        den_shift = LaurentPolynomial({tuple(-x for x in dmin): 1}, ring)
        den = den * den_shift
        order = TermOrder.lex(ring)
        q, r = _divide(num, [den], order)
        if r.terms:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q[0] * den_shift * LaurentPolynomial({tuple(shift): 1}, ring)

    # -- comparisons --------------------------------------------------------
    def _canon(self):
        if self._key is None:
            items = []
            for e, c in self.terms.items():
                mono = tuple((v, a) for v, a in zip(self.ring, e) if a)
                items.append((tuple(sorted(mono)), c))
            self._key = frozenset(items)
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._canon() == other._canon()

    def __hash__(self):
        return hash(self._canon())

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Coeff:
        return sum((c for e, c in self.terms.items() if not any(e)), 0)

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return min(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        if var not in self.ring:
            return 0
        i = self.ring.index(var)
        return max(e[i] for e in self.terms)

    def has_negative_exponents(self) -> bool:
        return any(a < 0 for e in self.terms for a in e)

    def coefficient(self, exps: Mapping[str, int]) -> Coeff:
        for e, c in self.terms.items():
            if all(exps.get(v, 0) == a for v, a in zip(self.ring, e)) and \
                    all(v in self.ring or a == 0 for v, a in exps.items()):
                return c
        return 0

    def monomials(self) -> list:
        """List of (dict var->exp, coeff) pairs, zero exponents dropped."""
        return [({v: a for v, a in zip(self.ring, e) if a}, c) for e, c in self.terms.items()]

    def graded_parts(self, weight: Callable[[dict], object] | None = None) -> dict:
        """Split into homogeneous pieces keyed by ``weight(monomial dict)``
        (standard total degree when ``weight`` is None)."""
        parts: dict = {}
        for e, c in self.terms.items():
            key = sum(e) if weight is None else weight(dict(zip(self.ring, e)))
            parts.setdefault(key, {})[e] = c
        return {k: LaurentPolynomial(t, self.ring) for k, t in parts.items()}

    def is_homogeneous(self, weight: Callable[[dict], object] | None = None) -> bool:
        return len(self.graded_parts(weight)) <= 1

    def linear_part(self) -> dict:
        """Coefficients of the degree-one monomials, keyed by variable."""
        out = {}
        for e, c in self.terms.items():
            if sum(e) == 1 and all(a >= 0 for a in e):
                out[self.ring[e.index(1)]] = c
        return out

    # -- substitution -------------------------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "LaurentPolynomial":
        """Substitute polynomials (or numbers, or variable names) for variables."""
        images = {v: LaurentPolynomial.coerce(p) for v, p in mapping.items()}
        keep = [i for i, v in enumerate(self.ring) if v not in images]
        keep_ring = tuple(self.ring[i] for i in keep)
        powcache: dict = {}

        def power(v, a):
            key = (v, a)
            if key not in powcache:
                p = images[v]
                powcache[key] = p ** a if a >= 0 else _inverse_monomial(p) ** (-a)
            return powcache[key]

        total = LaurentPolynomial.const(0)
        for e, c in self.terms.items():
            term = LaurentPolynomial({tuple(e[i] for i in keep): c}, keep_ring)
            for i, v in enumerate(self.ring):
                if v in images and e[i]:
                    term = term * power(v, e[i])
            total = total + term
        return total

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPolynomial":
        new_ring = tuple(mapping.get(v, v) for v in self.ring)
        if len(set(new_ring)) == len(new_ring):
            return LaurentPolynomial(self.terms, new_ring)
        return self.subs({v: w for v, w in mapping.items()})

    def evaluate(self, values: Mapping[str, Coeff]) -> Coeff:
        total: Coeff = 0
        for e, c in self.terms.items():
            t: Coeff = c
            for v, a in zip(self.ring, e):
                if a:
                    t = t * Fraction(values[v]) ** a
            total += t
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def cleared(self) -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Return (numerator, monomial denominator) with no negative exponents."""
        if not self.terms:
            return self, LaurentPolynomial.const(1)
        mins = [min(0, min(e[i] for e in self.terms)) for i in range(len(self.ring))]
        den = LaurentPolynomial({tuple(-m for m in mins): 1}, self.ring)
        return self * den, den

    # -- printing -----------------------------------------------------------
    def _sorted_items(self):
        if len(self.ring) == 1:
            return sorted(self.terms.items(), key=lambda t: t[0])
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self._sorted_items():
            mono = "*".join(v if a == 1 else f"{v}^{a}" for v, a in zip(self.ring, e) if a)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    def format_cleared(self) -> str:
        num, den = self.cleared()
        num, den = num.trim(), den.trim()
        if den == 1:
            return str(num)
        return f"({num})/({den})"


def _zerodiv():
    raise ZeroDivisionError("polynomial division by zero")


def _inverse_monomial(p: LaurentPolynomial) -> LaurentPolynomial:
    if not p.is_monomial():
        raise ValueError("negative power of a non-monomial")
    return p._mono_pow(-1)


# ---------------------------------------------------------------------------
# term orders, division, Buchberger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """Pure lexicographic order; ``priority[0]`` is the largest variable."""
    priority: tuple
    kind: str = "lex"

    @classmethod
    def lex(cls, priority: Iterable[str]) -> "TermOrder":
        return cls(tuple(priority))

    def prepare(self, f: LaurentPolynomial) -> LaurentPolynomial:
        g = LaurentPolynomial.coerce(f).in_ring(self.priority)
        if g.has_negative_exponents():
            raise ValueError("term orders apply to polynomials, not Laurent polynomials")
        return g

    def lead(self, f: LaurentPolynomial) -> tuple:
        """(exponent tuple over ``priority``, coefficient) of the initial term."""
        g = self.prepare(f)
        if not g.terms:
            raise ValueError("zero polynomial has no initial term")
        e = max(g.terms)
        return e, g.terms[e]

    def lead_monomial(self, f: LaurentPolynomial) -> LaurentPolynomial:
        e, _ = self.lead(f)
        return LaurentPolynomial({e: 1}, self.priority)

    def lead_term(self, f: LaurentPolynomial) -> LaurentPolynomial:
        e, c = self.lead(f)
        return LaurentPolynomial({e: c}, self.priority)


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _divide(f: LaurentPolynomial, divisors: Sequence[LaurentPolynomial], order: TermOrder,
            *, top_only: bool = False):
    """Multivariate division; earliest divisor wins.  Returns (quotients, remainder)."""
    ring = order.priority
    f = order.prepare(f)
    divs = [order.prepare(g) for g in divisors]
    leads = [(max(g.terms), g.terms[max(g.terms)]) for g in divs]
    quots: list[dict] = [dict() for _ in divs]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        e = max(p)
        c = p[e]
        for i, (le, lc) in enumerate(leads):
            if _divides(le, e):
                shift = tuple(x - y for x, y in zip(e, le))
                factor = _div(c, lc)
                quots[i][shift] = quots[i].get(shift, 0) + factor
                for ge, gc in divs[i].terms.items():
                    ne = tuple(x + y for x, y in zip(ge, shift))
                    s = p.get(ne, 0) - factor * gc
                    if s:
                        p[ne] = s
                    else:
                        p.pop(ne, None)
                break
        else:
            if top_only:
                rem.update(p)
                break
            rem[e] = c
            del p[e]
    return [LaurentPolynomial(q, ring) for q in quots], LaurentPolynomial(rem, ring)


def normal_form(f: LaurentPolynomial, gens: Sequence[LaurentPolynomial],
                order: TermOrder) -> LaurentPolynomial:
    """Fully reduced remainder of ``f`` modulo ``gens``."""
    return _divide(f, gens, order)[1]


def _spoly(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    ef, cf = max(f.terms), f.terms[max(f.terms)]
    eg, cg = max(g.terms), g.terms[max(g.terms)]
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = LaurentPolynomial({tuple(l - a for l, a in zip(lcm, ef)): Fraction(1) / cf}, f.ring)
    mg = LaurentPolynomial({tuple(l - a for l, a in zip(lcm, eg)): Fraction(1) / cg}, g.ring)
    return mf * f - mg * g


def _coprime(a: Exps, b: Exps) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _monic(f: LaurentPolynomial) -> LaurentPolynomial:
    lc = f.terms[max(f.terms)]
    if lc == 1:
        return f
    return LaurentPolynomial({e: _div(c, lc) for e, c in f.terms.items()}, f.ring)


def buchberger(gens: Sequence[LaurentPolynomial], order: TermOrder) -> list:
    """Groebner basis by Buchberger's algorithm.

    Pairs are processed first-in first-out; pairs with coprime lead
    monomials are skipped; new remainders are made monic.  The input
    generators come first, unchanged apart from dropping zeros.
    """
    G = [order.prepare(g) for g in gens]
    G = [g for g in G if g.terms]
    pairs = deque((i, j) for j in range(len(G)) for i in range(j))
    while pairs:
        i, j = pairs.popleft()
        if _coprime(max(G[i].terms), max(G[j].terms)):
            continue
        r = normal_form(_spoly(G[i], G[j]), G, order)
        if r.terms:
            G.append(_monic(r))
            k = len(G) - 1
            pairs.extend((i2, k) for i2 in range(k))
    return G


def reduced_groebner(gens: Sequence[LaurentPolynomial], order: TermOrder) -> list:
    """The reduced Groebner basis: unique for the ideal and the order."""
    G = buchberger(gens, order)
    G = sorted((_monic(g) for g in G), key=lambda g: max(g.terms))
    minimal: list = []
    for g in G:
        lg = max(g.terms)
        if any(_divides(max(h.terms), lg) for h in minimal):
            continue
        minimal = [h for h in minimal if not _divides(lg, max(h.terms))]
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lead = max(g.terms)
        tail = LaurentPolynomial({e: c for e, c in g.terms.items() if e != lead}, g.ring)
        tail = normal_form(tail, others, order) if others else tail
        out.append(LaurentPolynomial({lead: 1}, g.ring) + tail)
    return sorted(out, key=lambda g: max(g.terms), reverse=True)


def is_groebner(gens: Sequence[LaurentPolynomial], order: TermOrder) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero modulo ``gens``."""
    G = [order.prepare(g) for g in gens]
    G = [g for g in G if g.terms]
    for j in range(len(G)):
        for i in range(j):
            if _coprime(max(G[i].terms), max(G[j].terms)):
                continue
            if normal_form(_spoly(G[i], G[j]), G, order).terms:
                return False
    return True


def ideals_equal(a: Sequence[LaurentPolynomial], b: Sequence[LaurentPolynomial],
                 order: TermOrder) -> bool:
    return reduced_groebner(a, order) == reduced_groebner(b, order)


# ---------------------------------------------------------------------------
# determinants and exact linear algebra
# ---------------------------------------------------------------------------

def det(matrix: Sequence[Sequence[object]]) -> LaurentPolynomial:
    """Determinant of a square matrix of 0, 1, variable names, or polynomials.

    Cofactor expansion along the sparsest row, skipping zero entries.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    entries = [[_entry(x) for x in r] for r in rows]
    memo: dict = {}

    def rec(rs: tuple, cs: tuple) -> LaurentPolynomial:
        if not rs:
            return LaurentPolynomial.const(1)
        key = (rs, cs)
        if key in memo:
            return memo[key]
        # row with the fewest nonzero entries among the remaining columns
        best = min(rs, key=lambda r: sum(1 for c in cs if entries[r][c] is not None))
        rest = tuple(r for r in rs if r != best)
        total = LaurentPolynomial.const(0)
        ri = rs.index(best)
        for k, c in enumerate(cs):
            e = entries[best][c]
            if e is None:
                continue
            sub = rec(rest, cs[:k] + cs[k + 1:])
            if not sub.terms:
                continue
            term = sub * e
            total = total - term if (ri + k) % 2 else total + term
        memo[key] = total
        return total

    return rec(tuple(range(n)), tuple(range(n)))


def _entry(x):
    if isinstance(x, LaurentPolynomial):
        return x if x.terms else None
    if isinstance(x, str):
        return LaurentPolynomial.var(x)
    if x == 0:
        return None
    return LaurentPolynomial.const(x)


def exact_rank(rows: Sequence[Sequence[Coeff]]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / p
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal with minimalized generators, stored as exponent tuples."""
    variables: tuple
    gens: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_monomials(cls, variables: Sequence[str], monos: Iterable) -> "MonomialIdeal":
        variables = tuple(variables)
        exps = set()
        for m in monos:
            if isinstance(m, LaurentPolynomial):
                p = m.in_ring(variables)
                if not p.is_monomial():
                    raise ValueError(f"{m} is not a monomial")
                exps.add(next(iter(p.terms)))
            elif isinstance(m, (set, frozenset, list, tuple)) and all(isinstance(v, str) for v in m):
                exps.add(tuple(1 if v in m else 0 for v in variables))
            else:
                exps.add(tuple(m))
        return cls(variables, frozenset(_minimalize(exps)))

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for e in self.gens for a in e)

    def supports(self) -> list:
        """Generators as variable sets (squarefree ideals only)."""
        return [frozenset(v for v, a in zip(self.variables, e) if a) for e in self.sorted_gens()]

    def sorted_gens(self) -> list:
        return sorted(self.gens, reverse=True)

    def monomials(self) -> list:
        return [LaurentPolynomial({e: 1}, self.variables).trim() for e in self.sorted_gens()]

    def contains_monomial(self, e: Exps) -> bool:
        return any(_divides(g, e) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "<" + ", ".join(str(m) for m in self.monomials()) + ">"


def _minimalize(exps) -> list:
    exps = sorted(set(exps), key=sum)
    out: list = []
    for e in exps:
        if not any(_divides(g, e) for g in out):
            out.append(e)
    return out


def initial_ideal(gb: Sequence[LaurentPolynomial], order: TermOrder, *,
                  check: bool = True) -> MonomialIdeal:
    """Ideal of lead monomials of a Groebner basis."""
    if check and not is_groebner(gb, order):
        raise NotGroebnerError("input is not a Groebner basis for this order")
    leads = [order.lead(g)[0] for g in gb if LaurentPolynomial.coerce(g).terms]
    return MonomialIdeal(order.priority, frozenset(_minimalize(leads)))


def prime_decomposition(ideal: MonomialIdeal) -> list:
    """Minimal primes of a squarefree monomial ideal, as sorted variable tuples.

    These are the minimal vertex covers of the generator hypergraph.
    """
    if not ideal.is_squarefree:
        raise ValueError("prime decomposition needs a squarefree monomial ideal")
    edges = [frozenset(i for i, a in enumerate(e) if a) for e in ideal.gens]
    covers: set = set()

    def rec(chosen: frozenset, remaining: list):
        if not remaining:
            covers.add(chosen)
            return
        edge = min(remaining, key=len)
        for v in sorted(edge):
            c2 = chosen | {v}
            rec(c2, [e for e in remaining if v not in e])

    rec(frozenset(), edges)
    minimal = [c for c in covers if not any(o < c for o in covers)]
    out = [tuple(ideal.variables[i] for i in sorted(c)) for c in minimal]
    return sorted(out, key=lambda c: [ideal.variables.index(v) for v in c])


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on ``vertices`` given by its facets."""
    vertices: tuple
    facets: tuple

    def is_face(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def minimal_nonfaces(self) -> list:
        out = []
        for k in range(1, len(self.vertices) + 1):
            for s in itertools.combinations(self.vertices, k):
                fs = frozenset(s)
                if self.is_face(fs):
                    continue
                if any(m <= fs for m in out):
                    continue
                out.append(fs)
        return out


def stanley_reisner(ideal: MonomialIdeal, variables: Sequence[str] | None = None) -> SimplicialComplex:
    """Complex whose minimal non-faces are the generators of ``ideal``."""
    variables = tuple(variables) if variables is not None else ideal.variables
    ideal = MonomialIdeal.from_monomials(variables, ideal.supports())
    primes = prime_decomposition(ideal)
    facets = tuple(sorted((frozenset(v for v in variables if v not in p) for p in primes),
                          key=lambda f: sorted(variables.index(v) for v in f)))
    return SimplicialComplex(variables, facets)


# ---------------------------------------------------------------------------
# Hilbert series data
# ---------------------------------------------------------------------------

KPOLY_MAX_GENS = 25


def _check_positive(degs: list) -> None:
    """A grading is positive iff some linear functional is positive on all degrees."""
    if not degs:
        return
    if any(not any(d) for d in degs):
        raise GradingError("a variable has degree zero")
    from scipy.optimize import linprog

    r = len(degs[0])
    res = linprog(c=[0] * r, A_ub=[[-x for x in d] for d in degs], b_ub=[-1] * len(degs),
                  bounds=[(None, None)] * r, method="highs")
    if res.status != 0:
        raise GradingError("grading is not positive")


def k_polynomial(ideal: MonomialIdeal, grading: Mapping[str, Sequence[int]],
                 tvars: Sequence[str] | None = None) -> LaurentPolynomial:
    """K-polynomial of R/I by inclusion-exclusion over lcms of generators.

    ``sum over subsets S of (-1)^|S| t^deg(lcm S)``; equal lcms are merged as
    they appear, so the work is bounded by the number of distinct lcms.
    """
    if len(ideal.gens) > KPOLY_MAX_GENS:
        raise OverflowError(f"{len(ideal.gens)} generators exceeds the limit of {KPOLY_MAX_GENS}")
    degs = [tuple(grading[v]) for v in ideal.variables]
    _check_positive(degs)
    if tvars is None:
        r = len(degs[0]) if degs else 1
        tvars = tuple(f"t{i + 1}" for i in range(r))
    tvars = tuple(tvars)
    r = len(tvars)
    if any(len(d) != r for d in degs):
        raise GradingError("number of t-variables does not match the grading rank")
    acc: dict = {tuple(0 for _ in ideal.variables): 1}
    for g in ideal.sorted_gens():
        new = dict(acc)
        for m, c in acc.items():
            l = tuple(max(a, b) for a, b in zip(m, g))
            s = new.get(l, 0) - c
            if s:
                new[l] = s
            else:
                new.pop(l, None)
        acc = new
    out: dict = {}
    for m, c in acc.items():
        d = tuple(sum(a * deg[k] for a, deg in zip(m, degs)) for k in range(r))
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return LaurentPolynomial(out, tvars)


def _series_one_minus(e: int, var_index: int, nvars: int, top: int) -> dict:
    """Truncated power series of (1 - t)^e in one variable, degrees <= top."""
    out = {}
    for k in range(top + 1):
        if e >= 0:
            if k > e:
                break
            c = math.comb(e, k) * (-1) ** k
        else:
            c = math.comb(-e + k - 1, k)
        if c:
            exp = [0] * nvars
            exp[var_index] = k
            out[tuple(exp)] = c
    return out


def _truncated_mul(a: dict, b: dict, top: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        for e2, c2 in b.items():
            if d1 + sum(e2) > top:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def multidegree(K: LaurentPolynomial, max_degree: int = 64) -> LaurentPolynomial:
    """Lowest-degree part of K(1 - t_1, ..., 1 - t_r).

    Negative exponents become power series ``(1 - t)^-m``; the lowest
    nonzero homogeneous piece is found by raising the truncation degree.
    """
    if not K.terms:
        raise ValueError("multidegree of zero")
    ring = K.ring
    nv = len(ring)
    for top in range(max_degree + 1):
        total: dict = {}
        for e, c in K.terms.items():
            series = {tuple(0 for _ in ring): c}
            for i, a in enumerate(e):
                if a:
                    series = _truncated_mul(series, _series_one_minus(a, i, nv, top), top)
            for ex, cc in series.items():
                if sum(ex) == top:
                    s = total.get(ex, 0) + cc
                    if s:
                        total[ex] = s
                    else:
                        total.pop(ex, None)
        if total:
            return LaurentPolynomial(total, ring)
    raise ArithmeticError("no nonzero homogeneous part below the truncation bound")


def regularity_cm(ideal: MonomialIdeal) -> int:
    """deg K(S; t) - codim for a Cohen-Macaulay squarefree quotient (caller's promise)."""
    primes = prime_decomposition(ideal)
    sizes = {len(p) for p in primes}
    if len(sizes) != 1:
        raise ValueError("ideal is not equidimensional")
    K = k_polynomial(ideal, {v: (1,) for v in ideal.variables}, ("t",))
    return K.total_degree() - sizes.pop()


def standard_monomial_counts(ideal: MonomialIdeal, top: int) -> list:
    """Number of monomials of each degree 0..top lying outside ``ideal``."""
    nv = len(ideal.variables)
    counts = []
    for d in range(top + 1):
        c = 0
        for combo in itertools.combinations_with_replacement(range(nv), d):
            e = [0] * nv
            for i in combo:
                e[i] += 1
            if not ideal.contains_monomial(tuple(e)):
                c += 1
        counts.append(c)
    return counts


def series_coefficients(numerator: LaurentPolynomial, nvars: int, top: int) -> list:
    """Coefficients of numerator(t) / (1 - t)^nvars up to degree ``top``."""
    p = numerator.trim()
    if p.ring and len(p.ring) != 1:
        raise ValueError("expected a univariate numerator")
    coeffs = {(e[0] if e else 0): c for e, c in p.terms.items()}
    if nvars == 0:
        return [coeffs.get(d, 0) for d in range(top + 1)]
    out = []
    for d in range(top + 1):
        out.append(sum(c * math.comb(d - k + nvars - 1, nvars - 1)
                       for k, c in coeffs.items() if 0 <= k <= d))
    return out
