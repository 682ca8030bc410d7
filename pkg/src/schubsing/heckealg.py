"""Hecke algebra of S_n, R- and Kazhdan-Lusztig polynomials, Grothendieck polynomials.

Hecke coefficients live in Z[v, v^-1] with v = q^(1/2), stored as
:class:`LaurentPolynomial` in the variable ``v``.  R- and P-polynomials are
computed internally as integer coefficient tuples (index = power of q) and
handed out as polynomials in ``q``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .perm import Permutation, all_perms, bruhat_interval, bruhat_leq, bruhat_lower_covers
from .polyengine import LaurentPolynomial

__all__ = [
    "HeckeElement", "KLTable", "BruhatIndex", "hecke_mul", "r_polynomial",
    "kl_polynomial", "kl_element", "isobaric_dd", "grothendieck", "specialize_hilbert",
    "xy_ring", "DivisionRemainderError", "mu_coefficient", "t_inverse",
    "t_simple_inverse", "grothendieck_w0", "V", "Q",
]

V = LaurentPolynomial.var("v")
Q = V * V
ONE = LaurentPolynomial.const(1)


# ---------------------------------------------------------------------------
# Hecke algebra
# ---------------------------------------------------------------------------

class HeckeElement:
    """Finite Z[v, v^-1]-combination of the standard basis T_x."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Permutation, LaurentPolynomial] | None = None):
        self.n = n
        self.coeffs = {x: LaurentPolynomial.coerce(c) for x, c in (coeffs or {}).items()
                       if LaurentPolynomial.coerce(c).terms}

    @classmethod
    def T(cls, w: Permutation) -> "HeckeElement":
        return cls(w.n, {w: ONE})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls.T(Permutation.identity(n))

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out[x] + c if x in out else c
        return HeckeElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPolynomial.const(-1))

    def scale(self, c) -> "HeckeElement":
        c = LaurentPolynomial.coerce(c)
        return HeckeElement(self.n, {x: a * c for x, a in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def coeff(self, x: Permutation) -> LaurentPolynomial:
        return self.coeffs.get(x, LaurentPolynomial.const(0))

    def left_mul_simple(self, i: int) -> "HeckeElement":
        """T_{s_i} * self."""
        out: dict = {}
        q_minus_1 = Q - 1
        for w, c in self.coeffs.items():
            sw = w.swap_values(i, i + 1)
            if sw.length() > w.length():
                _acc(out, sw, c)
            else:
                _acc(out, w, c * q_minus_1)
                _acc(out, sw, c * Q)
        return HeckeElement(self.n, out)

    def bar(self) -> "HeckeElement":
        """sum a_x T_x  ->  sum bar(a_x) (T_{x^-1})^-1, with bar(v) = v^-1."""
        total = HeckeElement(self.n)
        for x, c in self.coeffs.items():
            cb = c.subs({"v": V ** -1}) if "v" in c.ring else c
            total = total + t_inverse(x.inverse()).scale(cb)
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = [f"({c})*T[{x}]" for x, c in sorted(self.coeffs.items(),
                                                   key=lambda t: (t[0].length(), t[0].word))]
        return " + ".join(parts)

    __repr__ = __str__


def _acc(d: dict, k, c):
    if k in d:
        s = d[k] + c
        if s.terms:
            d[k] = s
        else:
            del d[k]
    elif c.terms:
        d[k] = c


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product, expanding each T_x of ``a`` as T_{s_1}...T_{s_k} along a reduced word."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    total = HeckeElement(a.n)
    for x, c in a.coeffs.items():
        acc = b
        for i in reversed(x.reduced_word()):
            acc = acc.left_mul_simple(i)
        total = total + acc.scale(c)
    return total


def t_simple_inverse(i: int, n: int) -> HeckeElement:
    """(T_s)^-1 = q^-1 T_s - (1 - q^-1) T_id."""
    qinv = V ** -2
    s = Permutation.simple(i, n)
    return HeckeElement(n, {s: qinv, Permutation.identity(n): qinv - 1})


def t_inverse(w: Permutation) -> HeckeElement:
    """(T_w)^-1 = (T_{s_k})^-1 ... (T_{s_1})^-1 for w = s_1 ... s_k reduced."""
    n = w.n
    out = HeckeElement.one(n)
    for i in w.reduced_word():
        out = hecke_mul(t_simple_inverse(i, n), out)
    return out


# ---------------------------------------------------------------------------
# Bruhat index for fast interval work
# ---------------------------------------------------------------------------

class BruhatIndex:
    """All of S_n with bitset down-sets (x <= w) and up-sets, for small n."""

    def __init__(self, n: int):
        self.n = n
        perms = sorted(all_perms(n), key=lambda p: (p.length(), p.word))
        self.perms = perms
        self.index = {p: k for k, p in enumerate(perms)}
        down = [0] * len(perms)
        for k, p in enumerate(perms):
            m = 1 << k
            for c in bruhat_lower_covers(p):
                m |= down[self.index[c]]
            down[k] = m
        self.down = down
        up = [0] * len(perms)
        for k, m in enumerate(down):
            bit = 1 << k
            mm = m
            while mm:
                low = mm & -mm
                up[low.bit_length() - 1] |= bit
                mm ^= low
        self.up = up

    def leq(self, x: Permutation, w: Permutation) -> bool:
        return bool(self.down[self.index[w]] >> self.index[x] & 1)

    def interval(self, x: Permutation, w: Permutation) -> list:
        m = self.down[self.index[w]] & self.up[self.index[x]]
        return [self.perms[i] for i in _bits(m)]


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


# ---------------------------------------------------------------------------
# R-polynomials and Kazhdan-Lusztig polynomials
# ---------------------------------------------------------------------------

def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _ptrim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _to_q(c: tuple) -> LaurentPolynomial:
    return LaurentPolynomial({(k,): a for k, a in enumerate(c) if a}, ("q",))


@dataclass
class KLTable:
    """Explicit memo tables for R_{x,w} and P_{x,w}, keyed by word pairs.

    With ``n <= index_limit`` a :class:`BruhatIndex` is built lazily and used
    for interval enumeration; beyond that, intervals come from a search
    along lower covers.
    """
    n: int
    rmemo: dict = field(default_factory=dict)
    memo: dict = field(default_factory=dict)
    index_limit: int = 7
    _index: BruhatIndex | None = field(default=None, repr=False)

    @property
    def index(self) -> BruhatIndex | None:
        if self._index is None and self.n <= self.index_limit:
            self._index = BruhatIndex(self.n)
        return self._index

    def leq(self, x: Permutation, w: Permutation) -> bool:
        idx = self.index
        return idx.leq(x, w) if idx is not None else bruhat_leq(x, w)

    # R ---------------------------------------------------------------------
    def r(self, x: Permutation, w: Permutation) -> tuple:
        key = (x.word, w.word)
        hit = self.rmemo.get(key)
        if hit is not None:
            return hit
        stack = [(x, w)]
        while stack:
            x1, w1 = stack[-1]
            k1 = (x1.word, w1.word)
            if k1 in self.rmemo:
                stack.pop()
                continue
            if x1 == w1:
                self.rmemo[k1] = (1,)
                stack.pop()
                continue
            if not self.leq(x1, w1):
                self.rmemo[k1] = ()
                stack.pop()
                continue
            i = w1.descents()[0]                      # right descent: w1 s < w1
            ws = w1.swap_positions(i, i + 1)
            xs = x1.swap_positions(i, i + 1)
            if x1(i) > x1(i + 1):                     # xs < x
                need = [(xs, ws)]
            else:
                need = [(x1, ws), (xs, ws)]
            missing = [p for p in need if (p[0].word, p[1].word) not in self.rmemo]
            if missing:
                stack.extend(missing)
                continue
            if len(need) == 1:
                val = self.rmemo[(xs.word, ws.word)]
            else:
                a = self.rmemo[(x1.word, ws.word)]
                b = self.rmemo[(xs.word, ws.word)]
                val = _padd(_pmul((-1, 1), a), _pmul((0, 1), b))
            self.rmemo[k1] = val
            stack.pop()
        return self.rmemo[key]

    # P ---------------------------------------------------------------------
    def interval(self, x: Permutation, w: Permutation) -> list:
        idx = self.index
        return idx.interval(x, w) if idx is not None else bruhat_interval(x, w)

    def p(self, x: Permutation, w: Permutation) -> tuple:
        key = (x.word, w.word)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if not self.leq(x, w):
            return ()
        self._fill(x, w)
        return self.memo[key]

    def _fill(self, x0: Permutation, w: Permutation) -> None:
        """Solve for P_{y,w} for all y in [x0, w], longest first."""
        ivl = self.interval(x0, w)
        ivl.sort(key=lambda p: -p.length())
        lw = w.length()
        members = set(ivl)
        for y in ivl:
            key = (y.word, w.word)
            if key in self.memo:
                continue
            if y == w:
                self.memo[key] = (1,)
                continue
            d = lw - y.length()
            width = (d - 1) // 2 + 1          # only degrees <= (d-1)/2 are needed
            acc = [0] * width
            if width > 0:
                for z in self._above(y, w, members):
                    pz = self.memo[(z.word, w.word)]
                    ry = self.r(y, z)
                    for i, a in enumerate(ry[:width]):
                        if a:
                            for j, b in enumerate(pz[:width - i]):
                                acc[i + j] += a * b
            self.memo[key] = _ptrim(-c for c in acc)

    def _above(self, y: Permutation, w: Permutation, members: set):
        idx = self.index
        if idx is not None:
            m = idx.up[idx.index[y]] & idx.down[idx.index[w]] & ~(1 << idx.index[y])
            return [idx.perms[i] for i in _bits(m)]
        return [z for z in members if z != y and self.leq(y, z)]

    def p_all_below(self, w: Permutation) -> dict:
        """P_{x,w} for every x <= w."""
        self._fill(Permutation.identity(w.n), w)
        return {x: self.memo[(x.word, w.word)] for x in self.interval(Permutation.identity(w.n), w)}


def r_polynomial(x: Permutation, w: Permutation, table: KLTable | None = None) -> LaurentPolynomial:
    table = table or KLTable(x.n)
    return _to_q(table.r(x, w))


def kl_polynomial(x: Permutation, w: Permutation, table: KLTable | None = None) -> LaurentPolynomial:
    """P_{x,w}: bounded-degree solution of q^d P(1/q) = sum_{x<=z<=w} R_{x,z} P_{z,w}."""
    table = table or KLTable(x.n)
    return _to_q(table.p(x, w))


def mu_coefficient(x: Permutation, w: Permutation, table: KLTable | None = None) -> int:
    """Coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w} (zero if that is not an integer)."""
    table = table or KLTable(x.n)
    d = w.length() - x.length()
    if d <= 0 or d % 2 == 0:
        return 0
    c = table.p(x, w)
    k = (d - 1) // 2
    return c[k] if k < len(c) else 0


def kl_element(w: Permutation, table: KLTable | None = None) -> HeckeElement:
    """C'_w = v^-l(w) sum_{x<=w} P_{x,w}(q) T_x."""
    table = table or KLTable(w.n)
    scale = V ** (-w.length())
    out = {}
    for x, c in table.p_all_below(w).items():
        poly = LaurentPolynomial({(2 * k,): a for k, a in enumerate(c) if a}, ("v",))
        out[x] = poly * scale
    return HeckeElement(w.n, out)


# ---------------------------------------------------------------------------
# Grothendieck polynomials
# ---------------------------------------------------------------------------

class DivisionRemainderError(ArithmeticError):
    """An isobaric divided difference did not divide exactly."""


def xy_ring(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))


def isobaric_dd(f: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """pi_i f = (x_{i+1} f - x_i s_i(f)) / (x_{i+1} - x_i), by exact division."""
    a, b = f"x{i}", f"x{i + 1}"
    ring = f.ring + tuple(v for v in (a, b) if v not in f.ring)
    f = f.in_ring(ring)
    ia, ib = ring.index(a), ring.index(b)
    # numerator N = x_{i+1} f - x_i f^swap, grouped by (other exponents, total degree in a, b)
    num: dict = {}
    for e, c in f.terms.items():
        ea, eb = e[ia], e[ib]
        rest = tuple(x for k, x in enumerate(e) if k not in (ia, ib))
        d = ea + eb + 1
        g = num.setdefault((rest, d), {})
        g[ea] = g.get(ea, 0) + c          # x_a^ea x_b^(eb+1)
        g[eb + 1] = g.get(eb + 1, 0) - c  # x_a^(eb+1) x_b^ea
    out: dict = {}
    for (rest, d), g in num.items():
        g = {k: c for k, c in g.items() if c}
        if not g:
            continue
        if sum(g.values()):
            raise DivisionRemainderError(f"pi_{i} left a remainder")
        ks = sorted(g)
        acc = 0
        for k in range(ks[0], ks[-1]):
            acc += g.get(k, 0)
            if acc:
                e = list(rest)
                lo, hi = sorted((ia, ib))
                # reinsert exponents of x_a = k and x_b = d - 1 - k at their positions
                vals = {ia: k, ib: d - 1 - k}
                e.insert(lo, vals[lo])
                e.insert(hi, vals[hi])
                out[tuple(e)] = out.get(tuple(e), 0) + acc
    return LaurentPolynomial(out, ring)


def grothendieck_w0(n: int) -> LaurentPolynomial:
    out = LaurentPolynomial.const(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (1 - LaurentPolynomial.var(f"x{i}") / LaurentPolynomial.var(f"y{j}"))
    return out.in_ring(xy_ring(n)) if out.terms else out


def grothendieck(w: Permutation, choose=min, memo: dict | None = None) -> LaurentPolynomial:
    """G_w from G_{w0} by isobaric divided differences.

    At each step ``choose`` picks an ascent k of the current permutation
    (smallest by default) and G_w = pi_k G_{w s_k}.  ``memo`` maps words to
    polynomials; pass the same dict across calls to share work.
    """
    memo = {} if memo is None else memo
    path = []
    cur = w
    n = w.n
    while cur.word not in memo and cur != Permutation.longest(n):
        k = choose(cur.ascents())
        path.append((cur, k))
        cur = cur.swap_positions(k, k + 1)
    f = memo.get(cur.word) if cur.word in memo else grothendieck_w0(n)
    memo[cur.word] = f
    for p, k in reversed(path):
        f = isobaric_dd(f, k)
        memo[p.word] = f
    return f


def specialize_hilbert(v: Permutation, w: Permutation, memo: dict | None = None) -> LaurentPolynomial:
    """G_{w0 w} with x_j -> t_{v(j)} and y_i -> t_{n+1-i}."""
    n = w.n
    g = grothendieck(Permutation.longest(n) * w, memo=memo)
    mapping = {f"x{j}": f"t{v(j)}" for j in range(1, n + 1)}
    mapping.update({f"y{i}": f"t{n + 1 - i}" for i in range(1, n + 1)})
    out = g.subs({k: LaurentPolynomial.var(val) for k, val in mapping.items()})
    return out.in_ring(tuple(f"t{i}" for i in range(1, n + 1)))
