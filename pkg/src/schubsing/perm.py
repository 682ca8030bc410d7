"""Permutations of {1..n}: length, rank matrices, Bruhat order, diagrams, insertion.

Values and positions are 1-based throughout, as in one-line notation.
Composition is ``(u * v)(i) = u(v(i))``, so ``s * w`` swaps the *values*
i, i+1 of ``w`` and ``w * s`` swaps the *positions*.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .polyengine import LaurentPolynomial

__all__ = [
    "MalformedPermutationError", "Permutation", "RankMatrix", "Tableau",
    "parse_one_line", "length", "rank_matrix", "bruhat_leq", "bruhat_covers",
    "bruhat_lower_covers", "bruhat_interval", "reflection_count", "rothe_diagram",
    "essential_set", "is_covexillary", "is_cograssmannian", "schensted",
    "grassmannian_poincare", "gaussian_binomial", "all_perms",
]


class MalformedPermutationError(ValueError):
    """Text or word that is not a permutation of 1..n."""


class Permutation:
    """Immutable permutation in one-line notation."""

    __slots__ = ("word", "_inv", "_len", "_hash")

    def __init__(self, word: Iterable[int]):
        w = tuple(int(x) for x in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise MalformedPermutationError(f"{list(w)} is not a permutation of 1..{len(w)}")
        self.word = w
        self._inv = None
        self._len = None
        self._hash = hash(w)

    # construction ----------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        w = list(range(1, n + 1))
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return cls(w)

    @classmethod
    def from_reduced_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    # basic structure -------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __lt__(self, other):  # lexicographic, only for deterministic sorting
        return self.word < other.word

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.word[j - 1] for j in other.word)

    def inverse(self) -> "Permutation":
        if self._inv is None:
            inv = [0] * self.n
            for i, a in enumerate(self.word, 1):
                inv[a - 1] = i
            self._inv = Permutation(inv)
        return self._inv

    def length(self) -> int:
        if self._len is None:
            w = self.word
            self._len = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        return self._len

    def swap_positions(self, i: int, j: int) -> "Permutation":
        """``w * t_ij``."""
        w = list(self.word)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(w)

    def swap_values(self, a: int, b: int) -> "Permutation":
        """``t_ab * w``."""
        return Permutation(b if x == a else a if x == b else x for x in self.word)

    def descents(self) -> list:
        return [i for i in range(1, self.n) if self.word[i - 1] > self.word[i]]

    def ascents(self) -> list:
        return [i for i in range(1, self.n) if self.word[i - 1] < self.word[i]]

    def reduced_word(self) -> list:
        """Indices a_1..a_l with w = s_{a_1} ... s_{a_l}."""
        w = list(self.word)
        out = []
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    out.append(i + 1)
                    break
            else:
                return out[::-1]

    def is_involution(self) -> bool:
        return self == self.inverse()

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self):
        return f"Permutation('{self}')"


def parse_one_line(text) -> Permutation:
    """Parse ``"3412"`` or ``"10,5,7,..."`` (commas and/or spaces)."""
    if isinstance(text, Permutation):
        return text
    if isinstance(text, (list, tuple)):
        return Permutation(text)
    s = str(text).strip()
    if not s:
        raise MalformedPermutationError("empty permutation")
    if re.fullmatch(r"\d+", s):
        word = [int(c) for c in s]
    elif re.fullmatch(r"\d+([\s,]+\d+)*", s):
        word = [int(c) for c in re.split(r"[\s,]+", s)]
    else:
        raise MalformedPermutationError(f"cannot parse {text!r}")
    return Permutation(word)


def length(w: Permutation) -> int:
    return w.length()


def all_perms(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


# ---------------------------------------------------------------------------
# rank matrices and Bruhat order
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankMatrix:
    """``entries[p-1][q-1]`` holds r_{p,q} (NW) or r~_{p,q} (SW)."""
    entries: tuple
    variant: str

    def __call__(self, p: int, q: int) -> int:
        return self.entries[p - 1][q - 1]

    def rows(self) -> list:
        return [list(r) for r in self.entries]


def rank_matrix(w: Permutation, variant: str = "NW") -> RankMatrix:
    n = w.n
    if variant == "NW":
        ent = tuple(tuple(sum(1 for k in range(1, q + 1) if w(k) <= p) for q in range(1, n + 1))
                    for p in range(1, n + 1))
    elif variant == "SW":
        ent = tuple(tuple(sum(1 for k in range(1, q + 1) if w(k) >= p) for q in range(1, n + 1))
                    for p in range(1, n + 1))
    else:
        raise ValueError("variant must be 'NW' or 'SW'")
    return RankMatrix(ent, variant)


@lru_cache(maxsize=None)
def _sw_flat(word: tuple) -> tuple:
    n = len(word)
    out = []
    for p in range(1, n + 1):
        c = 0
        row = []
        for q in range(n):
            if word[q] >= p:
                c += 1
            row.append(c)
        out.extend(row)
    return tuple(out)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w iff r~(u) <= r~(w) entrywise (southwest ranks).

    Equivalently the northwest ranks satisfy r(u) >= r(w): moving up in
    Bruhat order moves large values to the left.
    """
    if u.n != w.n:
        raise ValueError("size mismatch")
    if u.length() > w.length():
        return False
    a, b = _sw_flat(u.word), _sw_flat(w.word)
    return all(x <= y for x, y in zip(a, b))


def bruhat_covers(u: Permutation) -> list:
    """Upper covers u * t_ij with u(i) < u(j) and no value of u strictly between
    them at a position strictly between i and j."""
    w = u.word
    n = len(w)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] < w[j] and not any(w[i] < w[k] < w[j] for k in range(i + 1, j)):
                out.append(u.swap_positions(i + 1, j + 1))
    return out


def bruhat_lower_covers(u: Permutation) -> list:
    w = u.word
    n = len(w)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j] and not any(w[j] < w[k] < w[i] for k in range(i + 1, j)):
                out.append(u.swap_positions(i + 1, j + 1))
    return out


def bruhat_interval(u: Permutation, w: Permutation) -> list:
    """All x with u <= x <= w, by breadth-first search along lower covers of w."""
    if not bruhat_leq(u, w):
        return []
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for y in bruhat_lower_covers(x):
                if y not in seen and bruhat_leq(u, y):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda x: (x.length(), x.word))


def reflection_count(v: Permutation, w: Permutation) -> int:
    """#{(i,j): i<j, v < v t_ij <= w}."""
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    n = v.n
    c = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if v(i) < v(j) and bruhat_leq(v.swap_positions(i, j), w):
                c += 1
    return c


# ---------------------------------------------------------------------------
# Rothe diagram, essential set, special classes
# ---------------------------------------------------------------------------

def rothe_diagram(w: Permutation) -> frozenset:
    """Diagram cells (s, t), row s counted from the bottom, column t from the left.

    With p = n - s + 1 the row from the top, (s, t) is a cell iff the 1 of
    column t lies below row p and the 1 of row p lies right of column t
    (the 1 of column t sits in row w(t) from the top).
    """
    n = w.n
    winv = w.inverse()
    return frozenset((s, t) for s in range(1, n + 1) for t in range(1, n + 1)
                     if w(t) < n - s + 1 and winv(n - s + 1) > t)


def essential_set(w: Permutation) -> frozenset:
    """Diagram cells with no diagram cell immediately right or immediately above.

    Rows count from the bottom, so "above" is (s + 1, t); drawn top-down this
    is the row i - 1.  These are the northeast corners of the diagram.
    """
    D = rothe_diagram(w)
    return frozenset((s, t) for (s, t) in D if (s, t + 1) not in D and (s + 1, t) not in D)


def classically_contains(pattern: Sequence[int], w: Sequence[int]) -> bool:
    """True if some subsequence of ``w`` is order-isomorphic to ``pattern``."""
    m = len(pattern)
    for idx in itertools.combinations(range(len(w)), m):
        vals = [w[i] for i in idx]
        if all((vals[a] < vals[b]) == (pattern[a] < pattern[b])
               for a in range(m) for b in range(a + 1, m)):
            return True
    return False


def is_covexillary(w: Permutation) -> bool:
    return not classically_contains((3, 4, 1, 2), w.word)


def is_cograssmannian(w: Permutation) -> bool:
    return len(w.ascents()) <= 1


# ---------------------------------------------------------------------------
# Schensted column insertion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    rows: tuple

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def columns(self) -> list:
        if not self.rows:
            return []
        return [[r[c] for r in self.rows if len(r) > c] for c in range(len(self.rows[0]))]

    def is_standard(self) -> bool:
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            return False
        rows_ok = all(all(a < b for a, b in zip(r, r[1:])) for r in self.rows)
        cols_ok = all(all(a < b for a, b in zip(c, c[1:])) for c in self.columns())
        return rows_ok and cols_ok

    def __str__(self):
        return "/".join("(" + ",".join(map(str, r)) + ")" for r in self.rows)


def _cols_to_rows(cols: list) -> tuple:
    depth = max((len(c) for c in cols), default=0)
    return tuple(tuple(c[r] for c in cols if len(c) > r) for r in range(depth))


def schensted(w: Permutation) -> tuple:
    """(P, Q) by column insertion of w(1), w(2), ..., w(n).

    Insert x into the first column: it bumps the smallest entry larger than
    x, which is then inserted into the next column; otherwise x goes at the
    bottom of the column.
    """
    P: list = []
    Q: list = []
    for step, x in enumerate(w.word, 1):
        c = 0
        while True:
            if c == len(P):
                P.append([x])
                Q.append([step])
                break
            col = P[c]
            bigger = [k for k, y in enumerate(col) if y > x]
            if not bigger:
                col.append(x)
                Q[c].append(step)
                break
            k = bigger[0]
            col[k], x = x, col[k]
            c += 1
    return Tableau(_cols_to_rows(P)), Tableau(_cols_to_rows(Q))


# ---------------------------------------------------------------------------
# Grassmannian cells
# ---------------------------------------------------------------------------

def grassmannian_poincare(k: int, n: int) -> LaurentPolynomial:
    """Sum over k-subsets {i_1<...<i_k} of [n] of q^(sum(i_a - a))."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    counts: dict = {}
    for sub in itertools.combinations(range(1, n + 1), k):
        d = sum(i - a for a, i in enumerate(sub, 1))
        counts[d] = counts.get(d, 0) + 1
    return LaurentPolynomial({(d,): c for d, c in counts.items()}, ("q",))


def gaussian_binomial(n: int, k: int) -> LaurentPolynomial:
    """[n choose k]_q from q-factorials, by exact polynomial division."""
    q = LaurentPolynomial.var("q")

    def qint(m):
        return sum((q ** j for j in range(m)), LaurentPolynomial.const(0))

    def qfact(m):
        out = LaurentPolynomial.const(1)
        for j in range(1, m + 1):
            out = out * qint(j)
        return out

    num = qfact(n)
    den = qfact(k) * qfact(n - k)
    return num.divexact(den)
