"""Classical and interval pattern embeddings, and the order ideals they generate.

An interval [u, v] (u <= v in S_m) embeds in [x, w] (x <= w in S_n) when some
classical embedding phi of v into w, with x = Phi(u) obtained by rearranging
the values of w on phi according to u, satisfies l(v) - l(u) = l(w) - l(x).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import networkx as nx

from .perm import (Permutation, bruhat_interval, bruhat_leq, bruhat_lower_covers,
                   parse_one_line)

__all__ = [
    "IntervalEmbedding", "IntervalFamily", "MembershipWitness", "classical_embeddings",
    "phi_of_u", "interval_embeddings", "interval_poset_isomorphic", "instantiate_family",
    "family_instances", "order_ideal_member", "ideal_bottoms", "maximal_elements",
    "contains_pattern", "interval_contains", "seg",
    "SINGULAR_FAMILIES", "GORENSTEIN_FAMILIES", "LCI_CONJ_FAMILIES",
    "FACTORIAL_CONJ_FAMILIES", "LCI_EXCEPTIONAL", "SINGULAR_FAMILIES_STRICT_A",
]


# ---------------------------------------------------------------------------
# classical embeddings
# ---------------------------------------------------------------------------

def classical_embeddings(v: Permutation, w: Permutation) -> list:
    """All increasing phi (1-based) with w(phi_1..phi_m) order-isomorphic to v, lexicographic."""
    return list(_iter_embeddings(v.word, w.word))


def _iter_embeddings(pat: Sequence[int], word: Sequence[int]) -> Iterator[tuple]:
    m, n = len(pat), len(word)
    if m > n:
        return
    chosen: list = []

    def consistent(k: int, val: int) -> bool:
        pk = pat[k]
        for j, pos in enumerate(chosen):
            if (pat[j] < pk) != (word[pos] < val):
                return False
        return True

    def rec(k: int, start: int):
        if k == m:
            yield tuple(p + 1 for p in chosen)
            return
        for pos in range(start, n - (m - k) + 1):
            if consistent(k, word[pos]):
                chosen.append(pos)
                yield from rec(k + 1, pos + 1)
                chosen.pop()

    yield from rec(0, 0)


def contains_pattern(v, w) -> bool:
    v, w = parse_one_line(v), parse_one_line(w)
    return next(_iter_embeddings(v.word, w.word), None) is not None


def phi_of_u(u: Permutation, w: Permutation, phi: Sequence[int]) -> Permutation:
    """Agree with w off phi; on phi, place the values {w(phi_i)} in the relative order of u."""
    phi = tuple(phi)
    if len(phi) != u.n:
        raise ValueError("phi must have one index per letter of u")
    if any(b <= a for a, b in zip(phi, phi[1:])) or (phi and (phi[0] < 1 or phi[-1] > w.n)):
        raise ValueError(f"phi={phi} is not strictly increasing inside 1..{w.n}")
    vals = sorted(w(p) for p in phi)
    word = list(w.word)
    for k, p in enumerate(phi):
        word[p - 1] = vals[u.word[k] - 1]
    return Permutation(word)


@dataclass(frozen=True)
class IntervalEmbedding:
    phi: tuple
    bottom: Permutation          # Phi(u)
    top_pattern: Permutation     # v
    bottom_pattern: Permutation  # u
    ambient: Permutation         # w

    def to_json(self, family: str | None = None) -> dict:
        return {"phi": list(self.phi), "bottom": str(self.bottom), "family": family}


def interval_embeddings(u: Permutation, v: Permutation, w: Permutation) -> list:
    """Interval embeddings of [u, v] into w (the bottom Phi(u) is determined by phi)."""
    if not bruhat_leq(u, v):
        raise ValueError(f"[{u}, {v}] is not a Bruhat interval")
    drop = v.length() - u.length()
    lw = w.length()
    out = []
    for phi in _iter_embeddings(v.word, w.word):
        x = phi_of_u(u, w, phi)
        if lw - x.length() == drop:
            out.append(IntervalEmbedding(phi, x, v, u, w))
    return out


def interval_contains(u: Permutation, v: Permutation, w: Permutation) -> bool:
    drop = v.length() - u.length()
    lw = w.length()
    for phi in _iter_embeddings(v.word, w.word):
        if lw - phi_of_u(u, w, phi).length() == drop:
            return True
    return False


def _hasse(u: Permutation, v: Permutation) -> nx.DiGraph:
    g = nx.DiGraph()
    members = bruhat_interval(u, v)
    ms = set(members)
    g.add_nodes_from(range(len(members)))
    idx = {x: k for k, x in enumerate(members)}
    for x in members:
        g.nodes[idx[x]]["rank"] = x.length() - u.length()
        for y in bruhat_lower_covers(x):
            if y in ms:
                g.add_edge(idx[y], idx[x])
    return g


def interval_poset_isomorphic(u: Permutation, v: Permutation, x: Permutation,
                              w: Permutation) -> bool:
    """Are the Bruhat intervals [u, v] and [x, w] isomorphic as posets?

    Graded posets are isomorphic iff their Hasse diagrams are isomorphic as
    directed graphs; rank labels only prune the search.
    """
    if not bruhat_leq(u, v) or not bruhat_leq(x, w):
        raise ValueError("both arguments must be Bruhat intervals")
    if v.length() - u.length() != w.length() - x.length():
        return False
    g1, g2 = _hasse(u, v), _hasse(x, w)
    if g1.number_of_nodes() != g2.number_of_nodes() or g1.number_of_edges() != g2.number_of_edges():
        return False
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        g1, g2, node_match=lambda a, b: a["rank"] == b["rank"])
    return matcher.is_isomorphic()


# ---------------------------------------------------------------------------
# interval families
# ---------------------------------------------------------------------------

def seg(j: int, i: int) -> list:
    """j, j-1, ..., i (empty when j < i)."""
    return list(range(j, i - 1, -1))


@dataclass(frozen=True)
class IntervalFamily:
    """A parameterized family of intervals [u(a,b), v(a,b)] plus explicit extra pairs."""
    name: str
    u_of: Callable | None = None
    v_of: Callable | None = None
    allowed: Callable = lambda a, b: True
    size_of: Callable = lambda a, b: 0
    uses_b: bool = True
    exceptional: tuple = ()

    def instances(self, n: int) -> list:
        return family_instances(self, n)


def instantiate_family(family: IntervalFamily, a: int, b: int = 0) -> tuple:
    if family.u_of is None:
        raise ValueError(f"family {family.name} has no parameterized generator")
    if not family.allowed(a, b):
        raise ValueError(f"parameters (a={a}, b={b}) are outside the range of {family.name}")
    u, v = Permutation(family.u_of(a, b)), Permutation(family.v_of(a, b))
    if not bruhat_leq(u, v):
        raise AssertionError(f"{family.name}({a},{b}) does not give an interval")
    return u, v


def family_instances(family: IntervalFamily, n: int) -> list:
    """(params, u, v) for every member of pattern length <= n, exceptional pairs last."""
    out = []
    if family.u_of is not None:
        for a in range(n + 1):
            for b in (range(n + 1) if family.uses_b else (0,)):
                if family.allowed(a, b) and family.size_of(a, b) <= n:
                    u, v = instantiate_family(family, a, b)
                    out.append(((a, b) if family.uses_b else (a,), u, v))
    for us, vs in family.exceptional:
        u, v = parse_one_line(us), parse_one_line(vs)
        if v.n <= n:
            out.append(("exceptional", u, v))
    return out


def _u1(a, b):
    return seg(a + 1, 1) + seg(a + b + 2, a + 2)


def _v1(a, b):
    return [a + b + 2] + seg(a + 1, 2) + seg(a + b + 1, a + 2) + [1]


def _u2(a, b):
    return seg(a + 1, 1) + [a + 3, a + 2] + seg(a + b + 4, a + 4)


def _v2(a, b):
    return [a + 3] + seg(a + 1, 2) + [a + b + 4, 1] + seg(a + b + 3, a + 4) + [a + 2]


def _u3(a, b):
    return [1] + seg(a + 3, 2) + [a + 4]


def _v3(a, b):
    return [a + 3, a + 4] + seg(a + 2, 3) + [1, 2]


def _size1(a, b):
    return a + b + 2


def _size2(a, b):
    return a + b + 4


def _size3(a, b):
    return a + 4


LCI_EXCEPTIONAL = (
    ("21354", "52341"), ("132546", "351624"), ("421653", "642531"), ("326154", "635241"),
    ("215436", "526314"), ("215436", "524613"), ("143265", "364152"), ("143265", "461352"),
    ("215436", "526413"), ("143265", "463152"), ("2154376", "5274163"),
)

# Family (3) starts at a = 1: [14325, 45312] is a minimal singular interval
# (a = 0 would repeat [1324, 3412]).  A range of a > 1 would miss it.
SINGULAR_FAMILIES = (
    IntervalFamily("singular(1)", _u1, _v1, lambda a, b: a > 0 and b > 0, _size1),
    IntervalFamily("singular(2)", _u2, _v2, lambda a, b: a >= 0 and b >= 0, _size2),
    IntervalFamily("singular(3)", _u3, _v3, lambda a, b: a >= 1, _size3, uses_b=False),
)

SINGULAR_FAMILIES_STRICT_A = SINGULAR_FAMILIES[:2] + (
    IntervalFamily("singular(3)", _u3, _v3, lambda a, b: a > 1, _size3, uses_b=False),
)

GORENSTEIN_FAMILIES = (
    IntervalFamily("gorenstein(1)", _u1, _v1, lambda a, b: a > 0 and b > 0 and a != b, _size1),
    IntervalFamily("gorenstein(2)", _u2, _v2, lambda a, b: a >= 0 and b >= 0 and (a > 0 or b > 0),
                   _size2),
)

LCI_CONJ_FAMILIES = (
    IntervalFamily("non-lci(1)", _u1, _v1, lambda a, b: a > 0 and b > 0 and (a > 1 or b > 1),
                   _size1),
    IntervalFamily("non-lci(2)", _u2, _v2, lambda a, b: a >= 0 and b >= 0 and a + b >= 1, _size2),
    IntervalFamily("non-lci(exceptional)", exceptional=LCI_EXCEPTIONAL),
)

FACTORIAL_CONJ_FAMILIES = (
    IntervalFamily("non-factorial(1)", _u1, _v1, lambda a, b: a > 0 and b > 0, _size1),
    IntervalFamily("non-factorial(2)", _u2, _v2, lambda a, b: a >= 0 and b >= 0, _size2),
)


# ---------------------------------------------------------------------------
# order ideals in (intervals, <_I)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipWitness:
    family: str
    params: object
    u: Permutation
    v: Permutation
    embedding: IntervalEmbedding

    def to_json(self) -> dict:
        d = self.embedding.to_json(self.family)
        d.update({"params": self.params if isinstance(self.params, str) else list(self.params),
                  "interval": [str(self.u), str(self.v)]})
        return d


def ideal_bottoms(families: Sequence[IntervalFamily], w: Permutation) -> list:
    """Every generator interval-embedded into w, as witnesses (bottom = Phi(u))."""
    out = []
    for fam in families:
        for params, u, v in family_instances(fam, w.n):
            for emb in interval_embeddings(u, v, w):
                out.append(MembershipWitness(fam.name, params, u, v, emb))
    return out


def order_ideal_member(families: Sequence[IntervalFamily], x: Permutation, w: Permutation):
    """A witness that [x, w] lies in the order ideal generated by ``families``, else None.

    Two-step test: embed a generator [u, v] as [Phi(u), w], then lower the
    bottom to any x <= Phi(u).
    """
    if not bruhat_leq(x, w):
        raise ValueError(f"{x} is not below {w} in Bruhat order")
    for wit in ideal_bottoms(families, w):
        if bruhat_leq(x, wit.embedding.bottom):
            return wit
    return None


def maximal_elements(perms) -> list:
    """Bruhat-maximal elements of a collection, sorted by (length desc, word)."""
    items = sorted(set(perms), key=lambda p: (-p.length(), p.word))
    out: list = []
    for p in items:
        if not any(bruhat_leq(p, q) for q in out):
            out.append(p)
    return sorted(out, key=lambda p: p.word)
