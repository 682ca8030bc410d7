"""Kazhdan-Lusztig ideals I_{v,w} and Schubert determinantal ideals I_w.

Matrix conventions: z_ij is the entry in row i counted from the *bottom* and
column j counted from the left.  ``Z_{st}`` is the southwest s x t corner.
Z_{st} is paired with the southwest rank r~^(w)_{n-s+1, t}: the corner
holding the bottom s rows is the one whose rows carry the values >= n-s+1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .heckealg import specialize_hilbert
from .perm import Permutation, bruhat_leq, essential_set, rank_matrix
from .polyengine import (
    LaurentPolynomial, MonomialIdeal, TermOrder, buchberger, det, exact_rank,
    initial_ideal, is_groebner, k_polynomial, reduced_groebner, series_coefficients,
    standard_monomial_counts,
)

__all__ = [
    "SymbolicMatrix", "IdealPresentation", "InconsistencyError", "UnsupportedCaseError",
    "HilbertSeries", "var_name", "z_matrix", "generic_matrix", "kl_generators",
    "schubert_generators", "essential_generators", "order_antidiagonal", "order_row_lex",
    "jacobian_rank_at_origin", "tangent_dim", "is_defining_set_homogeneous",
    "is_standard_homogeneous", "kl_initial_ideal", "hilbert_series",
    "multiplicity_standard_homogeneous", "emit_macaulay2", "emit_macaulay2_minors",
    "torus_grading", "generic_grading", "specialize_to_v",
]


class InconsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""


class UnsupportedCaseError(ValueError):
    """Input lies outside the supported domain of an operation."""


def var_name(i: int, j: int, n: int) -> str:
    return f"z{i}{j}" if n < 10 else f"z{i}_{j}"


@dataclass(frozen=True)
class SymbolicMatrix:
    """``entries[(i, j)]`` is 0, 1 or a variable name; i counts rows from the bottom."""
    n: int
    entries: dict = field(hash=False, compare=True)

    def __getitem__(self, ij):
        return self.entries[ij]

    def top_down(self) -> list:
        """Rows listed top to bottom, as the matrix is drawn."""
        return [[self.entries[(i, j)] for j in range(1, self.n + 1)] for i in range(self.n, 0, -1)]

    def variables(self) -> list:
        return [e for e in self.entries.values() if isinstance(e, str)]

    def __str__(self):
        rows = self.top_down()
        width = max(len(str(e)) for r in rows for e in r)
        return "\n".join(" ".join(str(e).rjust(width) for e in r) for r in rows)


def z_matrix(v: Permutation) -> SymbolicMatrix:
    """Z^(v): a 1 at (n-v(j)+1, j); zeros right of each 1 in its row and above it in its column."""
    n = v.n
    ent: dict = {}
    for j in range(1, n + 1):
        r = n - v(j) + 1
        ent[(r, j)] = 1
        for s in range(j + 1, n + 1):
            ent[(r, s)] = 0
        for t in range(r + 1, n + 1):
            ent[(t, j)] = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ent.setdefault((i, j), var_name(i, j, n))
    return SymbolicMatrix(n, ent)


def generic_matrix(n: int) -> SymbolicMatrix:
    return SymbolicMatrix(n, {(i, j): var_name(i, j, n) for i in range(1, n + 1)
                              for j in range(1, n + 1)})


def order_antidiagonal(variables: Sequence[str], n: int) -> TermOrder:
    """Pure lex with z_ij > z_kl if j > l, or j = l and i < k.

    The default order: lead terms of the defining minors are antidiagonal.
    """
    pos = _positions(n)
    return TermOrder.lex(sorted(variables, key=lambda z: (-pos[z][1], pos[z][0])))


def order_row_lex(variables: Sequence[str], n: int) -> TermOrder:
    """z_nn > ... > z_n1 > ... > z_11, the order of the generic 3x3 example."""
    pos = _positions(n)
    return TermOrder.lex(sorted(variables, key=lambda z: (-pos[z][0], -pos[z][1])))


def _positions(n: int) -> dict:
    return {var_name(i, j, n): (i, j) for i in range(1, n + 1) for j in range(1, n + 1)}


def torus_grading(v: Permutation) -> dict:
    """deg z_ij = e_{v(j)} - e_{n-i+1} in Z^n."""
    n = v.n
    out = {}
    for (i, j), e in z_matrix(v).entries.items():
        if isinstance(e, str):
            d = [0] * n
            d[v(j) - 1] += 1
            d[n - i] -= 1
            out[e] = tuple(d)
    return out


def generic_grading(n: int) -> dict:
    """deg z_ij = e_j - e_{n+i} in Z^{2n}, i.e. z_ij has weight x_j / y_i.

    Columns carry x and rows carry y, matching the torus specialization
    x_j -> t_{v(j)}, y_i -> t_{n+1-i}.
    """
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = [0] * (2 * n)
            d[j - 1] = 1
            d[n + i - 1] = -1
            out[var_name(i, j, n)] = tuple(d)
    return out


@dataclass
class IdealPresentation:
    ring_vars: tuple
    generators: list
    grading: dict
    v: Permutation | None
    w: Permutation
    n: int
    empty_variety: bool = False
    kind: str = "kl"

    @property
    def tags(self) -> list:
        return ["empty variety"] if self.empty_variety else []

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring_vars),
            "generators": [str(g) for g in self.generators],
            "grading": {k: list(d) for k, d in self.grading.items()},
            "v": str(self.v) if self.v is not None else None,
            "w": str(self.w),
            "tags": self.tags,
        }


def _rank_conditions(w: Permutation, cells=None) -> list:
    """(s, t, k): minors of size k of Z_st, for the given cells (all cells by default)."""
    n = w.n
    rt = rank_matrix(w, "SW")
    if cells is None:
        cells = [(s, t) for s in range(1, n + 1) for t in range(1, n + 1)]
    out = []
    for s, t in sorted(cells):
        k = rt(n - s + 1, t) + 1
        if k <= min(s, t):
            out.append((s, t, k))
    return out


def _minors(M: SymbolicMatrix, conditions: list) -> list:
    """Distinct nonzero minors (up to sign), rows taken top to bottom."""
    seen_rc = set()
    seen_poly = set()
    out = []
    for s, t, k in conditions:
        for rows in itertools.combinations(range(s, 0, -1), k):
            for cols in itertools.combinations(range(1, t + 1), k):
                if (rows, cols) in seen_rc:
                    continue
                seen_rc.add((rows, cols))
                g = det([[M[(i, j)] for j in cols] for i in rows])
                if not g.terms:
                    continue
                g = g.trim()
                key = frozenset((g, -g))
                if key in seen_poly:
                    continue
                seen_poly.add(key)
                out.append(g)
    return out


def kl_generators(v: Permutation, w: Permutation, *, essential: bool = False) -> IdealPresentation:
    """Defining minors of I_{v,w} (all cells, or only Fulton's essential cells)."""
    if v.n != w.n:
        raise ValueError("size mismatch")
    M = z_matrix(v)
    cells = essential_set(w) if essential else None
    gens = _minors(M, _rank_conditions(w, cells))
    ring = tuple(M.variables())
    gens = [g.in_ring(ring) if g.used_vars() else g for g in gens]
    empty = not bruhat_leq(v, w)
    return IdealPresentation(ring, gens, torus_grading(v), v, w, w.n, empty_variety=empty)


def schubert_generators(w: Permutation, *, essential: bool = False) -> IdealPresentation:
    """Defining minors of the Schubert determinantal ideal I_w on the generic matrix."""
    n = w.n
    M = generic_matrix(n)
    cells = essential_set(w) if essential else None
    gens = _minors(M, _rank_conditions(w, cells))
    ring = tuple(M.variables())
    gens = [g.in_ring(ring) for g in gens]
    return IdealPresentation(ring, gens, generic_grading(n), None, w, n, kind="schubert")


def essential_generators(w: Permutation, v: Permutation | None = None) -> IdealPresentation:
    if v is None:
        return schubert_generators(w, essential=True)
    return kl_generators(v, w, essential=True)


def specialize_to_v(pres: IdealPresentation, v: Permutation) -> list:
    """Substitute the entries of Z^(v) into Schubert generators; drop zeros."""
    Zv = z_matrix(v)
    mapping = {var_name(i, j, v.n): Zv[(i, j)] for (i, j) in Zv.entries
               if not isinstance(Zv[(i, j)], str)}
    out = []
    for g in pres.generators:
        h = g.subs({k: LaurentPolynomial.const(c) for k, c in mapping.items()})
        if h.terms:
            out.append(h)
    return out


# ---------------------------------------------------------------------------
# tangent spaces and homogeneity
# ---------------------------------------------------------------------------

def _jacobian(pres: IdealPresentation) -> list:
    rows = []
    for g in pres.generators:
        lin = g.linear_part()
        rows.append([lin.get(z, 0) for z in pres.ring_vars])
    return rows


def jacobian_rank_at_origin(pres: IdealPresentation) -> int:
    """Rank over Q of the linear parts of the generators (the Jacobian at 0)."""
    if not pres.ring_vars:
        return 0
    return exact_rank(_jacobian(pres))


def tangent_dim(pres: IdealPresentation) -> int:
    return len(pres.ring_vars) - jacobian_rank_at_origin(pres)


def is_defining_set_homogeneous(pres: IdealPresentation, grading: str = "standard") -> bool:
    """True iff every defining generator is homogeneous for the chosen grading.

    For the standard grading this is only sufficient for the ideal to be
    homogeneous; see :func:`is_standard_homogeneous` for the exact test.
    """
    if grading == "standard":
        return all(g.is_homogeneous() for g in pres.generators)
    if grading == "torus":
        deg = pres.grading

        def weight(m):
            tot = None
            for z, a in m.items():
                if a:
                    d = tuple(a * x for x in deg[z])
                    tot = d if tot is None else tuple(p + q for p, q in zip(tot, d))
            return tot
        return all(g.is_homogeneous(weight) for g in pres.generators)
    raise ValueError("grading must be 'standard' or 'torus'")


def is_standard_homogeneous(pres: IdealPresentation) -> bool:
    """Exact test: the reduced Groebner basis is homogeneous iff the ideal is."""
    if is_defining_set_homogeneous(pres, "standard"):
        return True
    gb = reduced_groebner(pres.generators, order_antidiagonal(pres.ring_vars, pres.n))
    return all(g.is_homogeneous() for g in gb)


# ---------------------------------------------------------------------------
# initial ideals and Hilbert series
# ---------------------------------------------------------------------------

def kl_initial_ideal(pres: IdealPresentation, *, trust_groebner: bool = False) -> MonomialIdeal:
    """init(I) under the antidiagonal order.

    The defining minors are used directly when they pass Buchberger's
    criterion; otherwise a Groebner basis is computed first.
    """
    order = order_antidiagonal(pres.ring_vars, pres.n)
    gens = [g for g in pres.generators if g.terms]
    if not gens:
        return MonomialIdeal(order.priority, frozenset())
    if any(g.is_constant() for g in gens):
        return MonomialIdeal(order.priority, frozenset({tuple(0 for _ in order.priority)}))
    if trust_groebner or is_groebner(gens, order):
        return initial_ideal(gens, order, check=False)
    return initial_ideal(buchberger(gens, order), order, check=False)


@dataclass
class HilbertSeries:
    """Hilb = numerator / prod(1 - t^d for d in denominator)."""
    numerator: LaurentPolynomial
    denominator: list
    tvars: tuple
    grothendieck_path: LaurentPolynomial
    kpoly_path: LaurentPolynomial

    def denominator_text(self) -> str:
        parts = []
        for d in self.denominator:
            mono = LaurentPolynomial({tuple(d): 1}, self.tvars).trim()
            parts.append(f"(1 - {mono.format_cleared()})")
        return "*".join(parts) if parts else "1"


def hilbert_series(v: Permutation, w: Permutation) -> HilbertSeries:
    """Torus-graded Hilbert series of R/I_{v,w}, computed two ways and cross-checked."""
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    n = w.n
    tvars = tuple(f"t{i}" for i in range(1, n + 1))
    pres = kl_generators(v, w)
    a = specialize_hilbert(v, w).in_ring(tvars)
    init = kl_initial_ideal(pres)
    b = k_polynomial(init, pres.grading, tvars)
    if a != b:
        raise InconsistencyError(
            f"Hilbert numerators disagree for ({v},{w}): Grothendieck {a} vs K-polynomial {b}")
    denom = [pres.grading[z] for z in pres.ring_vars]
    return HilbertSeries(a, denom, tvars, a, b)


def multiplicity_standard_homogeneous(v: Permutation, w: Permutation, *, check_degree: int = 0):
    """(H, mult) with Hilb(R/I; t) = H(t) / (1 - t)^(l(w) - l(v)) and mult = H(1).

    Only for standard-homogeneous I_{v,w}, where the tangent cone at the
    origin is the variety itself.  With ``check_degree > 0`` the result is
    cross-checked against a direct count of standard monomials.
    """
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in Bruhat order")
    pres = kl_generators(v, w)
    if not is_standard_homogeneous(pres):
        raise UnsupportedCaseError(f"I_{{{v},{w}}} is not standard homogeneous")
    init = kl_initial_ideal(pres)
    nvars = len(pres.ring_vars)
    dim = w.length() - v.length()
    K = k_polynomial(init, {z: (1,) for z in pres.ring_vars}, ("t",))
    t = LaurentPolynomial.var("t")
    H = K.divexact((1 - t) ** (nvars - dim)) if nvars > dim else K
    mult = H.evaluate({"t": 1}) if H.ring else H.constant_term()
    if check_degree:
        counted = standard_monomial_counts(init, check_degree)
        expected = series_coefficients(K, nvars, check_degree)
        if counted != expected:
            raise InconsistencyError(f"standard monomial counts {counted} != series {expected}")
    return H, mult


# ---------------------------------------------------------------------------
# Macaulay2 emission
# ---------------------------------------------------------------------------

def emit_macaulay2_minors(matrix: SymbolicMatrix, ring_vars: Sequence[str], blocks: list) -> str:
    """Script computing init and prime decomposition for a sum of minor ideals.

    ``blocks`` holds (s, t, k): k-minors of the southwest s x t corner; a
    block covering the whole matrix is written as ``minors(k,M)``.
    """
    n = matrix.n
    rows = matrix.top_down()
    mat = "{" + ",".join("{" + ",".join(str(e) for e in r) + "}" for r in rows) + "}"
    lines = [f"R=QQ[{','.join(ring_vars)}, MonomialOrder=>Lex]", f"M=matrix({mat})"]
    terms = []
    for s, t, k in blocks:
        if s == n and t == n:
            terms.append(f"minors({k},M)")
        else:
            rr = "{" + ",".join(str(r) for r in range(n - s, n)) + "}"
            cc = "{" + ",".join(str(c) for c in range(t)) + "}"
            terms.append(f"minors({k},submatrix(M,{rr},{cc}))")
    lines.append("I=" + ("+".join(terms) if terms else "ideal(0_R)"))
    lines += ["J=gb I", "K=ideal leadTerm(J)", "P=primaryDecomposition(K)"]
    return "\n".join(lines) + "\n"


def emit_macaulay2(v: Permutation, w: Permutation) -> str:
    """Script for I_{v,w}, variables listed largest first under the antidiagonal order."""
    M = z_matrix(v)
    ring = order_antidiagonal(M.variables(), v.n).priority
    if not bruhat_leq(v, w):
        lines = [f"R=QQ[{','.join(ring)}, MonomialOrder=>Lex]", "I=ideal(1_R)"]
        return "\n".join(lines) + "\n"
    blocks = _rank_conditions(w, essential_set(w))
    return emit_macaulay2_minors(M, ring, blocks)
