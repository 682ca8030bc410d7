"""Smoothness, singular loci, and the Gorenstein / lci / factorial classifiers."""
from __future__ import annotations

from dataclasses import dataclass, field

from .pattern import (
    FACTORIAL_CONJ_FAMILIES, GORENSTEIN_FAMILIES, LCI_CONJ_FAMILIES, SINGULAR_FAMILIES,
    classical_embeddings, ideal_bottoms, interval_embeddings, maximal_elements,
)
from .perm import Permutation, bruhat_interval, bruhat_leq, parse_one_line, reflection_count

__all__ = [
    "SingularityReport", "ConjecturalLocus", "is_smooth", "is_smooth_at", "singular_locus",
    "singular_locus_bruteforce", "is_gorenstein", "is_lci", "is_factorial",
    "conjectural_locus", "classify", "LCI_PATTERNS", "SMOOTH_PATTERNS",
]

SMOOTH_PATTERNS = ("3412", "4231")
LCI_PATTERNS = ("53241", "52341", "52431", "35142", "42513", "351624")
FACTORIAL_INTERVAL = ("3142", "3412")


def _first_pattern(w: Permutation, patterns) -> dict | None:
    for p in patterns:
        emb = classical_embeddings(parse_one_line(p), w)
        if emb:
            return {"pattern": p, "phi": list(emb[0])}
    return None


def is_smooth(w: Permutation) -> bool:
    """Avoids 3412 and 4231."""
    return _first_pattern(w, SMOOTH_PATTERNS) is None


def is_smooth_at(v: Permutation, w: Permutation) -> bool:
    """#{t : v < v t <= w} equals l(w) - l(v)."""
    return reflection_count(v, w) == w.length() - v.length()


def singular_locus(w: Permutation) -> list:
    """Bruhat-maximal v with [v, w] in the singular order ideal (components of sing X_w)."""
    return maximal_elements(wit.embedding.bottom for wit in ideal_bottoms(SINGULAR_FAMILIES, w))


def singular_locus_bruteforce(w: Permutation) -> list:
    """Maximal elements of {v <= w : X_w singular at e_v}, by the reflection count."""
    bad = [v for v in bruhat_interval(Permutation.identity(w.n), w) if not is_smooth_at(v, w)]
    return maximal_elements(bad)


def _interval_witness(w: Permutation, families) -> dict | None:
    wits = ideal_bottoms(families, w)
    return wits[0].to_json() if wits else None


def is_gorenstein(w: Permutation) -> bool:
    return _interval_witness(w, GORENSTEIN_FAMILIES) is None


def is_lci(w: Permutation) -> bool:
    return _first_pattern(w, LCI_PATTERNS) is None


def _factorial_witness(w: Permutation) -> dict | None:
    hit = _first_pattern(w, ("4231",))
    if hit:
        return hit
    u, v = (parse_one_line(p) for p in FACTORIAL_INTERVAL)
    emb = interval_embeddings(u, v, w)
    if emb:
        return emb[0].to_json("[3142,3412]")
    return None


def is_factorial(w: Permutation) -> bool:
    return _factorial_witness(w) is None


_CONJ = {
    "gorenstein": (GORENSTEIN_FAMILIES, "non-Gorenstein locus generated by the Gorenstein families"),
    "lci": (LCI_CONJ_FAMILIES, "non-lci locus generated by two families and eleven exceptional intervals"),
    "factorial": (FACTORIAL_CONJ_FAMILIES, "non-factorial locus generated by two families"),
}


@dataclass(frozen=True)
class ConjecturalLocus:
    """Output of a conjectural description; never a theorem."""
    prop: str
    w: Permutation
    components: tuple
    conjecture: bool = True
    statement: str = ""

    def to_json(self) -> dict:
        return {"property": self.prop, "w": str(self.w), "components": [str(c) for c in self.components],
                "conjecture": self.conjecture, "statement": self.statement}


def conjectural_locus(prop: str, w: Permutation) -> ConjecturalLocus:
    if prop not in _CONJ:
        raise ValueError(f"property must be one of {sorted(_CONJ)}")
    fams, statement = _CONJ[prop]
    comps = maximal_elements(wit.embedding.bottom for wit in ideal_bottoms(fams, w))
    return ConjecturalLocus(prop, w, tuple(comps), True, statement)


@dataclass
class SingularityReport:
    w: Permutation
    smooth: bool
    gorenstein: bool
    lci: bool
    factorial: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"w": str(self.w), "smooth": self.smooth, "gorenstein": self.gorenstein,
                "lci": self.lci, "factorial": self.factorial, "witnesses": self.witnesses}


def classify(w: Permutation) -> SingularityReport:
    wit = {}
    sm = _first_pattern(w, SMOOTH_PATTERNS)
    lc = _first_pattern(w, LCI_PATTERNS)
    go = _interval_witness(w, GORENSTEIN_FAMILIES)
    fa = _factorial_witness(w)
    for key, val in (("smooth", sm), ("lci", lc), ("gorenstein", go), ("factorial", fa)):
        if val is not None:
            wit[key] = val
    return SingularityReport(w, sm is None, go is None, lc is None, fa is None, wit)
