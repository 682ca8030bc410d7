"""Command-line entry point: ``python -m schubsing <command> ...``.

Exit status: 0 ok, 2 usage error, 3 an oracle cross-check disagreed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import heckealg, klideal, pattern, perm, polyengine, singclass
from .perm import MalformedPermutationError, Permutation, parse_one_line

SCHEMA = "schubsing/1"
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 2, 3
COMMANDS = ("classify", "singlocus", "ideal", "groebner", "hilbert", "klpoly", "pattern", "sweep")


class OracleMismatch(Exception):
    def __init__(self, what: str, expected, got):
        super().__init__(what)
        self.what, self.expected, self.got = what, expected, got


@dataclass
class RunConfig:
    command: str
    perms: list = field(default_factory=list)
    output: str = "json"
    oracle: bool = False
    n: int | None = None
    check: str = "smooth-triple"
    grading: str = "torus"
    emit_m2: str | None = None
    bottom: Permutation | None = None
    essential: bool = False


def _perm_arg(text: str) -> Permutation:
    try:
        return parse_one_line(text)
    except MalformedPermutationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _same_n(perms):
    if len({p.n for p in perms}) > 1:
        raise argparse.ArgumentTypeError("permutations must have the same size")


# ---------------------------------------------------------------------------
# commands; each returns a JSON-able dict
# ---------------------------------------------------------------------------

def _classify(cfg: RunConfig) -> dict:
    w, = cfg.perms
    rep = singclass.classify(w)
    out = rep.to_json()
    if cfg.oracle:
        ident = Permutation.identity(w.n)
        by_count = perm.reflection_count(ident, w) == w.length()
        by_kl = heckealg.KLTable(w.n).p(ident, w) == (1,)
        if not (rep.smooth == by_count == by_kl):
            raise OracleMismatch("smoothness", rep.smooth, {"reflection_count": by_count, "kl": by_kl})
        out["oracle"] = {"reflection_count": by_count, "kl_P_id_w_is_1": by_kl}
    return out


def _singlocus(cfg: RunConfig) -> dict:
    w, = cfg.perms
    comps = [str(c) for c in singclass.singular_locus(w)]
    out = {"w": str(w), "components": comps}
    if cfg.oracle:
        brute = [str(c) for c in singclass.singular_locus_bruteforce(w)]
        if brute != comps:
            raise OracleMismatch("singular locus", brute, comps)
        out["oracle"] = "confirmed"
    return out


def _ideal(cfg: RunConfig) -> dict:
    v, w = cfg.perms
    pres = klideal.kl_generators(v, w, essential=cfg.essential)
    out = pres.to_json()
    out["homogeneous_defining_set"] = klideal.is_defining_set_homogeneous(pres, cfg.grading)
    if cfg.emit_m2:
        with open(cfg.emit_m2, "w") as fh:
            fh.write(klideal.emit_macaulay2(v, w))
        out["m2"] = cfg.emit_m2
    if cfg.oracle and cfg.essential:
        full = klideal.kl_generators(v, w)
        order = klideal.order_antidiagonal(full.ring_vars, w.n)
        if not polyengine.ideals_equal(full.generators, pres.generators, order):
            raise OracleMismatch("essential generators", "same ideal", "different ideal")
        out["oracle"] = "essential = full"
    return out


def _groebner(cfg: RunConfig) -> dict:
    v, w = cfg.perms
    pres = klideal.kl_generators(v, w)
    order = klideal.order_antidiagonal(pres.ring_vars, w.n)
    gb = polyengine.is_groebner(pres.generators, order) if pres.generators else True
    init = klideal.kl_initial_ideal(pres)
    out = {"v": str(v), "w": str(w), "order": list(order.priority), "defining_minors_are_gb": gb,
           "initial_ideal": [str(m) for m in init.monomials()], "squarefree": init.is_squarefree}
    if init.is_squarefree:
        out["primes"] = [list(p) for p in polyengine.prime_decomposition(init)]
    if cfg.oracle:
        red = polyengine.reduced_groebner(pres.generators, order) if pres.generators else []
        init2 = polyengine.initial_ideal(red, order, check=False) if red else init
        if init2.gens != init.gens:
            raise OracleMismatch("initial ideal", [str(m) for m in init2.monomials()],
                                 out["initial_ideal"])
        out["oracle"] = "reduced basis gives the same initial ideal"
    return out


def _factored(p: polyengine.LaurentPolynomial) -> str:
    import sympy
    num, den = p.cleared()
    num, den = num.trim(), den.trim()
    coeff, factors = sympy.factor_list(sympy.sympify(str(num).replace("^", "**")))
    # factors in descending text order, e.g. (t1-t3)*(t1-t2)
    parts = []
    for f, k in sorted(factors, key=lambda fk: str(fk[0]), reverse=True):
        body = f"({str(f).replace(' ', '')})"
        parts.append(body if k == 1 else f"{body}**{k}")
    if coeff == -1:
        ntxt = "-" + ("*".join(parts) or "1")
    elif coeff != 1 or not parts:
        ntxt = "*".join([str(coeff)] + parts)
    else:
        ntxt = "*".join(parts)
    dtxt = str(den).replace("^", "**").replace(" ", "")
    return ntxt if dtxt == "1" else f"{ntxt}/({dtxt})"


def _hilbert(cfg: RunConfig) -> dict:
    v, w = cfg.perms
    if cfg.grading == "standard":
        pres = klideal.kl_generators(v, w)
        init = klideal.kl_initial_ideal(pres)
        K = polyengine.k_polynomial(init, {z: (1,) for z in pres.ring_vars}, ("t",))
        out = {"v": str(v), "w": str(w), "grading": "standard", "K": str(K),
               "factored": _factored(K), "nvars": len(pres.ring_vars)}
        return out
    hs = klideal.hilbert_series(v, w)   # raises InconsistencyError on disagreement
    return {"v": str(v), "w": str(w), "grading": "torus", "K": hs.numerator.format_cleared(),
            "factored": _factored(hs.numerator), "denominator": hs.denominator_text(),
            "cross_check": "grothendieck == k-polynomial"}


def _klpoly(cfg: RunConfig) -> dict:
    x, w = cfg.perms
    table = heckealg.KLTable(w.n)
    P = heckealg.kl_polynomial(x, w, table)
    R = heckealg.r_polynomial(x, w, table)
    out = {"x": str(x), "w": str(w), "P": str(P), "R": str(R),
           "mu": heckealg.mu_coefficient(x, w, table)}
    if cfg.oracle and w.n <= 4:
        inv = heckealg.t_inverse(w.inverse())
        l = w.length()
        V = heckealg.V
        expect = R.subs({"q": V * V}) * ((-1) ** (l + x.length())) * V ** (-2 * l) if R.terms else R
        if inv.coeff(x) != expect:
            raise OracleMismatch("R-polynomial", str(inv.coeff(x)), str(expect))
        out["oracle"] = "R matches Hecke inversion"
    return out


def _pattern(cfg: RunConfig) -> dict:
    v, w = cfg.perms
    if cfg.bottom is not None:
        emb = pattern.interval_embeddings(cfg.bottom, v, w)
        return {"interval": [str(cfg.bottom), str(v)], "w": str(w),
                "embeddings": [e.to_json() for e in emb]}
    emb = pattern.classical_embeddings(v, w)
    return {"pattern": str(v), "w": str(w), "embeddings": [list(e) for e in emb]}


def _sweep(cfg: RunConfig) -> dict:
    n = cfg.n or 4
    failures = []
    count = 0
    if cfg.check == "smooth-triple":
        table = heckealg.KLTable(n)
        ident = Permutation.identity(n)
        for k, w in enumerate(perm.all_perms(n)):
            a = singclass.is_smooth(w)
            b = not singclass.singular_locus(w)
            c = perm.reflection_count(ident, w) == w.length()
            d = table.p(ident, w) == (1,)
            count += 1
            if not (a == b == c == d):
                failures.append({"w": str(w), "pattern": a, "locus_empty": b, "count": c, "kl": d})
            if k % 100 == 0:
                print(f"[sweep] {k} permutations checked", file=sys.stderr)
    elif cfg.check == "singlocus":
        for w in perm.all_perms(n):
            count += 1
            a, b = singclass.singular_locus(w), singclass.singular_locus_bruteforce(w)
            if a != b:
                failures.append({"w": str(w), "families": [str(x) for x in a],
                                 "bruteforce": [str(x) for x in b]})
    elif cfg.check in ("hilbert", "groebner"):
        for w in perm.all_perms(n):
            for v in perm.all_perms(n):
                if not perm.bruhat_leq(v, w):
                    continue
                count += 1
                try:
                    if cfg.check == "hilbert":
                        klideal.hilbert_series(v, w)
                    else:
                        pres = klideal.kl_generators(v, w)
                        order = klideal.order_antidiagonal(pres.ring_vars, n)
                        ok = (not pres.generators or polyengine.is_groebner(pres.generators, order))
                        if not ok or not klideal.kl_initial_ideal(pres).is_squarefree:
                            failures.append({"v": str(v), "w": str(w)})
                except klideal.InconsistencyError as exc:
                    failures.append({"v": str(v), "w": str(w), "error": str(exc)})
    else:
        raise argparse.ArgumentTypeError(f"unknown check {cfg.check}")
    out = {"n": n, "check": cfg.check, "checked": count, "failures": failures}
    if failures:
        raise OracleMismatch(f"sweep {cfg.check}", "no failures", out)
    return out


HANDLERS = {"classify": _classify, "singlocus": _singlocus, "ideal": _ideal,
            "groebner": _groebner, "hilbert": _hilbert, "klpoly": _klpoly,
            "pattern": _pattern, "sweep": _sweep}
ARITY = {"classify": 1, "singlocus": 1, "ideal": 2, "groebner": 2, "hilbert": 2,
         "klpoly": 2, "pattern": 2, "sweep": 0}


# ---------------------------------------------------------------------------
# argument parsing and output
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--oracle", action="store_true",
                        help="recompute with an independent method and fail on mismatch")
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--grading", choices=("standard", "torus"), default="torus")
    common.add_argument("--emit-m2", dest="emit_m2", metavar="FILE", default=None)

    p = argparse.ArgumentParser(prog="schubsing", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="smooth/lci/Gorenstein/factorial report") \
        .add_argument("perms", nargs=1, type=_perm_arg, metavar="W")
    sub.add_parser("singlocus", parents=[common], help="components of the singular locus") \
        .add_argument("perms", nargs=1, type=_perm_arg, metavar="W")
    ip = sub.add_parser("ideal", parents=[common], help="generators of I_{v,w}")
    ip.add_argument("perms", nargs=2, type=_perm_arg, metavar="PERM", help="v w with v <= w")
    ip.add_argument("--essential", action="store_true")
    sub.add_parser("groebner", parents=[common], help="Groebner check and initial ideal") \
        .add_argument("perms", nargs=2, type=_perm_arg, metavar="PERM", help="v w with v <= w")
    sub.add_parser("hilbert", parents=[common], help="Hilbert series numerator") \
        .add_argument("perms", nargs=2, type=_perm_arg, metavar="PERM", help="v w with v <= w")
    sub.add_parser("klpoly", parents=[common], help="P and R polynomials") \
        .add_argument("perms", nargs=2, type=_perm_arg, metavar="PERM", help="x w")
    pp = sub.add_parser("pattern", parents=[common], help="classical or interval embeddings")
    pp.add_argument("perms", nargs=2, type=_perm_arg, metavar="PERM", help="pattern v, then ambient w")
    pp.add_argument("--bottom", type=_perm_arg, default=None, help="u, for interval [u,v]")
    sp = sub.add_parser("sweep", parents=[common], help="exhaustive cross-checks over S_n")
    sp.add_argument("--check", choices=("smooth-triple", "singlocus", "hilbert", "groebner"),
                    default="smooth-triple")
    return p


def _text(d, indent=0) -> str:
    pad = " " * indent
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_text(v, indent + 2))
        elif isinstance(v, list):
            lines.append(f"{pad}{k}: " + ", ".join(json.dumps(x) if not isinstance(x, str) else x
                                                   for x in v))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def run(cfg: RunConfig, stream=None) -> int:
    stream = stream or sys.stdout
    try:
        body = HANDLERS[cfg.command](cfg)
        status = EXIT_OK
    except OracleMismatch as exc:
        body = {"error": "oracle mismatch", "what": exc.what, "expected": exc.expected,
                "got": exc.got}
        status = EXIT_MISMATCH
    except klideal.InconsistencyError as exc:
        body = {"error": "internal inconsistency", "what": str(exc)}
        status = EXIT_MISMATCH
    doc = {"schema": SCHEMA, "command": cfg.command, **body}
    if cfg.output == "json":
        stream.write(json.dumps(doc, sort_keys=True, default=str) + "\n")
    else:
        stream.write(_text(doc) + "\n")
    return status


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    perms = list(getattr(ns, "perms", []) or [])
    try:
        if ns.command == "pattern":
            # the pattern and the ambient permutation may differ in size
            _same_n(perms[:1] + ([ns.bottom] if ns.bottom else []))
            if perms[0].n > perms[1].n:
                raise argparse.ArgumentTypeError("pattern is larger than the permutation")
        else:
            _same_n(perms)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    cfg = RunConfig(command=ns.command, perms=perms, output=ns.format, oracle=ns.oracle,
                    n=ns.n, check=getattr(ns, "check", "smooth-triple"), grading=ns.grading,
                    emit_m2=ns.emit_m2, bottom=getattr(ns, "bottom", None),
                    essential=getattr(ns, "essential", False))
    if cfg.command in ("hilbert", "groebner", "klpoly") and not perm.bruhat_leq(*perms):
        parser.error(f"{perms[0]} is not below {perms[1]} in Bruhat order")
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
