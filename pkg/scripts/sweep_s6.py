"""Exhaustive S_n sweeps: smoothness triple, singular loci, property counts.

usage: python3 scripts/sweep_s6.py [n]     (default n = 6)
"""
import sys
import time

from schubsing.heckealg import KLTable
from schubsing.perm import Permutation, all_perms, reflection_count
from schubsing.singclass import (
    is_factorial, is_gorenstein, is_lci, is_smooth, singular_locus, singular_locus_bruteforce,
)


def main(n: int) -> int:
    t0 = time.time()
    table = KLTable(n)
    ident = Permutation.identity(n)
    counts = dict(smooth=0, gorenstein=0, lci=0, factorial=0)
    bad = []
    for w in all_perms(n):
        loc = singular_locus(w)
        triple = {is_smooth(w), not loc, reflection_count(ident, w) == w.length(),
                  table.p(ident, w) == (1,)}
        if len(triple) != 1 or loc != singular_locus_bruteforce(w):
            bad.append(str(w))
        counts["smooth"] += is_smooth(w)
        counts["gorenstein"] += is_gorenstein(w)
        counts["lci"] += is_lci(w)
        counts["factorial"] += is_factorial(w)
    print(f"S_{n}: {counts}")
    print(f"disagreements: {bad or 'none'}  ({time.time() - t0:.1f} s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 6))
