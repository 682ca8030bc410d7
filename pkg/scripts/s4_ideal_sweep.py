"""All Bruhat pairs of S_n (n <= 4): Groebner check, Hilbert cross-check, tangent space.

usage: python3 scripts/s4_ideal_sweep.py [n]
"""
import sys
import time

from schubsing.klideal import (
    hilbert_series, is_standard_homogeneous, kl_generators, kl_initial_ideal,
    multiplicity_standard_homogeneous, order_antidiagonal, tangent_dim,
)
from schubsing.perm import all_perms, bruhat_leq, reflection_count
from schubsing.polyengine import is_groebner


def main(n: int) -> int:
    t0 = time.time()
    rows = []
    for w in all_perms(n):
        for v in all_perms(n):
            if not bruhat_leq(v, w):
                continue
            pres = kl_generators(v, w)
            gb = not pres.generators or is_groebner(pres.generators, order_antidiagonal(pres.ring_vars, n))
            sqf = kl_initial_ideal(pres).is_squarefree
            hilbert_series(v, w)            # raises if the two computations disagree
            excess = tangent_dim(pres) - (w.length() - v.length())
            smooth = reflection_count(v, w) == w.length() - v.length()
            mult = None
            if is_standard_homogeneous(pres):
                mult = multiplicity_standard_homogeneous(v, w)[1]
            rows.append((str(v), str(w), gb, sqf, excess, smooth, mult))
    bad = [r for r in rows if not (r[2] and r[3] and (r[4] == 0) == r[5])]
    for r in rows:
        if not r[5]:
            print("singular pair v=%s w=%s  tangent excess %d  multiplicity %s" % (r[0], r[1], r[4], r[6]))
    print(f"{len(rows)} pairs, {len(bad)} failures, {time.time() - t0:.1f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 4))
