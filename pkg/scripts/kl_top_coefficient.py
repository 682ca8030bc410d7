"""Top-degree KL coefficient for the S_10 pair, under both readings of the reference v.

The reference v has eleven symbols with 4 repeated; deleting either 4 leaves a
permutation.  Only one reading gives the claimed coefficient.

usage: python3 scripts/kl_top_coefficient.py
"""
import time

from schubsing.heckealg import KLTable, mu_coefficient
from schubsing.perm import bruhat_leq, parse_one_line

W = parse_one_line("10,5,7,8,2,9,3,4,6,1")
READINGS = ("5,4,3,2,1,10,9,8,7,6", "5,3,2,1,10,9,8,7,6,4")


def main() -> None:
    for text in READINGS:
        v = parse_one_line(text)
        if not bruhat_leq(v, W):
            print(f"v = {text}: not below w")
            continue
        t0 = time.time()
        table = KLTable(10)
        p = table.p(v, W)
        mu = mu_coefficient(v, W, table)
        print(f"v = {text}: l(w)-l(v) = {W.length() - v.length()}, "
              f"P coefficients {p}, top coefficient {mu}, {time.time() - t0:.0f} s")


if __name__ == "__main__":
    main()
