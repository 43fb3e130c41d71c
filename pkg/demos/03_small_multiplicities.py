"""Polars of all branches of multiplicity three and four.

Multiplicity two polars are smooth; multiplicity three is governed by the
parity of 2q + k + eps; multiplicity four splits into genus one (five normal
forms, with sqrt(6)-walls in the hardest case) and genus two (always a
<2, k1> branch plus a smooth one meeting it k1 times).
"""

from fractions import Fraction as F

from branchpolar import PuiseuxBranch, generic_polar_type
from branchpolar.families import SQRT6

print("multiplicity three, y = t^beta + t^(beta+eps+3k):")
for beta, k in ((7, 0), (10, 0), (10, 1), (13, 2)):
    eps = beta % 3
    q = (beta - eps) // 3
    b = PuiseuxBranch.from_terms(3, {beta: F(1), beta + eps + 3 * k: F(1)})
    rep = generic_polar_type(b, samples=2)
    e = 2 * q + k + eps
    print(f"  beta={beta:>2} k={k}: 2q+k+eps = {e:>2} ({'odd' if e % 2 else 'even'}):"
          f" {rep.polar_type}")

print()
print("multiplicity four, genus one, second normal form at m=29, j=13:")
wall = F(4, 9) * SQRT6


def nf2(m, j, avals):
    q4 = m // 4
    terms = {m: F(1), 3 * m - 4 * j: F(1)}
    for i, v in avals.items():
        terms[2 * m - 4 * (j - q4 - i)] = v
    return PuiseuxBranch.from_terms(4, terms)


for label, avals in [
    ("a1 generic          ", {1: F(2)}),
    ("a1 = 4 sqrt6 / 9    ", {1: wall}),
    ("  ... + a2 (s odd)  ", {1: wall, 2: F(3)}),
    ("  ... + a3 (s even) ", {1: wall, 3: F(3)}),
    ("  ... + a4 = wall   ", {1: wall, 4: F(-4, 81) * SQRT6}),
]:
    rep = generic_polar_type(nf2(29, 13, avals), samples=2)
    print(f"  {label}: {rep.polar_type}")

print()
print("multiplicity four, genus two:")
for v1, v2 in ((6, 13), (6, 17), (10, 21)):
    terms = {v1: F(1), v2 - v1: F(1)}
    s = 1
    while v2 - 4 * s > v2 - v1:
        terms[v2 - 4 * s] = F(1, 2)
        s += 1
    rep = generic_polar_type(PuiseuxBranch.from_terms(4, terms), samples=2)
    print(f"  (v1,v2)=({v1},{v2}): k1={v1 // 2}: {rep.polar_type}")
