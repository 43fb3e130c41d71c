"""Constancy of the general polar across a stratum, seen by sampling.

Sweeping random parameter tuples through each stratum shows one polar type
per stratum on a dense open set; injecting the known walls of the last
stratum exhibits every special type alongside the generic majority, with
the polar Milnor number constant within each group.
"""

from branchpolar import stratum_sweep
from branchpolar.families import gamma_5_12

for row in (8, 11, 16):
    rep = stratum_sweep(gamma_5_12(row), 10, seed=row)
    g = rep.groups[0]
    print(f"stratum {row:>2}: {g.count}/{rep.trials} trials -> {g.polar_type}"
          f"  (polar mu {g.polar_milnor})")

print()
print("stratum 18 with its walls injected:")
rep18 = stratum_sweep(gamma_5_12(18), 12, seed=18)
for g in rep18.groups:
    ex = g.examples[0] if g.examples else {}
    shown = ", ".join(f"{k}={v}" for k, v in sorted(ex.items()))
    print(f"  {g.count:>2} trials: {g.polar_type}")
    print(f"      polar mu {g.polar_milnor}; e.g. {shown}")
