"""The analytic type of a polar depends on the direction.

For the branch (t^5, t^12 + t^21) every general polar is topologically the
same <4,11> branch, but the polars for two directions (a:b), (a':b') are
analytically equivalent only when a^3/b^3 = a'^3/b'^3.  The criterion runs
on the direction-parametrized normal forms through the root-of-unity test.
"""

import random
from fractions import Fraction as F

from branchpolar import PuiseuxBranch, generic_polar_type, normal_form_equivalent

b = PuiseuxBranch.from_terms(5, {12: F(1), 21: F(1)})
rep = generic_polar_type(b, samples=5, rng=random.Random(4))
print(f"topological type of the polar at 5 random directions: {rep.polar_type}")
print(f"certified constant: {rep.certified}")
print()


def polar_normal_form(a, bb):
    # multiplicity-4 normal form of the polar at direction (a : b); the
    # modulus is proportional to (12a/5b)^3
    return PuiseuxBranch.from_terms(
        4, {11: F(1), 14: F(1), 17: F(-1, 2), 21: F(15, 2) * F(12 * a, 5 * bb) ** 3}
    )


print("analytic equivalence of polars (lambda = 14, so zeta^3 = 1):")
pairs = [((1, 1), (2, 2)), ((1, 1), (2, 1)), ((2, 3), (4, 6)), ((-1, 1), (1, 1))]
for (a1, b1), (a2, b2) in pairs:
    eq = normal_form_equivalent(polar_normal_form(a1, b1), polar_normal_form(a2, b2), 14)
    marker = "==" if eq else "!="
    print(f"  direction ({a1}:{b1}) {marker} direction ({a2}:{b2})"
          f"   [a^3/b^3: {F(a1, b1)**3} vs {F(a2, b2)**3}]")
