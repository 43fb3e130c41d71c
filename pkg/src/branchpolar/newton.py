"""Newton polygons of curve germs, side polynomials, non-degeneracy, and the
equisingularity type of Newton non-degenerate germs.

For a germ with x and y stripped off, the compact Newton boundary runs from
the point (0, h) on the j-axis to (w, 0) on the i-axis.  A side L with
endpoints (i_k, j_k), (i_{k+1}, j_{k+1}) has height n_L = j_k - j_{k+1},
width m_L = i_{k+1} - i_k, inclination d_L = m_L / n_L, and side polynomial

    p_L(z) = z^(-j_{k+1}) f_L(1, z),

of degree n_L with nonzero constant term.  The germ is Newton non-degenerate
when every p_L is squarefree; its equisingularity type is then pure polygon
combinatorics: side i contributes gcd(n_i, m_i) branches with Newton pair
(n_i/r_i, m_i/r_i), and branches on sides i, i' meet with multiplicity
inf(d_i, d_i') (n_i/r_i)(n_i'/r_i').
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import AxisFactorError
from .eqtype import EquisingularityType
from .poly import BivariatePolynomial
from .semigroup import NumericalSemigroup, semigroup_from_generators
from .tower import Value
from .unipoly import is_squarefree, ustrip


@dataclass(frozen=True)
class Side:
    """One compact side of a Newton polygon with its lattice data."""

    start: tuple[int, int]
    end: tuple[int, int]
    side_polynomial: tuple  # UPoly coefficients, constant term first

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def width(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def inclination(self) -> Fraction:
        return Fraction(self.width, self.height)

    @property
    def branch_count(self) -> int:
        return gcd(self.height, self.width)

    def newton_pair(self) -> tuple[int, int]:
        r = self.branch_count
        return self.height // r, self.width // r

    def __repr__(self):
        return f"Side[{self.start};{self.end}]"


@dataclass(frozen=True)
class NewtonPolygon:
    """Compact Newton boundary of a germ, plus stripped axis multiplicities.

    ``x_mult``/``y_mult`` record axis factors x^p, y^q removed before the
    hull computation so that the vertices satisfy the boundary invariants
    (first vertex on the j-axis, last on the i-axis).
    """

    vertices: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]
    x_mult: int = 0
    y_mult: int = 0

    def __repr__(self):
        return f"NewtonPolygon(vertices={list(self.vertices)})"


def newton_polygon(f: BivariatePolynomial) -> NewtonPolygon:
    """Lower-left convex hull of the support, restricted to compact sides.

    Axis factors are stripped first and recorded on the result; each side
    carries its side polynomial p_L(z) = z^(-j_end) f_L(1, z).
    """
    if f.is_zero:
        raise ValueError("Newton polygon of the zero polynomial")
    p, f1 = f.strip_x_power()
    q, f1 = f1.strip_y_power()
    support = f1.support()
    if support == [(0, 0)]:
        return NewtonPolygon((), (), p, q)
    # staircase reduction: minimal j for each i, then the monotone hull
    min_j: dict[int, int] = {}
    for (i, j) in support:
        if i not in min_j or j < min_j[i]:
            min_j[i] = j
    j_min = min(min_j.values())
    w = min(i for i, j in min_j.items() if j == j_min)
    pts = sorted((i, j) for i, j in min_j.items() if i <= w)
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # pop non-vertices: collinear middles and points above the chain
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    sides = []
    for a, b in zip(hull, hull[1:]):
        on_side = [
            (i, j)
            for (i, j) in f1.support()
            if a[0] <= i <= b[0] and _cross(a, b, (i, j)) == 0
        ]
        coeffs: list[Value] = [Fraction(0)] * (a[1] - b[1] + 1)
        for (i, j) in on_side:
            coeffs[j - b[1]] = f1.terms[(i, j)]
        sides.append(Side(a, b, tuple(ustrip(coeffs))))
    return NewtonPolygon(tuple(hull), tuple(sides), p, q)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def is_newton_nondegenerate(f: BivariatePolynomial) -> bool:
    """True iff every side polynomial is squarefree.

    Requires an axis-free germ: callers strip x- and y-factors first and
    handle them separately (they are smooth branches)."""
    if f.x_power_divisor() > 0 or f.y_power_divisor() > 0:
        raise AxisFactorError("axis factor present; strip x^p y^q first")
    np = newton_polygon(f)
    return all(is_squarefree(list(s.side_polynomial)) for s in np.sides)


def nondegenerate_type(np: NewtonPolygon) -> EquisingularityType:
    """Equisingularity type of a Newton non-degenerate germ from its polygon.

    Side i of height n_i and width m_i carries r_i = gcd(n_i, m_i) branches
    with semigroup <n_i/r_i, m_i/r_i> (smooth when the reduced height is 1);
    pairwise intersections follow the inf-of-inclinations formula, applied
    with d_i = d_{i'} for distinct branches on one side.  Stripped axis
    factors re-enter as smooth branches: x^p (resp. y^q) meets a side branch
    with multiplicity n_i/r_i (resp. m_i/r_i), and I(x, y) = 1.
    """
    if np.x_mult > 1 or np.y_mult > 1:
        raise ValueError("axis factor with multiplicity: germ not reduced")
    branches: list[NumericalSemigroup] = []
    meta: list[tuple[str, Fraction, int, int]] = []  # kind, inclination, n', m'
    if np.x_mult:
        branches.append(semigroup_from_generators([1]))
        meta.append(("x", Fraction(0), 0, 1))
    for s in np.sides:
        if s.height <= 0 or s.width <= 0:
            raise ValueError(f"inconsistent side data {s!r}")
        nn, mm = s.newton_pair()
        for _ in range(s.branch_count):
            if nn == 1:
                branches.append(semigroup_from_generators([1]))
            else:
                branches.append(semigroup_from_generators([nn, mm]))
            meta.append(("side", s.inclination, nn, mm))
    if np.y_mult:
        branches.append(semigroup_from_generators([1]))
        meta.append(("y", None, 1, 0))
    r = len(branches)
    if r == 0:
        raise ValueError("empty polygon: no branches")
    mat = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            ki, di, ni, mi = meta[i]
            kj, dj, nj, mj = meta[j]
            if ki == "x" or kj == "x":
                other = meta[j] if ki == "x" else meta[i]
                val = 1 if (ki == "x" and kj == "y") or (kj == "x" and ki == "y") else other[2]
            elif ki == "y" or kj == "y":
                other = meta[j] if ki == "y" else meta[i]
                val = other[3]  # ord_t y(t) = m'
            else:
                d = min(di, dj)
                val = d * ni * nj
                if val.denominator != 1:
                    raise ValueError("non-integral intersection from polygon data")
                val = int(val)
            mat[i][j] = mat[j][i] = val
    return EquisingularityType.of(branches, mat)
