"""Exact bivariate polynomials and subresultant resultants.

A :class:`BivariatePolynomial` is a sparse support-indexed polynomial in
``x, y`` whose coefficients are rationals or tower elements; no stored
coefficient is ring-zero.  The same class doubles as the coefficient ring for
the polynomial remainder sequences below: a univariate polynomial in a main
variable (``y`` for ``resultant_y``, the parameter ``t`` for
implicitization) is a dense list of :class:`BivariatePolynomial`
coefficients, and the resultant is computed by the subresultant PRS of Brown,
which keeps intermediate coefficients at subresultant size instead of letting
pseudo-remainders blow up.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .tower import Value, invert_value, project_value, value_is_zero


class BivariatePolynomial:
    """Polynomial in x, y with exact coefficients, indexed by support.

    ``terms`` maps ``(i, j)`` (x- and y-exponents) to a nonzero coefficient.
    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Value] | None = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent in support")
                if not value_is_zero(c):
                    clean[(i, j)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> "BivariatePolynomial":
        return BivariatePolynomial()

    @staticmethod
    def constant(c) -> "BivariatePolynomial":
        return BivariatePolynomial({(0, 0): c if not isinstance(c, int) else Fraction(c)})

    @staticmethod
    def monomial(i: int, j: int, c=Fraction(1)) -> "BivariatePolynomial":
        if isinstance(c, int):
            c = Fraction(c)
        return BivariatePolynomial({(i, j): c})

    @staticmethod
    def from_x_poly(coeffs: Iterable[Value]) -> "BivariatePolynomial":
        return BivariatePolynomial({(i, 0): c for i, c in enumerate(coeffs)})

    # -- structure -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.terms)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def coefficient_of_y(self, j: int) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {(i, 0): c for (i, jj), c in self.terms.items() if jj == j}
        )

    def y_coefficients(self) -> list["BivariatePolynomial"]:
        """Dense list of x-polynomials: ``self = sum coeffs[j] * y^j``."""
        d = self.degree_y()
        out = [dict() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            out[j][(i, 0)] = c
        return [BivariatePolynomial(t) for t in out]

    @staticmethod
    def from_y_coefficients(coeffs: list["BivariatePolynomial"]) -> "BivariatePolynomial":
        terms = {}
        for j, p in enumerate(coeffs):
            for (i, jj), c in p.terms.items():
                if jj:
                    raise ValueError("coefficient polynomials must be x-only")
                terms[(i, j)] = c
        return BivariatePolynomial(terms)

    def x_power_divisor(self) -> int:
        """Largest p with x^p dividing self (0 for the zero polynomial)."""
        return min((i for i, _ in self.terms), default=0)

    def y_power_divisor(self) -> int:
        return min((j for _, j in self.terms), default=0)

    def x_order(self) -> int:
        """Order in x of an x-only polynomial; leading term must be a unit in
        every component, so zero-divisor coefficients split the tower."""
        if self.is_zero:
            raise ValueError("x_order of the zero polynomial")
        from .tower import classify_value

        for i in sorted(i for i, _ in self.terms):
            kind, _ = classify_value(self.terms[(i, 0)])
            if kind == "unit":
                return i
        raise ValueError("no invertible coefficient found")

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            if k in terms:
                s = terms[k] + c
                if value_is_zero(s):
                    del terms[k]
                else:
                    terms[k] = s
            else:
                terms[k] = c
        out = BivariatePolynomial.__new__(BivariatePolynomial)
        out.terms = terms
        return out

    def __neg__(self) -> "BivariatePolynomial":
        out = BivariatePolynomial.__new__(BivariatePolynomial)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "BivariatePolynomial":
        if not isinstance(other, BivariatePolynomial):
            return self.scale(other)
        terms: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                p = c1 * c2
                if k in terms:
                    p = terms[k] + p
                if value_is_zero(p):
                    terms.pop(k, None)
                else:
                    terms[k] = p
        out = BivariatePolynomial.__new__(BivariatePolynomial)
        out.terms = terms
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "BivariatePolynomial":
        if isinstance(c, int):
            c = Fraction(c)
        if value_is_zero(c):
            return BivariatePolynomial()
        out = BivariatePolynomial.__new__(BivariatePolynomial)
        out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "BivariatePolynomial":
        out = BivariatePolynomial.constant(Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return (self - other).is_zero

    __hash__ = None

    # -- calculus and substitutions -----------------------------------------------

    def derivative_x(self) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {(i - 1, j): i * c for (i, j), c in self.terms.items() if i}
        )

    def derivative_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {(i, j - 1): j * c for (i, j), c in self.terms.items() if j}
        )

    def shift_y(self, rho: Value) -> "BivariatePolynomial":
        """Substitute y -> y + rho*x."""
        from math import comb

        terms: dict = {}
        for (i, j), c in self.terms.items():
            for k in range(j + 1):
                key = (i + j - k, k)
                add = c * (comb(j, k) * rho ** (j - k))
                if key in terms:
                    add = terms[key] + add
                if value_is_zero(add):
                    terms.pop(key, None)
                else:
                    terms[key] = add
        return BivariatePolynomial(terms)

    def shift_x(self, sigma: Value) -> "BivariatePolynomial":
        """Substitute x -> x + sigma*y."""
        from math import comb

        terms: dict = {}
        for (i, j), c in self.terms.items():
            for k in range(i + 1):
                key = (k, j + i - k)
                add = c * (comb(i, k) * sigma ** (i - k))
                if key in terms:
                    add = terms[key] + add
                if value_is_zero(add):
                    terms.pop(key, None)
                else:
                    terms[key] = add
        return BivariatePolynomial(terms)

    def strip_x_power(self) -> tuple[int, "BivariatePolynomial"]:
        p = self.x_power_divisor()
        if p == 0:
            return 0, self
        return p, BivariatePolynomial({(i - p, j): c for (i, j), c in self.terms.items()})

    def strip_y_power(self) -> tuple[int, "BivariatePolynomial"]:
        q = self.y_power_divisor()
        if q == 0:
            return 0, self
        return q, BivariatePolynomial({(i, j - q): c for (i, j), c in self.terms.items()})

    def project(self, tower) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {k: project_value(c, tower) for k, c in self.terms.items()}
        )

    def map_values(self, fn) -> "BivariatePolynomial":
        return BivariatePolynomial({k: fn(c) for k, c in self.terms.items()})

    # -- exact division -------------------------------------------------------------

    def exact_div(self, d: "BivariatePolynomial") -> "BivariatePolynomial":
        """Exact quotient self/d; raises ArithmeticError when not divisible.

        Uses lex leading-term elimination, which terminates with zero
        remainder precisely for exact divisions over a coefficient field (or
        a D5 product of fields, splitting on zero-divisor leading values).
        """
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return BivariatePolynomial()
        dlt = max(d.terms)
        dinv = invert_value(d.terms[dlt])
        rem = dict(self.terms)
        out: dict = {}
        while rem:
            lt = max(rem)
            mi, mj = lt[0] - dlt[0], lt[1] - dlt[1]
            if mi < 0 or mj < 0:
                raise ArithmeticError("division is not exact")
            c = rem[lt] * dinv
            out[(mi, mj)] = c
            for (i, j), dc in d.terms.items():
                key = (i + mi, j + mj)
                v = rem.get(key, Fraction(0)) - c * dc
                if value_is_zero(v):
                    rem.pop(key, None)
                else:
                    rem[key] = v
        return BivariatePolynomial(out)

    def __repr__(self):
        if self.is_zero:
            return "BivariatePolynomial(0)"
        bits = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            c = self.terms[(i, j)]
            mono = "".join(
                s
                for s in (
                    f"x^{i}" if i > 1 else ("x" if i == 1 else ""),
                    f"y^{j}" if j > 1 else ("y" if j == 1 else ""),
                )
                if s
            )
            bits.append(f"({c}){mono}" if mono else f"({c})")
        return "BivariatePolynomial(" + " + ".join(bits) + ")"


# -- polynomial remainder sequences over BivariatePolynomial coefficients ------

MainPoly = list  # dense list of BivariatePolynomial in a main variable


def _mstrip(f: MainPoly) -> MainPoly:
    n = len(f)
    while n and f[n - 1].is_zero:
        n -= 1
    return list(f[:n])


def _mdeg(f: MainPoly) -> int:
    return len(f) - 1


def _mscale(f: MainPoly, c: BivariatePolynomial) -> MainPoly:
    return _mstrip([fi * c for fi in f])


def _mquo_ground(f: MainPoly, c: BivariatePolynomial) -> MainPoly:
    return [fi.exact_div(c) if not fi.is_zero else fi for fi in f]


def _prem(f: MainPoly, g: MainPoly) -> MainPoly:
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g."""
    df, dg = _mdeg(f), _mdeg(g)
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    r = _mstrip(f)
    lc_g = g[-1]
    n = df - dg + 1
    while _mdeg(r) >= dg:
        dr = _mdeg(r)
        lead = r[-1]
        # r <- lc(g)*r - lead*T^(dr-dg)*g; the leading terms cancel exactly
        r = [ri * lc_g for ri in r[:-1]]
        for k in range(dg):
            r[dr - dg + k] = r[dr - dg + k] - g[k] * lead
        r = _mstrip(r)
        n -= 1
    if n > 0 and r:
        r = _mscale(r, lc_g ** n)
    return r


def subresultant_prs(f: MainPoly, g: MainPoly) -> tuple[list[MainPoly], list[BivariatePolynomial]]:
    """Brown's subresultant PRS.

    Returns the remainder sequence and the scalar subresultants; when the
    last PRS element has main-degree zero, the last scalar is the resultant
    of the (possibly swapped) pair.
    """
    f, g = _mstrip(f), _mstrip(g)
    n, m = _mdeg(f), _mdeg(g)
    if n < m:
        f, g = g, f
        n, m = m, n
    if n < 0:
        return [], []
    one = BivariatePolynomial.constant(Fraction(1))
    if m < 0:
        return [f], [one]
    R = [f, g]
    d = n - m
    sign = -one if (d + 1) % 2 else one
    h = _prem(f, g)
    h = _mscale(h, sign)
    lc = g[-1]
    c = lc ** d
    S = [one, c]
    c = -c
    while h:
        k = _mdeg(h)
        R.append(h)
        f, g, m, d = g, h, k, m - k
        b = -(lc * (c ** d))
        h = _prem(f, g)
        h = _mquo_ground(h, b)
        lc = g[-1]
        if d > 1:
            c = ((-lc) ** d).exact_div(c ** (d - 1))
        else:
            c = -lc
        S.append(-c)
    return R, S


def prs_resultant(f: MainPoly, g: MainPoly) -> BivariatePolynomial:
    """Resultant of two main-variable polynomials with the Sylvester sign
    convention (the internal PRS swaps arguments of increasing degree, which
    costs a factor (-1)^(deg f * deg g))."""
    f, g = _mstrip(f), _mstrip(g)
    if not f or not g:
        return BivariatePolynomial.zero()
    if _mdeg(f) == 0 and _mdeg(g) == 0:
        raise ValueError("resultant of two constants is not defined here")
    if _mdeg(f) == 0:
        return f[0] ** _mdeg(g)
    if _mdeg(g) == 0:
        return g[0] ** _mdeg(f)
    swapped = _mdeg(f) < _mdeg(g)
    R, S = subresultant_prs(f, g)
    if _mdeg(R[-1]) > 0:
        return BivariatePolynomial.zero()
    res = S[-1]
    if swapped and (_mdeg(f) * _mdeg(g)) % 2:
        res = -res
    return res


def resultant_y(f: BivariatePolynomial, g: BivariatePolynomial) -> BivariatePolynomial:
    """Resultant of f and g with respect to y (an x-only polynomial).

    Computed by subresultant PRS.  Inputs of y-degree zero in both arguments
    are rejected; if exactly one has positive y-degree the resultant
    degenerates to a power of the other.
    """
    dyf, dyg = f.degree_y(), g.degree_y()
    if dyf <= 0 and dyg <= 0:
        raise ValueError("resultant_y needs positive y-degree in an argument")
    if f.is_zero or g.is_zero:
        raise ValueError("resultant_y of the zero polynomial")
    res = prs_resultant(f.y_coefficients(), g.y_coefficients())
    if res.degree_y() > 0:
        raise AssertionError("resultant_y did not eliminate y")
    return res


def y_gcd_degree(f: BivariatePolynomial, g: BivariatePolynomial) -> int:
    """Degree in y of gcd(f, g) over the fraction field in x (0 means
    coprime as y-polynomials)."""
    F, G = _mstrip(f.y_coefficients()), _mstrip(g.y_coefficients())
    if not F:
        return _mdeg(G) if G else -1
    if not G:
        return _mdeg(F)
    R, _ = subresultant_prs(F, G)
    return _mdeg(R[-1])


def sylvester_resultant_y(f: BivariatePolynomial, g: BivariatePolynomial) -> BivariatePolynomial:
    """Resultant via fraction-free Bareiss elimination of the Sylvester
    matrix; an independent route kept as an oracle for the PRS path."""
    F, G = _mstrip(f.y_coefficients()), _mstrip(g.y_coefficients())
    n, m = _mdeg(F), _mdeg(G)
    if n < 0 or m < 0:
        return BivariatePolynomial.zero()
    size = n + m
    zero = BivariatePolynomial.zero()
    M = [[zero] * size for _ in range(size)]
    for r in range(m):
        for k in range(n + 1):
            M[r][r + k] = F[n - k]
    for r in range(n):
        for k in range(m + 1):
            M[m + r][r + k] = G[m - k]
    # Bareiss: exact-division fraction-free Gaussian elimination
    sign = 1
    prev = BivariatePolynomial.constant(Fraction(1))
    for k in range(size - 1):
        if M[k][k].is_zero:
            for r in range(k + 1, size):
                if not M[r][k].is_zero:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return BivariatePolynomial.zero()
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                num = M[r][c] * M[k][k] - M[r][k] * M[k][c]
                M[r][c] = num.exact_div(prev)
            M[r][k] = zero
        prev = M[k][k]
    det = M[size - 1][size - 1]
    return det if sign == 1 else -det
