"""Newton-Puiseux expansion of a reduced germ into tower-valued branches.

For each compact side of the Newton polygon, the side polynomial is
squarefree-factored over the current tower (Yun's algorithm under dynamic
evaluation), each factor is adjoined as a single root, and the germ is
recentered by x = x1^e, y = x1^q (z + y1) with d = m/n = q/e in lowest
terms.  Simple roots continue as regular implicit-function solutions by a
quadratically convergent Newton iteration on truncated series; multiple
roots recurse on the transformed germ.  Fractional exponents never appear:
the ramifications e multiply up into the final substitution x = t^N.

Conjugate branches are never separated.  A finished branch whose tower has
relative degree D over the expansion base represents D / N geometric
branches (N its ramification): the side polynomial is invariant under
z -> zeta z for zeta^e = 1, so each geometric branch occurs once per
reparametrization t -> zeta t of its parametrization, N times in total.

Splits raised anywhere during the expansion are caught at the top level; the
whole expansion re-runs in each component tower and the branch lists merge
(components partition the conjugates, so nothing is double counted).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, gcd

from .branch import PuiseuxBranch, characteristic_exponents
from .errors import NotReducedError, PrecisionError
from .implicit import milnor_number
from .newton import newton_polygon
from .poly import BivariatePolynomial, y_gcd_degree
from .series import TruncatedSeries, evaluate_bivariate
from .tower import (
    Tower,
    classify_value,
    over_components,
    project_value,
    value_is_zero,
)
from .unipoly import uyun

_fresh_counter = itertools.count(1)


def _base_tower(f: BivariatePolynomial) -> Tower | None:
    for c in f.terms.values():
        tw = getattr(c, "tower", None)
        if tw is not None:
            return tw
    return None


def puiseux_expand(
    f: BivariatePolynomial,
    target_order: int | None = None,
    retries: int = 3,
) -> list[PuiseuxBranch]:
    """All branches of a reduced germ f through the origin, as
    :class:`PuiseuxBranch` values expanded at least to ``target_order``
    and until every branch's semigroup is resolved.

    Raises NotReducedError for germs with multiple components, ValueError
    for x-axis factors (those cannot be written as x = t^n) and for germs
    not vanishing at the origin.
    """
    if f.is_zero:
        raise ValueError("cannot expand the zero polynomial")
    if f.x_power_divisor() > 0:
        raise ValueError("x divides f: the vertical axis branch has no x = t^n form")
    if (0, 0) in f.terms:
        raise ValueError("f(0,0) != 0: no germ at the origin")
    if y_gcd_degree(f, f.derivative_y()) > 0:
        raise NotReducedError("f and f_y share a y-factor")
    base = _base_tower(f)
    base_height = base.height if base is not None else 0
    deg = f.degree_y()
    if target_order is None:
        mu = milnor_number(f)
        # pairwise contacts are bounded by (mu + r - 1)/2, so mu + deg + a
        # small margin resolves semigroups and contacts; retries double it
        target_order = mu + deg + 4
        max_depth = (mu + deg) // 2 + 2
    else:
        max_depth = target_order  # explicit budgets trust the caller

    budget = target_order
    last_exc: Exception | None = None
    for _attempt in range(retries + 1):
        try:
            branches = _expand_all(f, base, base_height, budget, max_depth)
            for b in branches:
                if b.trunc is not None:
                    characteristic_exponents(b)  # semigroup stabilized?
            _post_check(f, branches, budget)
            return branches
        except PrecisionError as exc:
            last_exc = exc
            budget *= 2
    raise PrecisionError(f"truncation exhausted after {retries} retries: {last_exc}")


def _expand_all(f, base, base_height, budget, max_depth) -> list[PuiseuxBranch]:
    def proj(tw, poly):
        return poly.project(tw)

    def compute(tw, poly):
        states = _expand_germ(poly, tw if tw.height else None, budget, 0, max_depth)
        out = []
        for stw, n, terms, valid in states:
            for c in terms.values():
                kind, _ = classify_value(c)  # emission: coefficients are units
                if kind == "zero":
                    raise AssertionError("ring-zero coefficient emitted")
            degree_above = stw.degree_above(base_height) if stw is not None else 1
            if degree_above % n:
                raise AssertionError(
                    f"conjugate count {degree_above} not divisible by ramification {n}"
                )
            out.append(
                PuiseuxBranch.from_terms(n, terms, valid, conjugacy=degree_above // n)
            )
        return out

    start = base if base is not None else Tower()
    results = over_components(start, f, proj, compute, min_stage=base_height)
    return [b for _tw, bs in results for b in bs]


def _expand_germ(f, tower, budget, depth, max_depth):
    """Recursive side expansion; yields states (tower, N, terms, valid_order)
    where the terms parametrize y(t) with x = t^N correct modulo
    t^valid_order (None = exact)."""
    states = []
    q, f = f.strip_y_power()
    if q >= 2:
        raise NotReducedError("y^2 divides the germ")
    if q == 1:
        states.append((tower if tower is not None else Tower(), 1, {}, None))
    if f.is_zero or (0, 0) in f.terms:
        return states
    if f.x_power_divisor() > 0:
        raise NotReducedError("x-power appeared inside the expansion")
    np = newton_polygon(f)
    for side in np.sides:
        states.extend(_expand_side(f, side, tower, budget, depth, max_depth))
    return states


def _expand_side(f, side, tower, budget, depth, max_depth):
    n_l, m_l = side.height, side.width
    r = gcd(n_l, m_l)
    # inclination d = m_l/n_l = qx/e in lowest terms drives the recentering
    e, qx = n_l // r, m_l // r
    p_l = list(side.side_polynomial)
    out = []
    for g, mult in uyun(p_l):
        if len(g) - 1 == 0:
            continue
        if len(g) - 1 == 1:
            root = -g[0]
            tower2 = tower
        else:
            host = tower if tower is not None else Tower()
            name = f"r{next(_fresh_counter)}"
            lifted = [host.lift(c).rep for c in g]
            tower2 = host.adjoin(name, lifted)
            root = tower2.generator(tower2.height)
        # the recentering raises every final validity by q*N_child >= qx, so
        # the child only needs the budget shrunk by qx
        child_budget = max(budget - qx, 4)
        f2 = _recenter(f, e, qx, root, child_budget)
        if mult == 1:
            terms, valid = _regular_solve(f2, child_budget)
            children = [(tower2 if tower2 is not None else Tower(), 1, terms, valid)]
        else:
            if depth + 1 > max_depth:
                raise NotReducedError(
                    "repeated side-polynomial root persists beyond the delta bound"
                )
            children = _expand_germ(f2, tower2, child_budget, depth + 1, max_depth)
        for tw3, n_c, terms_c, valid in children:
            root3 = project_value(root, tw3 if tw3.height else None)
            n_total = e * n_c
            terms = {qx * n_c + k: v for k, v in terms_c.items()}
            base_exp = qx * n_c
            if not value_is_zero(root3):
                terms[base_exp] = root3
            # the recentering y = x1^q (root + y1) shifts validity upward
            valid_total = None if valid is None else qx * n_c + valid
            out.append((tw3, n_total, terms, valid_total))
    return out


def _recenter(f, e, q, root, budget):
    """f(x1^e, x1^q (root + y1)) divided by its x1-power, truncated in x1."""
    lvl = min(e * i + q * j for (i, j) in f.terms)
    maxj = f.degree_y()
    rpow = [Fraction(1)]
    for _ in range(maxj):
        rpow.append(rpow[-1] * root)
    terms: dict = {}
    for (i, j), c in f.terms.items():
        base = e * i + q * j - lvl
        if base > budget:
            continue
        for k in range(j + 1):
            key = (base, k)
            add = c * (comb(j, k) * rpow[j - k])
            if key in terms:
                add = terms[key] + add
            if value_is_zero(add):
                terms.pop(key, None)
            else:
                terms[key] = add
    return BivariatePolynomial(terms)


def _regular_solve(f, budget) -> tuple[dict, int | None]:
    """Solve f(x, y(x)) = 0 with y(0) = 0 at a simple root: f(0,0) = 0 and
    d f/d y (0,0) a unit.  Newton iteration with precision doubling; the
    quadratic convergence certifies each doubled validity order.  Returns
    the terms and the validity order (None when the solution is exact)."""
    w = budget + 1
    fy = f.derivative_y()
    d0 = fy.terms.get((0, 0), Fraction(0))
    kind, _ = classify_value(d0)
    if kind != "unit":
        raise AssertionError("regular solve called at a non-simple root")
    xs = TruncatedSeries.monomial(1)
    y = TruncatedSeries.zero(1)
    prec = 1
    while prec < w:
        prec = min(2 * prec, w)
        ycur = y.declare_trunc(prec)
        num = evaluate_bivariate(f, xs, ycur).truncate(prec)
        if num.is_zero_mod_trunc:
            y = ycur
            continue
        den = evaluate_bivariate(fy, xs, ycur).truncate(prec)
        y = (ycur - num * den.inverse(prec)).truncate(prec).declare_trunc(prec)
    exact = evaluate_bivariate(f, xs, y.declare_trunc(None)).is_exact_zero
    return dict(y.terms), None if exact else w


def _post_check(f, branches, budget):
    for b in branches:
        val = evaluate_bivariate(f, b.x_series(), b.y_series())
        if val.is_exact_zero:
            continue
        if val.min_exponent() is not None:
            raise AssertionError(
                f"branch does not annihilate the germ to its truncation: {b!r}"
            )
    # the ramification orders sum to the number of y-roots through the
    # origin: the polygon height plus a stripped y-axis factor
    total = sum(b.n * b.conjugacy for b in branches)
    np_f = newton_polygon(f)
    height = (np_f.vertices[0][1] if np_f.vertices else 0) + np_f.y_mult
    if total != height:
        raise AssertionError(f"ramification sum {total} != y-root count {height}")
