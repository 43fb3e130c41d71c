"""Equisingularity types of reduced germs and of general polar curves.

Pairwise intersection multiplicities are computed by sheet sums on a common
ramification cover:

    I(b1, b2) = (n1 / L) * sum_{j < n2} ord_u( Y1(u^(L/n1)) - Y2(zeta^j u^(L/n2)) ),

with L = lcm(n1, n2) and zeta a primitive n2-th root of unity.  Conjugate
branches share one tower-valued parametrization, so pairing needs a tower
holding two independent tuples of roots: a second copy of the branch's
levels is adjoined, with the level where the tuples first differ replaced by
minpoly/(z - alpha) to carve out distinct pairs.  Because x = t^n is kept
monic, each geometric branch appears once per reparametrization t -> zeta t
(n times); the pair counts divide by n1*n2 accordingly, and components where
some sheet difference vanishes beyond the maximal possible contact are
recognized as the same geometric branch and dropped.

The general-polar pipeline certifies genericity by agreement across sampled
directions, never symbolically: the exceptional direction set is finite, so
rational directions of bounded height collide with it with probability zero,
and any disagreement is reported rather than hidden.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .branch import PuiseuxBranch, semigroup_of_branch
from .eqtype import EquisingularityType
from .errors import (
    AmbiguousPairingError,
    GenericityError,
    NotReducedError,
    PrecisionError,
)
from .implicit import implicitize, milnor_number, polar
from .newton import is_newton_nondegenerate, newton_polygon, nondegenerate_type
from .poly import BivariatePolynomial
from .puiseux import puiseux_expand, _base_tower
from .semigroup import semigroup_from_generators
from .series import TruncatedSeries, evaluate_bivariate
from .tower import (
    Tower,
    TowerElement,
    compose_element,
    over_components,
    project_value,
)
from .unipoly import ucyclotomic

_ctr = itertools.count(1)

_IDENTICAL = object()  # sheet-sum marker: the pair is one geometric branch


def intersection_multiplicity(b: PuiseuxBranch, g: BivariatePolynomial) -> int:
    """ord_t g(x(t), y(t)); PrecisionError when undetermined at the
    branch truncation."""
    s = evaluate_bivariate(g, b.x_series(), b.y_series())
    tower = b.tower() or _base_tower(g)
    if tower is None:
        o = s.order()
        if o is None:
            raise ValueError("the curve vanishes identically on the branch")
        return o
    results = over_components(
        tower, s, lambda tw, ss: ss.project(tw), lambda _tw, ss: ss.order()
    )
    orders = {o for _tw, o in results}
    if None in orders:
        raise ValueError("the curve vanishes identically on the branch")
    if len(orders) > 1:
        raise AmbiguousPairingError(
            f"intersection order differs between conjugates: {sorted(orders)}"
        )
    return orders.pop()


# -- pair towers ---------------------------------------------------------------


def _div_linear(coeffs: list[TowerElement], alpha: TowerElement) -> list[TowerElement]:
    """Synthetic division of a monic polynomial by (z - alpha); the remainder
    must vanish (alpha is a root by construction)."""
    d = len(coeffs) - 1
    q = [None] * d
    q[d - 1] = coeffs[d]
    for i in range(d - 1, 0, -1):
        q[i - 1] = coeffs[i] + alpha * q[i]
    rem = coeffs[0] + alpha * q[0]
    if rem:
        raise AssertionError("linear division by a non-root")
    return q


def _self_pair_setup(tower: Tower, base_height: int, j: int):
    """Pair tower for two conjugate tuples agreeing below level j and
    differing there; returns (pair_tower, images of tower's generators for
    the second tuple)."""
    gens = [tower.generator(s) for s in range(1, tower.height + 1)]
    cur = tower
    mp = tower.levels[j - 1].minpoly
    alpha = cur.generator(j)
    coeffs = [TowerElement(cur, cur.lift_rep(c, j - 1)) for c in mp]
    q = _div_linear(coeffs, alpha)
    if len(q) == 2:  # linear quotient: the second root is explicit
        beta = -q[0]
    else:
        cur = cur.adjoin(f"p{next(_ctr)}", [c.rep for c in q])
        beta = cur.generator(cur.height)
        gens = [cur.lift(g) for g in gens]
    gens[j - 1] = cur.lift(beta)
    for s in range(j + 1, tower.height + 1):
        mp_s = tower.levels[s - 1].minpoly
        imgs = [cur.lift(g) for g in gens[: s - 1]]
        new_coeffs = [compose_element(cur, imgs, c, s - 1) for c in mp_s]
        cur = cur.adjoin(f"q{next(_ctr)}", [cur.lift(c).rep for c in new_coeffs])
        gens = [cur.lift(g) for g in gens]
        gens[s - 1] = cur.generator(cur.height)
    return cur, gens


def _cross_pair_setup(t1: Tower | None, t2: Tower | None, base_height: int):
    """Combined tower holding b1's tuple and an independent copy of b2's;
    returns (pair_tower, images of t2's generators)."""
    if t1 is not None and t2 is not None:
        if t1.levels[:base_height] != t2.levels[:base_height]:
            raise ValueError("branches do not share the base tower")
    if t1 is None and base_height > 0:
        host = Tower((t2.levels[:base_height]) if t2 is not None else ())
    else:
        host = t1 if t1 is not None else Tower()
    if t2 is None or t2.height <= base_height:
        gens = [host.generator(s) for s in range(1, (t2.height if t2 else 0) + 1)]
        return host, gens
    cur = host
    gens = [cur.generator(s) for s in range(1, base_height + 1)]
    gens += [None] * (t2.height - base_height)
    for s in range(base_height + 1, t2.height + 1):
        mp_s = t2.levels[s - 1].minpoly
        imgs = [cur.lift(g) for g in gens[: s - 1]]
        new_coeffs = [compose_element(cur, imgs, c, s - 1) for c in mp_s]
        cur = cur.adjoin(f"c{next(_ctr)}", [cur.lift(c).rep for c in new_coeffs])
        gens = [cur.lift(g) if g is not None else None for g in gens]
        gens[s - 1] = cur.generator(cur.height)
    return cur, gens


def _adjoin_zeta(tower: Tower, n: int):
    """A primitive n-th root of unity over the tower (rational for n <= 2)."""
    if n == 1:
        return tower, Fraction(1)
    if n == 2:
        return tower, Fraction(-1)
    phi = ucyclotomic(n)
    cur = tower.adjoin(f"zeta{next(_ctr)}", [tower.from_rational(c).rep for c in phi])
    return cur, cur.generator(cur.height)


def _redundancy(b: PuiseuxBranch, base_height: int) -> int:
    """Tuples per geometric branch in b's representation: the tower of an
    expansion-produced branch holds all n reparametrizations t -> zeta t,
    while a directly constructed branch holds one tuple."""
    t = b.tower()
    d = t.degree_above(base_height) if t is not None else 1
    if d % b.conjugacy:
        raise AssertionError("tower degree not divisible by conjugacy")
    return d // b.conjugacy


def _pair_geometric_count(tower: Tower, base_height: int, red: int) -> int:
    d = 1
    for lv in tower.levels[base_height:]:
        if not lv.name.startswith("zeta"):
            d *= lv.degree
    if d % red:
        raise AssertionError("pair degree not divisible by representation redundancy")
    return d // red


def pair_intersection_values(
    b1: PuiseuxBranch,
    b2: PuiseuxBranch | None = None,
    base_height: int = 0,
    max_contact: int | None = None,
) -> dict[int, int]:
    """Multiset {intersection value: number of ordered geometric pairs} over
    all pairs (conjugate of b1, conjugate of b2), or over distinct conjugate
    pairs of b1 when ``b2`` is None."""
    self_pair = b2 is None
    n1 = b1.n
    n2 = b1.n if self_pair else b2.n
    big_l = lcm(n1, n2)
    s1, s2 = big_l // n1, big_l // n2

    setups = []
    if self_pair:
        t = b1.tower()
        if t is None or t.height <= base_height:
            raise ValueError("self-pairing needs conjugates (nontrivial tower)")
        red = _redundancy(b1, base_height) ** 2
        for j in range(base_height + 1, t.height + 1):
            setups.append(_self_pair_setup(t, base_height, j) + (b1,))
    else:
        red = _redundancy(b1, base_height) * _redundancy(b2, base_height)
        setups.append(_cross_pair_setup(b1.tower(), b2.tower(), base_height) + (b2,))

    out: dict[int, int] = {}
    for cur, gens2, bb2 in setups:
        cur2, zeta = _adjoin_zeta(cur, n2)
        if not isinstance(zeta, Fraction):
            gens2 = [cur2.lift(g) for g in gens2]
        y1u = b1.y_series().stretch(s1)
        if cur2.height:
            y1u = y1u.map_values(cur2.lift)
        # second tuple: remap coefficients through the generator images
        y2_terms = []
        for e, c in bb2.y_terms:
            if isinstance(c, TowerElement):
                imgs = [cur2.lift(g) for g in gens2[: c.tower.height]]
                c2 = compose_element(cur2, imgs, c.rep, c.tower.height)
            else:
                c2 = cur2.from_rational(c) if cur2.height else c
            y2_terms.append((e, c2))
        payload = (y1u, tuple(y2_terms), bb2.trunc, zeta)

        def proj(tw, data):
            yy1, yy2, tr, zz = data
            return (
                yy1.project(tw),
                tuple((e, project_value(c, tw)) for e, c in yy2),
                tr,
                project_value(zz, tw),
            )

        def compute(tw, data):
            yy1, yy2, tr, zz = data
            total = 0
            for j in range(n2):
                terms = {}
                zpow: dict[int, object] = {}
                for e, c in yy2:
                    ze = (j * e) % n2
                    if ze not in zpow:
                        zpow[ze] = zz ** ze
                    terms[e * s2] = c * zpow[ze]
                tr_u = None if tr is None else (tr - 1) * s2 + 1
                diff = yy1 - TruncatedSeries(terms, tr_u)
                try:
                    o = diff.order()
                except PrecisionError:
                    if (
                        max_contact is not None
                        and diff.trunc is not None
                        and diff.trunc > s1 * max_contact
                    ):
                        return _IDENTICAL
                    raise
                if o is None:
                    return _IDENTICAL
                total += o
            if total % s1:
                raise AssertionError("sheet sum not divisible by the cover degree")
            return total // s1

        results = over_components(cur2, payload, proj, compute, min_stage=base_height)
        for tw, value in results:
            if value is _IDENTICAL:
                if not self_pair:
                    raise AssertionError("distinct branches produced an identical pair")
                continue
            cnt = _pair_geometric_count(tw, base_height, red)
            if cnt:
                out[value] = out.get(value, 0) + cnt
    return out


def branch_intersection(
    b1: PuiseuxBranch,
    b2: PuiseuxBranch,
    base_height: int = 0,
    max_contact: int | None = None,
) -> int:
    """Intersection multiplicity of two distinct branches (a single number;
    conjugate families whose pairs differ raise AmbiguousPairingError)."""
    values = pair_intersection_values(b1, b2, base_height, max_contact)
    if not values:
        raise ValueError("branches coincide (no distinct pairs)")
    if len(values) > 1:
        raise AmbiguousPairingError(f"pairwise values differ: {sorted(values)}")
    return next(iter(values))


# -- type assembly from an expansion ----------------------------------------------


def _assemble_type(
    branches: list[PuiseuxBranch],
    base_height: int,
    max_contact: int | None,
) -> EquisingularityType:
    """Build the canonical type of a germ from its tower-valued branches."""
    groups = branches
    sgs = [semigroup_of_branch(b) for b in groups]
    sizes = [b.conjugacy for b in groups]
    offs = []
    pos = 0
    for c in sizes:
        offs.append(pos)
        pos += c
    n_geo = pos
    semis = []
    for sg, c in zip(sgs, sizes):
        semis.extend([sg] * c)
    mat = [[0] * n_geo for _ in range(n_geo)]

    nonuniform_hits: dict[int, int] = {}
    for i, bi in enumerate(groups):
        ci = sizes[i]
        if ci >= 2:
            vals = pair_intersection_values(bi, None, base_height, max_contact)
            total = sum(vals.values())
            if total != ci * (ci - 1):
                raise AssertionError(
                    f"self-pair count {total} != {ci * (ci - 1)} for {bi!r}"
                )
            if len(vals) != 1:
                raise AmbiguousPairingError(
                    f"conjugates of one branch family meet at different orders: {vals}"
                )
            v = next(iter(vals))
            for a in range(ci):
                for bq in range(a + 1, ci):
                    mat[offs[i] + a][offs[i] + bq] = v
                    mat[offs[i] + bq][offs[i] + a] = v
        for j in range(i + 1, len(groups)):
            bj = groups[j]
            cj = sizes[j]
            vals = pair_intersection_values(bi, bj, base_height, max_contact)
            total = sum(vals.values())
            if total != ci * cj:
                raise AssertionError(f"cross-pair count {total} != {ci * cj}")
            if len(vals) == 1:
                v = next(iter(vals))
                for a in range(ci):
                    for bq in range(cj):
                        mat[offs[i] + a][offs[j] + bq] = v
                        mat[offs[j] + bq][offs[i] + a] = v
            elif ci == 1 or cj == 1:
                single, multi = (i, j) if ci == 1 else (j, i)
                nonuniform_hits[multi] = nonuniform_hits.get(multi, 0) + 1
                if nonuniform_hits[multi] > 1:
                    raise AmbiguousPairingError(
                        "multiple non-uniform pairings touch one conjugate family; "
                        "assignment is undetermined from component data"
                    )
                expanded = []
                for v, cnt in sorted(vals.items()):
                    expanded.extend([v] * cnt)
                for k, v in enumerate(expanded):
                    mat[offs[single]][offs[multi] + k] = v
                    mat[offs[multi] + k][offs[single]] = v
            else:
                raise AmbiguousPairingError(
                    f"non-uniform pairing between conjugate families: {vals}"
                )
    return EquisingularityType.of(semis, mat)


# -- the type of a reduced germ -------------------------------------------------------


def equisingularity_type(
    f: BivariatePolynomial,
    rng: random.Random | None = None,
    check_milnor: bool = True,
) -> EquisingularityType:
    """Canonical equisingularity type of a reduced germ.

    Fast path: Newton non-degenerate germs are read off the polygon by the
    decomposition theorem.  Otherwise the germ is expanded into branches and
    assembled with pairwise intersections; precision shortfalls double the
    expansion target (three retries).  Germs with a branch tangent to x = 0
    (a side of inclination < 1, or an x-factor) are sheared x -> x + sigma*y
    first, which changes nothing topologically.  The result is cross-checked
    against the Milnor number of the (sheared) germ.
    """
    if rng is None:
        rng = random.Random(97)
    work = f
    for attempt in range(8):
        xp, g = work.strip_x_power()
        if xp >= 2:
            raise NotReducedError("x^2 divides the germ")
        yq, core = g.strip_y_power()
        if yq >= 2:
            raise NotReducedError("y^2 divides the germ")
        if core.support() == [(0, 0)]:
            np_core = None
        else:
            np_core = newton_polygon(core)
        needs_shear = xp == 1 or (
            np_core is not None
            and np_core.sides
            and np_core.sides[0].inclination < 1
        )
        if not needs_shear:
            break
        sigma = Fraction(rng.randint(1, 100), rng.randint(1, 100))
        if rng.randint(0, 1):
            sigma = -sigma
        work = f.shift_x(sigma)
    else:
        raise GenericityError("could not shear away branches tangent to x = 0")

    if core.support() == [(0, 0)]:
        # the germ was the y-axis alone
        if yq == 1:
            return EquisingularityType.single(semigroup_from_generators([1]))
        raise ValueError("unit germ: no curve at the origin")

    mu = milnor_number(work) if check_milnor else None

    if is_newton_nondegenerate(core):
        t = nondegenerate_type(newton_polygon(g))
    else:
        base = _base_tower(g)
        base_height = base.height if base is not None else 0
        mu_g = mu if mu is not None else milnor_number(work)
        deg = g.degree_y()
        target = mu_g + deg + 4
        max_contact = mu_g + deg + 1
        last: Exception | None = None
        t = None
        for _retry in range(4):
            try:
                branches = puiseux_expand(g, target_order=target)
                t = _assemble_type(branches, base_height, max_contact)
                break
            except PrecisionError as exc:
                last = exc
                target *= 2
        if t is None:
            raise PrecisionError(f"truncation exhausted assembling the type: {last}")
    if check_milnor and t.milnor_number() != mu:
        raise AssertionError(
            f"assembled type has mu = {t.milnor_number()}, resultant gives {mu}"
        )
    return t


# -- general polar orchestration -----------------------------------------------------


@dataclass(frozen=True)
class PolarReport:
    """Outcome of sampling polar directions for one branch."""

    polar_type: EquisingularityType
    directions: tuple[tuple[Fraction, Fraction], ...]
    milnor: int
    teissier_ok: bool
    certified: bool
    dissent: tuple[tuple[tuple[Fraction, Fraction], EquisingularityType], ...] = ()


def random_direction(rng: random.Random) -> tuple[Fraction, Fraction]:
    """A random direction (a : b) with both entries nonzero of height <= 100
    (b != 0 keeps the polar y-general for Weierstrass forms)."""
    def pick():
        v = Fraction(rng.randint(1, 100), rng.randint(1, 100))
        return -v if rng.randint(0, 1) else v

    return pick(), pick()


def generic_polar_type(
    b: PuiseuxBranch,
    samples: int = 3,
    rng: random.Random | None = None,
    directions: list[tuple[Fraction, Fraction]] | None = None,
) -> PolarReport:
    """Equisingularity type of the general polar, certified by agreement over
    sampled directions; disagreement returns the majority type flagged
    uncertified with the dissenting directions listed."""
    if samples < 2:
        raise ValueError("genericity certification needs samples >= 2")
    if rng is None:
        rng = random.Random(1729)
    f = implicitize(b)
    mu = milnor_number(f)
    picked: list[tuple[Fraction, Fraction]] = []
    types: list[EquisingularityType] = []
    teissier = True
    want = samples if directions is None else len(directions)
    attempts = 0
    while len(types) < want:
        attempts += 1
        if attempts > want + 12:
            raise GenericityError("too many degenerate polar directions sampled")
        if directions is not None:
            if attempts > len(directions):
                raise GenericityError("supplied directions were degenerate")
            a, bb = directions[len(types)]
        else:
            a, bb = random_direction(rng)
            if (a, bb) in picked:
                continue
        pf = polar(f, a, bb)
        try:
            t = equisingularity_type(pf)
        except NotReducedError:
            continue  # direction in the finite bad set; resample
        ram = intersection_multiplicity(b, pf)
        if ram != mu + b.n - 1:
            teissier = False
        picked.append((a, bb))
        types.append(t)
    counts: list[tuple[EquisingularityType, int]] = []
    for t in types:
        for i, (u, c) in enumerate(counts):
            if u == t:
                counts[i] = (u, c + 1)
                break
        else:
            counts.append((t, 1))
    counts.sort(key=lambda uc: -uc[1])
    majority = counts[0][0]
    certified = len(counts) == 1
    dissent = tuple(
        (picked[i], types[i]) for i in range(len(types)) if types[i] != majority
    )
    return PolarReport(
        polar_type=majority,
        directions=tuple(picked),
        milnor=mu,
        teissier_ok=teissier,
        certified=certified,
        dissent=dissent,
    )


@dataclass(frozen=True)
class SweepGroup:
    polar_type: EquisingularityType
    count: int
    polar_milnor: tuple[int, ...]
    examples: tuple[dict, ...]


@dataclass(frozen=True)
class SweepReport:
    groups: tuple[SweepGroup, ...]
    trials: int
    errors: tuple[str, ...]
    uncertified: int


def _sweep_trial(job) -> tuple[dict, object]:
    """One sweep trial; module-level so process pools can pickle it.  The
    per-trial seed is derived from (sweep seed, index), which makes the
    sweep's result independent of the worker count."""
    family, params, samples, trial_seed = job
    try:
        b = family.branch(params)
        rep = generic_polar_type(b, samples=samples, rng=random.Random(trial_seed))
        return params, rep
    except Exception as exc:  # per-sample failures are data, not fatal
        return params, f"{type(exc).__name__}: {exc}"


def stratum_sweep(
    family,
    trials: int,
    seed: int = 2029,
    samples: int = 2,
    include_walls: bool = True,
    mapper=map,
) -> SweepReport:
    """Sample parameter tuples from a branch family, compute the generic
    polar type of each, and group the tuples by resulting type with the
    polar Milnor number per group.

    ``mapper`` may be a parallel map (trials are independent); results are
    deterministic for a fixed seed regardless of the mapper.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    jobs = []
    walls = list(getattr(family, "walls", ())) if include_walls else []
    for params in walls[:trials]:
        jobs.append(dict(params))
    while len(jobs) < trials:
        jobs.append(family.sample_params(rng))
    work = [
        (family, params, samples, seed * 1_000_003 + i)
        for i, params in enumerate(jobs)
    ]
    groups: list[dict] = []
    errors: list[str] = []
    uncertified = 0
    for params, rep in mapper(_sweep_trial, work):
        if isinstance(rep, str):
            errors.append(f"{params}: {rep}")
            continue
        pm = rep.polar_type.milnor_number()
        if not rep.certified:
            uncertified += 1
        for grec in groups:
            if grec["type"] == rep.polar_type:
                grec["count"] += 1
                grec["milnor"].add(pm)
                if len(grec["examples"]) < 3:
                    grec["examples"].append(params)
                break
        else:
            groups.append(
                {"type": rep.polar_type, "count": 1, "milnor": {pm}, "examples": [params]}
            )
    groups.sort(key=lambda gr: -gr["count"])
    return SweepReport(
        groups=tuple(
            SweepGroup(
                polar_type=gr["type"],
                count=gr["count"],
                polar_milnor=tuple(sorted(gr["milnor"])),
                examples=tuple(gr["examples"]),
            )
            for gr in groups
        ),
        trials=trials,
        errors=tuple(errors),
        uncertified=uncertified,
    )
