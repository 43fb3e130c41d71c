"""Tower arithmetic, D5 splitting, and the squarefree/adjoin operations."""

from fractions import Fraction as F

import pytest

from branchpolar.tower import Tower, TowerSplit, over_components
from branchpolar.unipoly import (
    is_squarefree,
    ucyclotomic,
    udeg,
    uexact_div,
    ugcd,
    umul,
    uyun,
)

SQRT2 = Tower().adjoin("a", (F(-2), F(0), F(1)))


def test_basic_arithmetic_sqrt2():
    a = SQRT2.generator(1)
    assert (a * a) == 2
    assert (1 + a) * (1 - a) == -1
    inv = (1 + a).inverse()
    assert (1 + a) * inv == 1


def test_associativity_and_inverse_random(rng):
    a = SQRT2.generator(1)
    vals = [SQRT2.from_rational(F(rng.randint(-5, 5), rng.randint(1, 4))) + a * rng.randint(-3, 3)
            for _ in range(6)]
    for x in vals:
        for y in vals:
            for z in vals:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
    for x in vals:
        if x.is_zero:
            continue
        kind, inv = x.classify()
        assert kind == "unit"
        assert x * inv == 1


def test_two_level_tower():
    t2 = SQRT2.adjoin("b", ((-SQRT2.generator(1)).rep, SQRT2.zero().rep, SQRT2.one().rep))
    b = t2.generator(2)
    assert b ** 4 == 2
    assert b * b == t2.lift(SQRT2.generator(1))
    assert b * b.inverse() == 1


def test_split_components_multiply_to_original():
    t = Tower().adjoin("e", (F(0), F(-1), F(1)))  # z^2 - z = z(z-1)
    e = t.generator(1)
    with pytest.raises(TowerSplit) as exc:
        e.inverse()
    comps = exc.value.components
    g = list(comps[0].levels[0].minpoly)
    h = list(comps[1].levels[0].minpoly)
    assert umul(g, h) == [F(0), F(-1), F(1)]
    projections = sorted(str(c.project_value(e).rep) for c in comps)
    assert projections == ["()", "(Fraction(1, 1),)"]


def test_split_at_lower_level_projects_upper():
    te = Tower().adjoin("e", (F(0), F(-1), F(1)))
    tec = te.adjoin("c", (te.from_rational(-2).rep, te.zero().rep, te.one().rep))
    x = tec.lift(te.generator(1)) * tec.generator(2)
    with pytest.raises(TowerSplit) as exc:
        x.inverse()
    for comp in exc.value.components:
        assert comp.height == 2
        assert comp.project_value(tec.generator(2)) ** 2 == 2


def test_over_components_covers_tree():
    t = Tower().adjoin("e", (F(0), F(0), F(-1), F(1)))  # z^3 - z^2 = z^2(z-1): not squarefree!
    # use a squarefree split-rich polynomial instead: z(z-1)(z+1) = z^3 - z
    t = Tower().adjoin("e", (F(0), F(-1), F(0), F(1)))
    e = t.generator(1)

    def compute(tw, elem):
        val = tw.project_value(elem)
        kind, _ = val.classify()
        return kind

    results = over_components(t, e, lambda tw, v: v, compute)
    kinds = sorted(k for _tw, k in results)
    assert kinds == ["unit", "zero"] or kinds == ["unit", "unit", "zero"]
    total = sum(tw.degree() for tw, _ in results)
    assert total == 3


def test_is_squarefree_examples():
    # z^4 - 3 z^2 + 1 (stratum-18 side polynomial at c = 0)
    assert is_squarefree([F(1), F(0), F(-3), F(0), F(1)])
    # c = -5/4: z^4 - 3 z^2 + 9/4 = (z^2 - 3/2)^2
    assert not is_squarefree([F(9, 4), F(0), F(-3), F(0), F(1)])
    assert not is_squarefree([F(0), F(0), F(1)])  # z^2
    with pytest.raises(ValueError):
        is_squarefree([])


def test_is_squarefree_over_split_tower():
    # over Q[e]/(e^2-e), the polynomial z^2 - e has a multiple root in the
    # e = 0 component; the aggregated answer is False
    t = Tower().adjoin("e", (F(0), F(-1), F(1)))
    e = t.generator(1)
    assert not is_squarefree([-e, t.zero(), t.one()])
    # z^2 - (e + 1) is squarefree in both components
    assert is_squarefree([-(e + 1), t.zero(), t.one()])


def test_adjoin_root_behaviour():
    from branchpolar.unipoly import adjoin_root

    # linear case: tower unchanged, rational root returned
    tw, root = adjoin_root(None, [F(-3), F(1)])
    assert tw is None and root == 3
    # quadratic: one new level whose generator squares to 2
    tw2, alpha = adjoin_root(None, [F(-2), F(0), F(1)])
    assert tw2.degree() == 2 and alpha ** 2 == 2
    # z^3 - 3 (the 4bz^3 - 12a side shape at a = b = 1): degree-3 tower
    tw3, beta = adjoin_root(None, [F(-3), F(0), F(0), F(1)])
    assert tw3.degree() == 3 and beta ** 3 == 3
    # non-squarefree input is the caller's bug
    with pytest.raises(ValueError):
        adjoin_root(None, [F(0), F(0), F(1)])


def test_yun_squarefree_factorization(rng):
    # (z-1)^2 (z+2) over Q
    p = umul(umul([F(-1), F(1)], [F(-1), F(1)]), [F(2), F(1)])
    fac = uyun(p)
    assert sorted((udeg(g), m) for g, m in fac) == [(1, 1), (1, 2)]
    rebuilt = [F(1)]
    for g, m in fac:
        for _ in range(m):
            rebuilt = umul(rebuilt, g)
    assert rebuilt == p


def test_cyclotomic():
    assert ucyclotomic(1) == [F(-1), F(1)]
    assert ucyclotomic(2) == [F(1), F(1)]
    assert ucyclotomic(4) == [F(1), F(0), F(1)]
    # product of cyclotomics over divisors of 6 gives z^6 - 1
    prod = [F(1)]
    for d in (1, 2, 3, 6):
        prod = umul(prod, ucyclotomic(d))
    assert prod == [F(-1)] + [F(0)] * 5 + [F(1)]


def test_gcd_and_exact_div():
    a = umul([F(1), F(1)], [F(-2), F(1)])
    b = umul([F(1), F(1)], [F(5), F(1)])
    g = ugcd(a, b)
    assert g == [F(1), F(1)]
    assert uexact_div(a, g) == [F(-2), F(1)]
