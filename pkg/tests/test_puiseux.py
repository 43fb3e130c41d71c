"""Newton-Puiseux expansion: branch recovery, ramification bookkeeping,
conjugacy counting, and agreement with the polygon path."""

from fractions import Fraction as F

import pytest

from branchpolar.branch import PuiseuxBranch, semigroup_of_branch
from branchpolar.equising import equisingularity_type
from branchpolar.errors import NotReducedError
from branchpolar.implicit import implicitize, polar
from branchpolar.newton import newton_polygon, nondegenerate_type
from branchpolar.poly import BivariatePolynomial as BP
from branchpolar.puiseux import puiseux_expand
from branchpolar.series import evaluate_bivariate


def test_cusp_single_branch():
    bs = puiseux_expand(BP({(0, 2): F(1), (3, 0): F(-1)}))
    assert len(bs) == 1
    b = bs[0]
    assert b.n == 2 and b.conjugacy == 1
    assert semigroup_of_branch(b).generators == (2, 3)


def test_smooth_exact_branch():
    bs = puiseux_expand(BP({(0, 1): F(1), (2, 0): F(-1)}))
    assert len(bs) == 1 and bs[0].trunc is None
    assert bs[0].y_terms == ((2, F(1)),)


def test_y_axis_branch_emitted():
    bs = puiseux_expand(BP({(0, 1): F(1)}) * BP({(0, 1): F(1), (3, 0): F(-1)}))
    smooth = [b for b in bs if not b.y_terms]
    assert len(smooth) == 1 and smooth[0].trunc is None


def test_conjugacy_counting_quartic():
    # 5y^4 - 15x^5y^2 + 5x^10: two <2,5> branches kept as one tower family
    bs = puiseux_expand(BP({(0, 4): F(5), (5, 2): F(-15), (10, 0): F(5)}))
    assert sum(b.conjugacy for b in bs) == 2
    for b in bs:
        assert b.n == 2 and semigroup_of_branch(b).generators == (2, 5)


def test_ramification_sum_equals_y_degree():
    for f in (
        BP({(0, 2): F(1), (3, 0): F(-1)}),
        BP({(0, 4): F(5), (5, 2): F(-15), (10, 0): F(5)}),
        BP({(0, 4): F(5), (8, 1): F(-10), (11, 0): F(-12)}),
        BP({(0, 3): F(1), (5, 1): F(-3), (7, 0): F(-1), (8, 0): F(-1)}),
    ):
        bs = puiseux_expand(f)
        assert sum(b.n * b.conjugacy for b in bs) == f.degree_y()


def test_branches_annihilate_the_germ():
    f = implicitize(PuiseuxBranch.from_terms(3, {7: F(1), 8: F(1)}))
    p = polar(f, F(2), F(3))
    for b in puiseux_expand(p):
        val = evaluate_bivariate(p, b.x_series(), b.y_series())
        assert val.is_exact_zero or min(val.terms, default=val.trunc) >= b.trunc - 1


def test_monotone_stability_under_larger_target():
    f = polar(implicitize(PuiseuxBranch.from_terms(5, {12: F(1), 13: F(1), 14: F(-5, 4), 16: F(2)})), F(1), F(2))
    small = puiseux_expand(f, target_order=40)
    large = puiseux_expand(f, target_order=80)
    assert len(small) == len(large)
    for bs, bl in zip(
        sorted(small, key=lambda b: (b.n, b.y_order() or 0)),
        sorted(large, key=lambda b: (b.n, b.y_order() or 0)),
    ):
        # exponent/coefficient prefixes agree
        ts, tl = dict(bs.y_terms), dict(bl.y_terms)
        for e, c in ts.items():
            if bs.trunc is None or e < min(bs.trunc, bl.trunc or bs.trunc):
                assert e in tl


def test_not_reduced_rejected():
    lin = BP({(0, 1): F(1), (1, 0): F(1)})
    with pytest.raises(NotReducedError):
        puiseux_expand(lin * lin)
    with pytest.raises(ValueError):
        puiseux_expand(BP({(1, 1): F(1), (2, 0): F(1)}))  # x divides


def test_oracle_agreement_polygon_vs_expansion():
    # on Newton non-degenerate germs both paths give one canonical type
    fixtures = [
        BP({(0, 4): F(5), (11, 0): F(-12)}),
        BP({(0, 4): F(5), (8, 1): F(-10), (11, 0): F(-12)}),
        BP({(0, 4): F(1), (5, 2): F(-3), (10, 0): F(1)}),
        BP({(0, 2): F(3), (10, 0): F(-11)}),
    ]
    from branchpolar.equising import _assemble_type
    from branchpolar.implicit import milnor_number

    for f in fixtures:
        t_polygon = nondegenerate_type(newton_polygon(f))
        mu = milnor_number(f)
        branches = puiseux_expand(f)
        t_puiseux = _assemble_type(branches, 0, mu + f.degree_y() + 1)
        assert t_polygon == t_puiseux


def test_stratum18_wall_genus2_branch():
    b = PuiseuxBranch.from_terms(5, {12: F(1), 13: F(1), 14: F(-5, 4), 16: F(2), 21: F(7)})
    p = polar(implicitize(b), F(3), F(5))
    bs = puiseux_expand(p)
    assert len(bs) == 1
    assert semigroup_of_branch(bs[0]).generators == (4, 10, 21)
    assert bs[0].conjugacy == 1


def test_stratum18_wall_two_branches_I11():
    b = PuiseuxBranch.from_terms(5, {12: F(1), 13: F(1), 14: F(-5, 4), 16: F(-5, 16), 21: F(7)})
    p = polar(implicitize(b), F(3), F(5))
    t = equisingularity_type(p)
    assert [s.generators for s in t.branches] == [(2, 5), (2, 5)]
    assert t.intersections[0][1] == 11
