"""Bivariate polynomials: resultants by subresultant PRS against the
Sylvester-determinant oracle, multiplicativity, and ring operations."""

from fractions import Fraction as F

import pytest

from branchpolar.poly import (
    BivariatePolynomial as BP,
    resultant_y,
    sylvester_resultant_y,
    y_gcd_degree,
)


def rand_poly(rng, terms=6, deg=4, height=10):
    t = {}
    for _ in range(rng.randint(2, terms)):
        t[(rng.randint(0, deg), rng.randint(0, deg))] = F(rng.randint(-height, height))
    return BP(t)


def test_resultant_trivial_examples():
    f = BP({(0, 2): F(1), (3, 0): F(-1)})  # y^2 - x^3
    r = resultant_y(f, BP({(0, 1): F(1)}))
    assert r.support() == [(3, 0)] and r.x_order() == 3
    r2 = resultant_y(BP({(0, 1): F(1), (1, 0): F(-1)}), BP({(0, 1): F(1), (1, 0): F(1)}))
    assert r2.x_order() == 1


def test_resultant_for_cusp_milnor():
    f = BP({(0, 3): F(1), (11, 0): F(-1)})  # y^3 - x^11
    r = resultant_y(f.derivative_x(), f.derivative_y())
    assert r.x_order() == 20  # conductor of <3,11> = (3-1)(11-1)


def test_prs_equals_sylvester_on_randoms(rng):
    checked = 0
    for _ in range(200):
        a, b = rand_poly(rng), rand_poly(rng)
        if a.is_zero or b.is_zero:
            continue
        if a.degree_y() <= 0 and b.degree_y() <= 0:
            continue
        assert resultant_y(a, b) == sylvester_resultant_y(a, b)
        checked += 1
    assert checked > 150


def test_resultant_multiplicative(rng):
    done = 0
    while done < 25:
        a, b, c = (rand_poly(rng, terms=5, deg=3, height=8) for _ in range(3))
        if min(a.degree_y(), b.degree_y(), c.degree_y()) <= 0:
            continue
        assert resultant_y(a, b * c) == resultant_y(a, b) * resultant_y(a, c)
        done += 1


def test_rejects_y_degree_zero_in_both():
    with pytest.raises(ValueError):
        resultant_y(BP({(2, 0): F(1)}), BP({(5, 0): F(3)}))


def test_gcd_degree_detects_common_factor():
    p = BP({(0, 1): F(1), (1, 0): F(-1)})  # y - x
    f = p * BP({(0, 1): F(1), (2, 0): F(1)})
    g = p * BP({(0, 1): F(1), (3, 0): F(-2)})
    assert y_gcd_degree(f, g) == 1
    assert y_gcd_degree(f, BP({(0, 1): F(1), (5, 0): F(1)})) == 0


def test_exact_div_and_shift():
    a = BP({(0, 1): F(2), (1, 0): F(3)})
    b = BP({(2, 2): F(1), (0, 1): F(-5)})
    prod = a * b
    assert prod.exact_div(a) == b and prod.exact_div(b) == a
    with pytest.raises(ArithmeticError):
        (prod + BP({(0, 0): F(1)})).exact_div(a)
    f = BP({(0, 2): F(1), (3, 0): F(-1)})
    g = f.shift_y(F(1, 2))  # y -> y + x/2
    assert g.terms[(2, 0)] == F(1, 4)
    h = f.shift_x(F(2))  # x -> x + 2y
    assert h.terms[(0, 3)] == F(-8)


def test_strip_axis_powers():
    f = BP({(2, 1): F(1), (3, 2): F(4)})
    p, g = f.strip_x_power()
    assert p == 2
    q, h = g.strip_y_power()
    assert q == 1
    assert h.support() == [(0, 0), (1, 1)]
