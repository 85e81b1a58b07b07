from fractions import Fraction

import pytest

from multid.errors import UnsupportedM
from multid.oracles import (
    NewtonPolyhedron,
    cross_check,
    howald_filtration,
    howald_membership,
    verify_minimality,
)
from multid.parsing import parse_polynomial
from multid.pipeline import bfunction
from multid.rationals import FactoredBPoly

from conftest import make_input
from helpers import gens_match


X2Y3 = [(2, 0), (0, 3)]


def test_newton_polyhedron_single_facet():
    np_ = NewtonPolyhedron.of(X2Y3)
    assert np_.facets == (((3, 2), 6),)


def test_newton_polyhedron_validates_all_points():
    np_ = NewtonPolyhedron.of([(2, 0), (1, 1), (0, 4)])
    for normal, rhs in np_.facets:
        assert rhs > 0
        for p in np_.points:
            assert sum(a * b for a, b in zip(normal, p)) >= rhs


def test_howald_membership_examples():
    assert not howald_membership(X2Y3, (0, 0), Fraction(5, 6))
    assert howald_membership(X2Y3, (1, 0), Fraction(5, 6))
    assert howald_membership(X2Y3, (0, 0), Fraction(0))
    assert howald_membership(X2Y3, (5, 5), Fraction(0))


def test_howald_membership_antitone_in_c():
    u = (1, 1)
    values = [
        howald_membership(X2Y3, u, Fraction(k, 12)) for k in range(0, 40)
    ]
    assert values == sorted(values, reverse=True)


def test_howald_filtration_x2y3():
    filt = howald_filtration(X2Y3, Fraction(1), ("x", "y"))
    assert filt.lct == Fraction(5, 6)
    assert filt.jumps[0] == Fraction(5, 6)
    assert gens_match(filt.ideal_at(Fraction(5, 6)), ("x", "y"), "x", "y")


def test_howald_filtration_smooth():
    filt = howald_filtration([(1,)], Fraction(3), ("x",))
    assert filt.jumps == (1, 2, 3)
    assert gens_match(filt.ideal_at(Fraction(2)), ("x",), "x^2")


def test_howald_filtration_maximal_ideal():
    filt = howald_filtration([(1, 0), (0, 1)], Fraction(2), ("x", "y"))
    assert filt.lct == 2
    assert filt.jumps == (2,)
    assert gens_match(filt.ideal_at(Fraction(2)), ("x", "y"), "x", "y")


def test_verify_minimality_smooth():
    inp = make_input(("x",), ("x",))
    assert verify_minimality(bfunction(inp), inp)


def test_verify_minimality_cusp(cusp):
    assert verify_minimality(bfunction(cusp), cusp)


def test_verify_minimality_detects_inflation(cusp):
    b = bfunction(cusp)
    inflated = FactoredBPoly(b.factors + ((Fraction(-2), 1),))
    assert not verify_minimality(inflated, cusp)


def test_cross_check_cusp(cusp):
    assert cross_check(cusp)


def test_cross_check_smooth_with_multiplier():
    inp = make_input(("x",), ("x",), g="x")
    assert cross_check(inp)


def test_cross_check_two_branch_multiplier(two_branch):
    shifted = two_branch.with_g(parse_polynomial("x+y", ("x", "y")))
    assert cross_check(shifted)
    assert str(bfunction(shifted)) == (
        "(s+1)(s+17/10)(s+19/10)(s+21/10)(s+23/10)"
    )


def test_cross_check_rejects_higher_level(cusp):
    with pytest.raises(UnsupportedM):
        cross_check(cusp.with_m(2))
