"""Shared helpers for the multid test suite.

Everything here is deliberately thin: most tests construct their own inputs
inline so the fixture values stay readable next to the assertions.
"""

from fractions import Fraction

import pytest

from multid.parsing import parse_polynomial
from multid.pipeline import IdealInput


def make_input(variables, polys, g=None, m=1):
    """Build an IdealInput from polynomial source strings."""
    variables = tuple(variables)
    f = tuple(parse_polynomial(p, variables) for p in polys)
    gp = parse_polynomial(g, variables) if g is not None else None
    return IdealInput(variables, f, gp, m)


@pytest.fixture
def mk():
    return make_input


@pytest.fixture(scope="session")
def cusp():
    """f = x^2 + y^3, the running principal example."""
    return make_input(("x", "y"), ("x^2+y^3",))


@pytest.fixture(scope="session")
def x2y3():
    """a = <x^2, y^3>, the running non-principal example."""
    return make_input(("x", "y"), ("x^2", "y^3"))


@pytest.fixture(scope="session")
def four_lines():
    """f = xy(x+y)(x+2y), four lines through the origin."""
    return make_input(("x", "y"), ("x*y*(x+y)*(x+2*y)",))


@pytest.fixture(scope="session")
def two_branch():
    """f = (x+y)^2 - (x-y)^5."""
    return make_input(("x", "y"), ("(x+y)^2-(x-y)^5",))


@pytest.fixture(scope="session")
def t456_curve():
    """Defining ideal of the monomial space curve (T^4, T^5, T^6)."""
    return make_input(
        ("x1", "x2", "x3"), ("x2^2-x1*x3", "x1^3-x3^2")
    )


@pytest.fixture(scope="session")
def sphere_cusp():
    """a = <x^3 - y^2 z, x^2 + y^2 + z^2 - 1>."""
    return make_input(("x", "y", "z"), ("x^3-y^2*z", "x^2+y^2+z^2-1"))


def frac(text):
    return Fraction(text)
