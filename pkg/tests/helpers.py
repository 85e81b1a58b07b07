"""Small construction/comparison utilities shared by the test modules."""

from multid.groebner import LeftIdeal, ideal_equal
from multid.parsing import parse_polynomial
from multid.pipeline import polynomial_ring


def ideal_of(variables, *polys):
    """A LeftIdeal in C[variables] from polynomial source strings."""
    variables = tuple(variables)
    sig = polynomial_ring(variables)
    return LeftIdeal(sig, [parse_polynomial(p, variables) for p in polys])


def gens_match(gens, variables, *polys):
    """True when <gens> equals the ideal spanned by the given sources."""
    if not gens:
        return not polys
    sig = gens[0].sig
    return ideal_equal(LeftIdeal(sig, list(gens)), ideal_of(variables, *polys))
