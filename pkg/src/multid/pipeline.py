"""Bernstein-Sato pipeline: I_f, I_{f,1}, J_f(m) and b-function extraction.

Two routes to b_{a,g}(s):

* `bfunction`: form J_f(m) = D_Y[s](I_{f,1} + a^m + <s - sigma>) cap C[x,s],
  then read off the generator of (J_f(m) : g) cap C[s].
* `bfunction_alg2` (m = 1 only): intersect Ann(prod f_i^{s_i}) with D_Y g,
  take the initial ideal under the V-filtration weight, then eliminate.

Both return the monic generator fully factored over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import UnsupportedM, ZeroDivisor
from .groebner import (
    LeftIdeal,
    colon,
    eliminate,
    exact_divide,
    initial_ideal,
    intersect,
)
from .rationals import FactoredBPoly, UPoly, rational_roots
from .weyl import Signature, WeightVector, WeylElement, build_sigma

S_NAME = "s"

# names the pipeline introduces internally; user variables must avoid them
_RESERVED_PREFIXES = ("D",)


def _t_names(r: int) -> tuple[str, ...]:
    return tuple(f"t{i + 1}" for i in range(r))


def polynomial_ring(variables) -> Signature:
    """The commutative ring C[x...] as a purely-central signature."""
    return Signature(central=tuple(variables))


def polynomial_ring_s(variables) -> Signature:
    """C[x, s]."""
    return Signature(central=tuple(variables) + (S_NAME,))


def s_ring() -> Signature:
    """C[s]."""
    return Signature(central=(S_NAME,))


@dataclass(frozen=True)
class IdealInput:
    """An ideal a = <f_1..f_r> in C[x] with a multiplier g and level m."""

    variables: tuple[str, ...]
    f: tuple[WeylElement, ...]
    g: WeylElement = None
    m: int = 1

    def __post_init__(self):
        if not self.variables:
            raise ValueError("at least one variable is required")
        psig = polynomial_ring(self.variables)
        bad = [
            v
            for v in self.variables
            if v == S_NAME
            or v.startswith(_RESERVED_PREFIXES)
            or (v[0] in "tu" and v[1:].isdigit())
        ]
        if bad:
            raise ValueError(f"reserved variable names: {bad}")
        if not self.f:
            raise ValueError("the ideal needs at least one generator")
        for fi in self.f:
            if fi.sig != psig:
                raise ValueError("generators must live in C[variables]")
            if fi.is_zero():
                raise ValueError("ideal generators must be nonzero")
        if self.g is None:
            object.__setattr__(self, "g", WeylElement.one(psig))
        if self.g.sig != psig or self.g.is_zero():
            raise ZeroDivisor("g must be a nonzero polynomial in C[variables]")
        if self.m < 1:
            raise ValueError("m must be a positive integer")

    @property
    def r(self) -> int:
        return len(self.f)

    @property
    def n(self) -> int:
        return len(self.variables)

    def poly_sig(self) -> Signature:
        return polynomial_ring(self.variables)

    def weyl_sig(self) -> Signature:
        return Signature(xvars=self.variables, tvars=_t_names(self.r))

    def with_g(self, g: WeylElement) -> "IdealInput":
        return IdealInput(self.variables, self.f, g, self.m)

    def with_m(self, m: int) -> "IdealInput":
        return IdealInput(self.variables, self.f, self.g, m)

    def cache_key(self) -> tuple:
        return (self.variables, self.f)


def _diff(p: WeylElement, var: str) -> WeylElement:
    """d/d(var) of a polynomial lifted into a Weyl signature."""
    return WeylElement.generator(p.sig, "D" + var).act_on_polynomial(p)


def ann_fs_generators(input: IdealInput) -> list[WeylElement]:
    """The n+r generators of Ann_{D_Y} prod f_i^{s_i}.

    t_i - f_i for each i, and Dx_j + sum_i (df_i/dx_j) Dt_i for each j.
    """
    sig = input.weyl_sig()
    fs = [fi.lift(sig) for fi in input.f]
    gens = []
    for i, fi in enumerate(fs):
        gens.append(WeylElement.generator(sig, _t_names(input.r)[i]) - fi)
    for xj in input.variables:
        g = WeylElement.generator(sig, "D" + xj)
        for i, fi in enumerate(fs):
            g = g + _diff(fi, xj) * WeylElement.generator(
                sig, "D" + _t_names(input.r)[i]
            )
        gens.append(g)
    return gens


def build_If(input: IdealInput) -> LeftIdeal:
    """<t_i u1 - f_i> + <u1 Dx_j + sum (df_i/dx_j) Dt_i> + <u1 u2 - 1>."""
    sig = input.weyl_sig().with_central("u1", "u2")
    fs = [fi.lift(sig) for fi in input.f]
    u1 = WeylElement.generator(sig, "u1")
    u2 = WeylElement.generator(sig, "u2")
    gens = []
    for i, fi in enumerate(fs):
        gens.append(
            WeylElement.generator(sig, _t_names(input.r)[i]) * u1 - fi
        )
    for xj in input.variables:
        g = u1 * WeylElement.generator(sig, "D" + xj)
        for i, fi in enumerate(fs):
            g = g + _diff(fi, xj) * WeylElement.generator(
                sig, "D" + _t_names(input.r)[i]
            )
        gens.append(g)
    gens.append(u1 * u2 - WeylElement.one(sig))
    return LeftIdeal(sig, gens)


_IF1_CACHE: dict = {}


def compute_If1(input: IdealInput) -> LeftIdeal:
    """I_{f,1} = I_f cap D_Y = (Ann prod f_i^{s_i})^*, cached per f."""
    key = input.cache_key()
    got = _IF1_CACHE.get(key)
    if got is not None:
        return got
    If = build_If(input)
    sig = input.weyl_sig()
    K = eliminate(If, set(sig.slot_names))
    out = LeftIdeal(sig, [g.project(sig) for g in K.generators])
    _IF1_CACHE[key] = out
    return out


def ideal_power_products(input: IdealInput, m: int) -> list[WeylElement]:
    """All m-fold products of the f_i: a generating set of a^m."""
    out = []
    for combo in combinations_with_replacement(input.f, m):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        out.append(p)
    return out


_JFM_CACHE: dict = {}


def build_Jf_m(input: IdealInput) -> LeftIdeal:
    """J_f(m) = D_Y[s](I_{f,1} + a^m + <s - sigma>) cap C[x,s]."""
    key = input.cache_key() + (input.m,)
    got = _JFM_CACHE.get(key)
    if got is not None:
        return got
    sig = input.weyl_sig()
    big = sig.with_central(S_NAME)
    gens = [g.lift(big) for g in compute_If1(input).generators]
    gens += [p.lift(big) for p in ideal_power_products(input, input.m)]
    gens.append(WeylElement.generator(big, S_NAME) - build_sigma(big))
    keep = set(input.variables) | {S_NAME}
    K = eliminate(LeftIdeal(big, gens), keep)
    small = polynomial_ring_s(input.variables)
    out = LeftIdeal(small, [g.project(small) for g in K.generators])
    _JFM_CACHE[key] = out
    return out


def _principal_s_generator(I: LeftIdeal, variables) -> UPoly:
    """Monic generator of (I cap C[s]) for an ideal of C[x,s]."""
    K = eliminate(I, {S_NAME})
    basis = K.groebner()
    small = s_ring()
    polys = [g.project(small) for g in basis if not g.is_zero()]
    if not polys:
        return UPoly.zero()
    # reduced GB of a principal ideal in one variable has a single element
    p = min(polys, key=lambda q: q.total_degree())
    deg = p.total_degree()
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        coeffs[e[0]] = c
    return UPoly(tuple(coeffs)).monic()


def _b_from_s_ideal(I: LeftIdeal, input: IdealInput) -> FactoredBPoly:
    p = _principal_s_generator(I, input.variables)
    if p.is_zero():
        raise ZeroDivisor("the b-ideal is zero; input is degenerate")
    if p.degree == 0:
        return FactoredBPoly(())
    return rational_roots(p)


_I2_CACHE: dict = {}


def _build_I2(input: IdealInput) -> LeftIdeal:
    """I_{(f;g),2} = D_Y[s](I_{f,1} + g a + <s - sigma>) cap C[x,s]."""
    key = input.cache_key() + (input.g,)
    got = _I2_CACHE.get(key)
    if got is not None:
        return got
    sig = input.weyl_sig()
    big = sig.with_central(S_NAME)
    g = input.g.lift(big)
    gens = [h.lift(big) for h in compute_If1(input).generators]
    gens += [g * fi.lift(big) for fi in input.f]
    gens.append(WeylElement.generator(big, S_NAME) - build_sigma(big))
    keep = set(input.variables) | {S_NAME}
    K = eliminate(LeftIdeal(big, gens), keep)
    small = polynomial_ring_s(input.variables)
    out = LeftIdeal(small, [h.project(small) for h in K.generators])
    _I2_CACHE[key] = out
    return out


def bfunction(input: IdealInput) -> FactoredBPoly:
    """The generalized Bernstein-Sato polynomial b_{a,g}(s).

    For m = 1 this follows the colon construction on
    D_Y[s](I_{f,1} + g a + <s - sigma>) cap C[x,s], giving the classical
    b_{a,g}; for m > 1 it is b^{(m)}_{a,g}, the generator of
    (J_f(m) : g) cap C[s].  The two notions agree when g = 1.
    """
    if input.m == 1 and not input.g.is_constant():
        I2 = _build_I2(input)
        g = input.g.lift(polynomial_ring_s(input.variables))
        return _b_from_s_ideal(colon(I2, g), input)
    return bfunction_level(input)


def bfunction_level(input: IdealInput) -> FactoredBPoly:
    """b^{(m)}_{a,g}(s): monic generator of (J_f(m) : g) cap C[s].

    Unlike `bfunction` with m = 1, this variant reuses one cached J_f(m)
    for every g, which is what the membership and filtration queries need;
    its root set within [lct, lct + m) carries the multiplier-ideal data.
    """
    J = build_Jf_m(input)
    g = input.g.lift(polynomial_ring_s(input.variables))
    Q = J if g.is_constant() else colon(J, g)
    return _b_from_s_ideal(Q, input)


def bfunction_alg2(input: IdealInput) -> FactoredBPoly:
    """b_{a,g}(s) by the initial-ideal route (m = 1 only).

    Ann cap D_Y g, then its initial ideal under the V-filtration weight,
    then adjoin s - sigma, eliminate to C[x,s], divide out g, and
    eliminate to C[s].
    """
    if input.m != 1:
        raise UnsupportedM("the initial-ideal route is defined for m = 1")
    sig = input.weyl_sig()
    ann = LeftIdeal(sig, ann_fs_generators(input))
    g = input.g.lift(sig)
    if g.is_constant():
        I0 = ann
    else:
        I0 = intersect(ann, LeftIdeal(sig, [g]))
    I1 = initial_ideal(I0, WeightVector.v_filtration(sig))
    big = sig.with_central(S_NAME)
    gens = [h.lift(big) for h in I1.generators]
    gens.append(WeylElement.generator(big, S_NAME) - build_sigma(big))
    keep = set(input.variables) | {S_NAME}
    K = eliminate(LeftIdeal(big, gens), keep)
    small = polynomial_ring_s(input.variables)
    I2 = LeftIdeal(small, [h.project(small) for h in K.generators])
    if g.is_constant():
        I3 = I2
    else:
        gs = input.g.lift(small)
        I3 = LeftIdeal(small, [exact_divide(h, gs) for h in I2.generators])
    return _b_from_s_ideal(I3, input)


def clear_caches():
    _IF1_CACHE.clear()
    _JFM_CACHE.clear()
    _I2_CACHE.clear()
