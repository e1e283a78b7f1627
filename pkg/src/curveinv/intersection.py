"""Local intersection multiplicity at the origin, by two independent routes.

The algebraic route rests on the classical axioms of the local
intersection number -- symmetry, invariance under local units, additivity
on products, invariance under g -> g + f*h, and invariance under changes of
coordinates.  An exact gcd decides the infinite case (a shared component
through the origin) and divides out common factors that are units at the
origin.  Factors of the coordinate axes are split off by additivity; for
the remaining pair, a shear is chosen (deterministically) so that the
y-leading coefficient of one polynomial is constant and the y-axis meets
both curves only at the origin.  Then

    m(f, g) = ord_x Res_y(f, g),

because with a constant y-leading coefficient the resultant is the product
of g evaluated along all y-roots of f, and the only root branches meeting
x = 0 at a common point of f and g pass through the origin.

Direct reduction loops on f(x,0)/g(x,0) work in principle but behave badly
in practice: cancelling lowest coefficients need not terminate at all (the
pair (y - x - x^2, y - x) cycles forever with orders growing), and the
degree-descending variant escalates x-degrees and coefficient sizes into
the thousands of bits on vertex polynomials.

The parametric route is ord(g o gamma), summed over branches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import NonReducedInput, NotAtOrigin, ZeroPolynomial
from .extnat import INFINITY, ExtendedNat
from .gaussian import GaussianRational
from .poly import (BiPoly, poly_gcd, poly_is_reduced, resultant_y, u_gcd,
                   u_ord, int_primitive)
from .series import ParamCurve, eval_on_curve


def _premod(f: BiPoly, g: BiPoly) -> BiPoly:
    """Reduce g modulo f in the y-direction when f is y-monic up to a constant.

    Each step replaces g by c*g - lead*y^d*f (c the constant y-leading
    coefficient of f), which changes g by a unit factor and an f-multiple;
    both leave the local intersection number and shared components intact.
    """
    dy_f = f.y_degree()
    if dy_f < 1 or g.y_degree() <= dy_f:
        return g
    top = [(i, c) for (i, j), c in f.terms() if j == dy_f]
    if len(top) != 1 or top[0][0] != 0:
        return g
    c0 = top[0][1]
    while not g.is_zero and g.y_degree() > dy_f:
        dy_g = g.y_degree()
        lead = BiPoly({(i, 0): c for (i, j), c in g.terms() if j == dy_g})
        g = g.scale(c0) - lead * BiPoly.monomial(0, dy_g - dy_f) * f
    return g


def _x_divides(p: BiPoly) -> bool:
    return all(i >= 1 for (i, _), _ in p.terms())


def _y_divides(p: BiPoly) -> bool:
    return all(j >= 1 for (_, j), _ in p.terms())


def _shift_x(p: BiPoly) -> BiPoly:
    return BiPoly({(i - 1, j): c for (i, j), c in p.terms()})


def _shift_y(p: BiPoly) -> BiPoly:
    return BiPoly({(i, j - 1): c for (i, j), c in p.terms()})


def _lc_y_constant(p: BiPoly) -> bool:
    dy = p.y_degree()
    top = [(i, c) for (i, j), c in p.terms() if j == dy]
    return len(top) == 1 and top[0][0] == 0


def _is_monomial(p) -> bool:
    return sum(1 for c in p if c) == 1


_SHARED = object()     # axis factor shared through the origin: multiplicity is infinite
_UNDECIDED = object()  # needs the exact gcd to proceed


def _mult_attempt(f: BiPoly, g: BiPoly, max_shears: int):
    """m(f, g) for a pair believed coprime; detects failures of that belief.

    Returns an int, or ``_SHARED`` (an axis factor through the origin is
    common, so the multiplicity is infinite), or ``_UNDECIDED`` (a vanishing
    resultant or exhausted shear budget: only the exact gcd can untangle the
    configuration).
    """
    total = 0
    while True:
        if f.value_at_origin() or g.value_at_origin():
            return total
        # additivity splits off axis factors: m(x, g) = ord g(0, y) etc.
        if _x_divides(f):
            r = g.restrict_x_zero()
            if not r:
                return _SHARED
            total += u_ord(r)
            f = _shift_x(f)
        elif _y_divides(f):
            r = g.restrict_y_zero()
            if not r:
                return _SHARED
            total += u_ord(r)
            f = _shift_y(f)
        elif _x_divides(g):
            r = f.restrict_x_zero()
            if not r:
                return _SHARED
            total += u_ord(r)
            g = _shift_x(g)
        elif _y_divides(g):
            r = f.restrict_y_zero()
            if not r:
                return _SHARED
            total += u_ord(r)
            g = _shift_y(g)
        else:
            break
    rest = _mult_resultant(f, g, max_shears)
    if rest is _UNDECIDED:
        return _UNDECIDED
    return total + rest


def _mult_resultant(f: BiPoly, g: BiPoly, max_shears: int):
    """ord_x Res_y after a shear making the configuration y-generic.

    Candidate shears x -> x + a*y are scanned deterministically; a shear is
    rejected when the y-leading coefficient is non-constant on both sides,
    when a component lands on the y-axis, or when the two restrictions to
    x = 0 share a root besides y = 0.  Only finitely many shears are bad for
    a coprime pair: each rejection corresponds to a root of a top form or to
    a line through one of the finitely many common zeros.  A rejected pure
    x-factor shared away from the origin is harmless (it contributes nothing
    to the order at x = 0); a shared component of positive y-degree makes
    the resultant vanish identically, reported as undecided.
    """
    tried = 0
    for a in _shear_values():
        if tried >= max_shears:
            return _UNDECIDED
        tried += 1
        if a == 0:
            F, G = f, g
        else:
            F = f.compose_linear(1, a, 0, 1)
            G = g.compose_linear(1, a, 0, 1)
        if not _lc_y_constant(F):
            if _lc_y_constant(G):
                F, G = G, F
            else:
                continue
        rf, rg = F.restrict_x_zero(), G.restrict_x_zero()
        if not rf or not rg:
            continue  # a component landed on the y-axis
        if not _is_monomial(u_gcd(rf, rg)):
            continue  # another common zero sits on the y-axis
        G = _premod(F, G)
        if G.is_zero:
            return _UNDECIDED
        F, G = int_primitive(F), int_primitive(G)
        res = resultant_y(F, G)
        if not res:
            return _UNDECIDED
        return u_ord(res)
    return _UNDECIDED


def _shear_values():
    yield 0
    for a in range(1, 200):
        yield a
        yield -a


def _mult_allowing_zero(f: BiPoly, g: BiPoly) -> ExtendedNat:
    """dim of the local quotient ring, tolerating a zero argument."""
    if f.is_zero and g.is_zero:
        return INFINITY
    if f.is_zero:
        return ExtendedNat(0) if g.value_at_origin() else INFINITY
    if g.is_zero:
        return ExtendedNat(0) if f.value_at_origin() else INFINITY
    return intersection_multiplicity(f, g)


def intersection_multiplicity(f: BiPoly, g: BiPoly) -> ExtendedNat:
    """The local intersection number m(f, g) at the origin.

    Zero iff one of the curves misses the origin; INFINITY iff f and g share
    an irreducible component through the origin.  Shared components are
    normally exposed by the fast route itself (a vanishing restriction or
    resultant); the exact gcd runs only on that rare path, dividing out
    common factors that are units at the origin and settling the rest.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("intersection multiplicity needs nonzero polynomials")
    if f.value_at_origin() or g.value_at_origin():
        return ExtendedNat(0)
    if min(f.y_degree(), g.y_degree()) > min(f.x_degree(), g.x_degree()):
        f, g = f.swap_xy(), g.swap_xy()
    g = _premod(f, g)
    f = _premod(g, f) if not g.is_zero else f
    if g.is_zero or f.is_zero:
        # one reduced to an exact multiple of the other: shared component
        return INFINITY
    result = _mult_attempt(f, g, max_shears=25)
    if result is _SHARED:
        return INFINITY
    if result is not _UNDECIDED:
        return ExtendedNat(result)
    c = poly_gcd(f, g)
    if not c.is_constant:
        if not c.value_at_origin():
            return INFINITY
        f = f.div_exact(c)
        g = g.div_exact(c)
        assert f is not None and g is not None
    result = _mult_attempt(f, g, max_shears=400)
    if result is _SHARED or result is _UNDECIDED:
        raise ArithmeticError("no admissible shear found for a coprime pair")
    return ExtendedNat(result)


def intersection_via_param(g: BiPoly, branches: ParamCurve | Sequence[ParamCurve]) -> ExtendedNat:
    """m(f, g) through a parametrization of f: the sum of ord(g o gamma_j).

    INFINITY is returned only on a structural proof: the composite of g with
    an exact polynomial branch is itself an exact polynomial, so "all
    coefficients vanish" is an identity, not a truncation accident.  For
    windowed branches the same situation raises TruncationInsufficient.
    """
    if g.is_zero:
        raise ZeroPolynomial("intersection multiplicity needs a nonzero polynomial")
    if isinstance(branches, ParamCurve):
        branches = [branches]
    total = ExtendedNat(0)
    for gamma in branches:
        comp = eval_on_curve(g, gamma)
        if comp.is_structurally_zero:
            return INFINITY
        total = total + comp.order()
    return total


def milnor_number(f: BiPoly) -> ExtendedNat:
    """mu(f) = m(f_x, f_y); INFINITY iff the germ is not reduced at the origin."""
    if f.is_zero:
        raise ZeroPolynomial("Milnor number of the zero polynomial")
    if f.value_at_origin():
        raise NotAtOrigin("the curve does not pass through the origin")
    return _mult_allowing_zero(f.partial("x"), f.partial("y"))


@dataclass(frozen=True)
class TeissierResult:
    lhs: ExtendedNat      # m(f, f_y)
    rhs: ExtendedNat      # mu(f) + ord f(0, y) - 1
    ok: bool
    transform: tuple[int, int, int, int] | None  # linear change applied, if any

    def to_json(self):
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "ok": self.ok,
            "transform": list(self.transform) if self.transform else None,
        }


def teissier_check(f: BiPoly, seed: int = 0) -> TeissierResult:
    """Verify m(f, f_y) = mu(f) + ord f(0,y) - 1, both sides computed separately.

    If f(0, y) vanishes identically (x divides f) a deterministic
    pseudo-random linear change of coordinates with the given seed is applied
    first and recorded in the result.
    """
    if f.is_zero:
        raise ZeroPolynomial("Teissier check of the zero polynomial")
    if f.value_at_origin():
        raise NotAtOrigin("the curve does not pass through the origin")
    if not poly_is_reduced(f):
        raise NonReducedInput("the defining polynomial has a repeated factor")
    work, transform = f, None
    if not work.restrict_x_zero():
        rng = random.Random(seed)
        while True:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if a * d - b * c == 0:
                continue
            cand = f.compose_linear(a, b, c, d)
            if cand.restrict_x_zero():
                work, transform = cand, (a, b, c, d)
                break
    lhs = intersection_multiplicity(work, work.partial("y"))
    mu = milnor_number(work)
    ord_y = u_ord(work.restrict_x_zero())  # >= 1 since f vanishes at the origin
    rhs = mu + ExtendedNat(ord_y - 1)
    return TeissierResult(lhs=lhs, rhs=rhs, ok=(lhs == rhs), transform=transform)
