"""Intersection numbers at the origin: along branches, by resultants, and between branches."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    INFINITE,
    QQ,
    BivariatePolynomial,
    Split,
    coprime_basis,
    exact_quotient,
    gcd,
    multiplicity,
    resultant_y,
    substitute,
)
from .algebra import upoly
from .puiseux import BranchClass, Expansion, normalized_parametrization


class IntersectError(ValueError):
    pass


class NotCoprimeError(IntersectError):
    pass


class RegularityError(IntersectError):
    pass


class AxisConditionError(IntersectError):
    """The curves meet on the line ``x = 0`` away from the origin."""


class InsufficientPrecisionError(IntersectError):
    pass


@dataclass(frozen=True)
class PrecisionBound:
    bound: int
    provenance: str


def _axis_condition(f: BivariatePolynomial, g: BivariatePolynomial) -> bool:
    h = upoly.gcd(QQ, upoly.strip(QQ, f.restrict_y_axis()), upoly.strip(QQ, g.restrict_y_axis()))
    if not h or any(h[:-1]):
        return False
    # both leading coefficients vanishing at x = 0 means a common point at infinity
    return not (_lc_vanishes_on_axis(f) and _lc_vanishes_on_axis(g))


def _lc_vanishes_on_axis(h: BivariatePolynomial) -> bool:
    return h.as_y_poly()[-1][0] == 0


def _check_pair(f, g, axis: bool):
    for h in (f, g):
        if h.is_zero() or not h.is_y_regular():
            raise RegularityError(f"{h} is not y-regular")
    if axis and not _axis_condition(f, g):
        raise AxisConditionError(f"{f} and {g} meet on x = 0 away from the origin")


def precision_bound(f: BivariatePolynomial, W: BivariatePolynomial, strict: bool = True) -> PrecisionBound:
    """Bound every finite ``i0(f, h)`` over branches ``h`` of ``W`` at the origin.

    The bound is the ``x``-order of ``Res_y(f, W)``.  With ``strict`` the axis
    condition is enforced, in which case the bound is the sum of the
    intersection numbers over all branches of ``W``.  Without it the order,
    scaled by the Weierstrass degree of ``W`` (which bounds every ramification
    index), still bounds each of them.
    """
    _check_pair(f, W, strict)
    if gcd(f, W).total_degree() > 0:
        raise NotCoprimeError(f"{f} and {W} have a common factor")
    k = resultant_y(f, W).order()
    if strict:
        return PrecisionBound(max(k, 1), f"ord_x Res_y({f}, {W})")
    w = W.y_axis_order()
    return PrecisionBound(max(k * w, 1), f"{w} * ord_x Res_y({f}, {W})")


def i0_branch(f: BivariatePolynomial, c: BranchClass, bound: PrecisionBound):
    """Intersection number of ``f`` with a branch of class ``c``.

    Returns INFINITE when ``f`` vanishes along the branch beyond ``bound``,
    which certifies that the branch divides ``f``.
    """
    if c.precision <= bound.bound:
        raise InsufficientPrecisionError(
            f"class precision {c.precision} does not exceed the bound {bound.bound}")
    k = substitute(f, normalized_parametrization(c, c.precision)).order()
    return k if isinstance(k, int) else INFINITE


def branch_order(f: BivariatePolynomial, c: BranchClass, cap: int, start: int = 8):
    """Order of ``f`` along ``c``, doubling precision up to ``cap``; INFINITE beyond it."""
    p = max(start, 2)
    while True:
        k = substitute(f, normalized_parametrization(c, p)).order()
        if isinstance(k, int):
            return k
        if p > cap:
            return INFINITE
        p = min(2 * p, cap + 1)


def i0_resultant(f: BivariatePolynomial, g: BivariatePolynomial):
    """Intersection number at the origin as the ``x``-order of the ``y``-resultant.

    A common factor through the origin gives INFINITE; one that is a unit at
    the origin is divided out.  The curves must not meet elsewhere on
    ``x = 0`` (:class:`AxisConditionError`).
    """
    if f.is_zero() or g.is_zero():
        return INFINITE
    h = gcd(f, g)
    if h.total_degree() > 0:
        if not h.constant_term():
            return INFINITE
        f, g = exact_quotient(f, h), exact_quotient(g, h)
    if not _axis_condition(f, g):
        raise AxisConditionError(f"{f} and {g} meet on x = 0 away from the origin")
    return resultant_y(f, g).order()


def log_distance(c1: BranchClass, c2: BranchClass):
    """``i0 / (ord c1 * ord c2)`` between representative branches; INFINITE iff equal."""
    if c1.expansion is None or c1.expansion is not c2.expansion:
        raise IntersectError("classes from different expansions cannot be compared")
    i0 = c1.expansion.path_intersection(c1, c2)
    if i0 is INFINITE:
        return INFINITE
    return Fraction(i0, c1.ord * c2.ord)


def i0_via_branches(f: BivariatePolynomial, g: BivariatePolynomial, max_splits: int = 100):
    """``i0(f, g)`` as ``sum mult * d * i0_branch(f, c)`` over the branch classes ``c`` of ``g``.

    ``g`` need not be squarefree: each squarefree factor through the origin is
    expanded and weighted by its multiplicity in ``g``.  Both curves must be
    y-regular.
    """
    if f.is_zero() or g.is_zero():
        return INFINITE
    _check_pair(f, g, axis=False)
    h = gcd(f, g)
    if h.total_degree() > 0:
        if not h.constant_term():
            return INFINITE
        f, g = exact_quotient(f, h), exact_quotient(g, h)
    factors = [b for b in coprime_basis([g]) if not b.constant_term()]
    if f.constant_term() or not factors:
        return 0
    bounds = [precision_bound(f, b, strict=False) for b in factors]
    hints: dict = {}
    for _ in range(max_splits):
        try:
            expansion = Expansion(factors, precision=max(b.bound for b in bounds) + 1, hints=hints)
            total = 0
            for c in expansion.classes:
                k = i0_branch(f, c, bounds[c.source])
                if k is INFINITE:
                    return INFINITE
                total += multiplicity(factors[c.source], g) * c.d * k
            return total
        except Split as s:
            hints[s.ring.key] = s.factors
    raise IntersectError("residue rings kept splitting")
