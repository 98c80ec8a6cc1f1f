"""Newton diagrams of plane curve germs.

A diagram is stored by its vertex chain only: lattice points with strictly
increasing first coordinate and strictly decreasing second coordinate, with
strictly increasing edge slopes.  The region it denotes is the convex hull of
the vertices plus the nonnegative quadrant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import BivariatePolynomial


class NotElementaryError(ValueError):
    pass


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain(points: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty support")
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    beta_min = min(b for _, b in pts)
    out = []
    for v in hull:
        out.append(v)
        if v[1] == beta_min:
            break
    return tuple(out)


@dataclass(frozen=True)
class NewtonDiagram:
    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vs = tuple((int(a), int(b)) for a, b in self.vertices)
        if not vs:
            raise ValueError("a diagram has at least one vertex")
        if _chain(vs) != vs:
            raise ValueError(f"not a convex vertex chain: {vs}")
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def from_points(cls, points) -> "NewtonDiagram":
        return cls(_chain(points))

    def edges(self):
        return list(zip(self.vertices, self.vertices[1:], strict=False))

    def inclinations(self) -> list[Fraction]:
        """Edge inclinations ``d_alpha / d_beta`` (the Teissier ``b/a`` of each face)."""
        return [Fraction(a2 - a1, b1 - b2) for (a1, b1), (a2, b2) in self.edges()]

    def is_elementary(self) -> bool:
        vs = self.vertices
        return len(vs) == 2 and vs[0][0] == 0 and vs[1][1] == 0

    def is_convex(self) -> bool:
        slopes = [Fraction(b2 - b1, a2 - a1) for (a1, b1), (a2, b2) in self.edges()]
        return all(s < t for s, t in zip(slopes, slopes[1:], strict=False))

    def __str__(self):
        return "[" + ",".join(f"({a},{b})" for a, b in self.vertices) + "]"


def diagram(f: BivariatePolynomial) -> NewtonDiagram:
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton diagram")
    return NewtonDiagram.from_points(f.support)


def teissier(b: int, a: int) -> NewtonDiagram:
    """The elementary diagram ``{b/a}`` of ``y^a + x^b``."""
    if a <= 0 or b <= 0:
        raise ValueError("Teissier diagram needs positive a and b")
    return NewtonDiagram(((0, a), (b, 0)))


def hull_union(d1: NewtonDiagram, d2: NewtonDiagram) -> NewtonDiagram:
    return NewtonDiagram.from_points(d1.vertices + d2.vertices)


def n3_bound(d1: NewtonDiagram, d2: NewtonDiagram) -> tuple[int, bool]:
    """Lower bound for the intersection number of germs with elementary diagrams.

    For ``{b1/a1}`` and ``{b2/a2}`` the bound is ``min(a1*b2, a2*b1)`` and it
    is attained whenever the two products differ.
    """
    for d in (d1, d2):
        if not d.is_elementary():
            raise NotElementaryError(f"diagram {d} is not elementary")
    a1, b1 = d1.vertices[0][1], d1.vertices[1][0]
    a2, b2 = d2.vertices[0][1], d2.vertices[1][0]
    return min(a1 * b2, a2 * b1), a1 * b2 != a2 * b1


def n2_check(f: BivariatePolynomial) -> bool:
    """For an irreducible germ other than the axes, is its diagram ``{i0(f,y)/i0(f,x)}``?

    ``i0(f, y)`` is the order of ``f(x, 0)`` and ``i0(f, x)`` that of ``f(0, y)``.
    """
    cx, cy = f.x_axis_order(), f.y_axis_order()
    if not isinstance(cx, int) or not isinstance(cy, int):
        raise ValueError("germ is divisible by an axis")
    if cx == 0 or cy == 0:
        raise ValueError("germ does not pass through the origin")
    return diagram(f) == teissier(cx, cy)


def n1_check(f1: BivariatePolynomial, f2: BivariatePolynomial, rng: random.Random,
             retries: int = 3) -> tuple[bool, int]:
    """Randomized check that a generic combination has the hull of both diagrams.

    Returns ``(holds, attempts)``.  Coefficients are drawn from ``[1, 10**6]``
    with random signs; a failure after ``retries`` draws is reported as
    ``holds=False`` (a genericity failure, which signals a bug).
    """
    target = hull_union(diagram(f1), diagram(f2))
    for attempt in range(1, retries + 1):
        c1 = rng.randint(1, 10**6) * rng.choice((1, -1))
        c2 = rng.randint(1, 10**6) * rng.choice((1, -1))
        combo = f1.scale(c1) + f2.scale(c2)
        if not combo.is_zero() and diagram(combo) == target:
            return True, attempt
    return False, retries
