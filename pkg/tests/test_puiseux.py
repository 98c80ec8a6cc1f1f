from fractions import Fraction
from math import gcd as igcd

import pytest
from hypothesis import assume, given

from conftest import P, y_regular_curves
from lojasiewicz.algebra import QQ, ZERO_TO_PRECISION, normalize, squarefree_part, substitute
from lojasiewicz.puiseux import (
    Expansion,
    ExpansionError,
    branch_classes,
    extend_precision,
    normalized_parametrization,
)


def coeffs(series, upto):
    return [series.coefficient(k) for k in range(upto)]


def residual_vanishes(F, c, precision):
    return substitute(F, normalized_parametrization(c, precision)).order() is ZERO_TO_PRECISION


def test_cusp_has_one_class():
    (c,) = branch_classes(P("y^2 - x^3"), 8)
    assert (c.e, c.d, c.ring) == (2, 1, QQ)
    assert coeffs(c.S, 8) == [0, 0, 0, 1, 0, 0, 0, 0]
    phi = normalized_parametrization(c, 8)
    assert coeffs(phi.phi1, 8) == [0, 0, 1, 0, 0, 0, 0, 0]


def test_node_with_square_root_expansion():
    F = P("y^2 - x^2 - x^3")
    classes = branch_classes(F, 4)
    assert len(classes) == 2
    signs = set()
    for c in classes:
        assert (c.e, c.d) == (1, 1)
        s = coeffs(c.S, 4)
        sign = s[1]
        signs.add(sign)
        assert s == [0, sign, sign * Fraction(1, 2), sign * Fraction(-1, 8)]
        assert residual_vanishes(F, c, 12)
    assert signs == {1, -1}


def test_conjugate_pair_over_gaussian_ring():
    (c,) = branch_classes(P("y^2 + x^2"), 6)
    assert (c.e, c.d) == (1, 2)
    assert c.modulus == ((Fraction(1), Fraction(0), Fraction(1)),)
    assert c.S.coefficient(1) == c.ring.gen()
    assert residual_vanishes(P("y^2 + x^2"), c, 6)


def test_smooth_branch_parametrization():
    (c,) = branch_classes(P("y - x"), 5)
    phi = normalized_parametrization(c, 5)
    assert coeffs(phi.phi1, 5) == coeffs(phi.phi2, 5) == [0, 1, 0, 0, 0]


def test_extend_precision():
    (c,) = branch_classes(P("y^2 - x^3"), 4)
    longer = extend_precision(c, 10)
    assert longer.precision == 10 and coeffs(longer.S, 10) == [0, 0, 0, 1] + [0] * 6
    node = branch_classes(P("y^2 - x^2 - x^3"), 2)[0]
    grown = extend_precision(node, 4)
    assert grown.S.coefficient(3) == node.S.coefficient(1) * Fraction(-1, 8)
    with pytest.raises(ValueError):
        extend_precision(c, c.precision)


def test_scaled_x_coefficient_when_needed():
    F = P("y^2 - 2*x^3")
    (c,) = branch_classes(F, 10)
    assert c.e == 2
    assert residual_vanishes(F, c, 10)


def test_input_validation():
    for bad in ["0", "1 + y", "x", "(y - x)^2"]:
        with pytest.raises(ExpansionError):
            branch_classes(P(bad), 5)


def test_classes_are_deterministic():
    F = P("(y^2 - x^3)*(y^2 + x^2)*(y - x)")
    a = [c.format() for c in branch_classes(F, 8)]
    b = [c.format() for c in branch_classes(F, 8)]
    assert a == b


def test_slopes_increase_and_terminal_branch_is_last():
    classes = branch_classes(P("y*(y - x)*(y^2 - x^3)"), 6)
    assert [c.e for c in classes][-1] == 1
    assert coeffs(classes[-1].S, 6) == [0] * 6


def primitive(c, precision):
    support = [k for k in range(precision) if not c.ring.is_zero(c.S.coefficient(k))]
    g = c.e
    for k in support:
        g = igcd(g, k)
    return g == 1


@given(y_regular_curves())
def test_structure_of_random_expansions(F):
    assume(squarefree_part(F) == normalize(F))
    classes = Expansion([F], precision=12).classes
    assert sum(c.e * c.d for c in classes) == F.y_axis_order()
    for c in classes:
        assert residual_vanishes(F, c, c.precision)
        if c.S.order() is not ZERO_TO_PRECISION:
            assert primitive(c, c.precision)
        assert c.ord <= c.e
