from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import P, X, Y, at_origin, polynomials, rationals
from lojasiewicz.algebra import (
    INFINITE,
    QQ,
    ZERO_TO_PRECISION,
    BivariatePolynomial,
    ExtensionElement,
    ExtensionRing,
    Split,
    TruncatedSeries,
    coprime_basis,
    divides,
    exact_quotient,
    format_extended,
    gcd,
    is_y_regular,
    multiplicity,
    normalize,
    order,
    parse_extended,
    resultant_y,
    shear,
    squarefree_layers,
    squarefree_part,
    substitute,
)
from lojasiewicz.algebra import upoly
from lojasiewicz.puiseux import Parametrization


def series(*coeffs, precision=8):
    return TruncatedSeries.from_rationals(coeffs, precision)


def test_extended_naturals():
    assert INFINITE > 10**9 and not INFINITE < 3
    assert INFINITE + 5 is INFINITE
    assert 3 < INFINITE and min(7, INFINITE) == 7
    assert format_extended(INFINITE) == "inf" and format_extended(Fraction(7, 2)) == "7/2"
    assert parse_extended("inf") is INFINITE and parse_extended("7/2") == Fraction(7, 2)


@pytest.mark.parametrize("text, expected", [("x", 1), ("y^2 - x^3", 2), ("x^2*y", 3)])
def test_order_examples(text, expected):
    assert order(P(text)) == expected


def test_order_of_zero_is_infinite():
    assert order(BivariatePolynomial.constant(0)) is INFINITE


@given(polynomials(), polynomials())
def test_order_is_additive(f, g):
    assert order(f * g) == order(f) + order(g)


def test_substitute_examples():
    t = series(0, 1)
    assert substitute(X, Parametrization(t, series())).dense() == series(0, 1).dense()
    phi = Parametrization(series(0, 0, 1), series(0, 0, 0, 1))
    assert substitute(X + Y, phi).dense() == series(0, 0, 1, 1).dense()
    assert substitute(P("y^2 - x^3"), phi).order() is ZERO_TO_PRECISION


@given(polynomials(max_degree=2), polynomials(max_degree=2),
       st.lists(rationals, min_size=1, max_size=3), st.lists(rationals, min_size=1, max_size=3))
def test_substitute_is_multiplicative(f, g, a, b):
    assume(any(a) or any(b))
    phi = Parametrization(series(0, *a, precision=7), series(0, *b, precision=7))
    lhs = substitute(f * g, phi)
    rhs = substitute(f, phi) * substitute(g, phi)
    assert lhs.dense() == rhs.dense()


def sylvester_det(f_coeffs, g_coeffs):
    """Determinant of the Sylvester matrix of two univariate polynomials (high to low)."""
    m, n = len(f_coeffs) - 1, len(g_coeffs) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(f_coeffs) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(g_coeffs) + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            k = rows[r][col] / rows[col][col]
            rows[r] = [u - k * v for u, v in zip(rows[r], rows[col], strict=False)]
    return det


def specialize(f, x0):
    """Coefficients of ``f(x0, y)`` in ``y``, high to low."""
    deg = f.degree_y()
    coeffs = [Fraction(0)] * (deg + 1)
    for (a, b), c in f.terms():
        coeffs[deg - b] += c * Fraction(x0) ** a
    return coeffs


@pytest.mark.parametrize("f, g, expected", [
    ("x", "y", "x"),
    ("y - x^2", "y", "x^2"),
])
def test_resultant_examples(f, g, expected):
    r = resultant_y(P(f), P(g))
    assert r == P(expected) or r == -P(expected)


def test_resultant_of_conjugate_cusps():
    r = resultant_y(P("y^2 - x^3"), P("y^2 + x^3"))
    assert r == P("4*x^6") or r == P("-4*x^6")


@given(polynomials(max_degree=3), polynomials(max_degree=3), st.integers(2, 6))
def test_resultant_matches_sylvester_determinant(f, g, x0):
    assume(f.degree_y() >= 1 and g.degree_y() >= 1)
    fs, gs = specialize(f, x0), specialize(g, x0)
    assume(fs[0] != 0 and gs[0] != 0)
    assert resultant_y(f, g)(x0, 0) == sylvester_det(fs, gs)


def test_gcd_examples():
    assert gcd(P("x*y"), P("x*(y+x)")) == X
    assert gcd(P("y^2 - x^3"), P("x^2*y")).total_degree() == 0
    assert squarefree_part(P("x^2*y")) == P("x*y")


@given(polynomials(max_degree=2, nonzero=True), polynomials(max_degree=2, nonzero=True),
       polynomials(max_degree=2, nonzero=True))
def test_gcd_divides_both_and_contains_common_factor(a, b, h):
    f, g = a * h, b * h
    d = gcd(f, g)
    assert divides(d, f) and divides(d, g)
    assert divides(normalize(h), d) or h.total_degree() == 0


def test_gcd_is_normalized():
    d = gcd(P("3*x*y + 6*x^2"), P("2*y^2 + 4*x*y"))
    assert d == P("y + 2*x")
    assert d.leading_term()[1] == 1


@given(polynomials(max_degree=3), rationals)
def test_shear_round_trip(f, lam):
    assert shear(shear(f, lam), -lam) == f


def test_shear_examples():
    assert shear(P("x^2"), 1) == P("x^2 + 2*x*y + y^2")
    f = P("y^3 - 2*x*y + x^5")
    assert shear(f, 0) == f
    assert shear(P("y^2"), Fraction(7, 3)) == P("y^2")


@pytest.mark.parametrize("text, expected", [("y^2 - x^3", True), ("x^2", False), ("x + y^3", False)])
def test_is_y_regular_examples(text, expected):
    assert is_y_regular(P(text)) is expected


def test_multiplicity_and_layers():
    f = P("(y^2 - x^3)^2 * (y - x) * (1 + y)")
    layers = squarefree_layers(f)
    assert len(layers) == 2
    assert multiplicity(P("y^2 - x^3"), f) == 2 and multiplicity(P("y - x"), f) == 1


def test_coprime_basis_separates_multiplicities():
    f = P("(y^2 - x^3)^2 * (1 + y)")
    basis = coprime_basis([f, P("x^2*y")])
    for b in basis:
        assert multiplicity(b, f) in (0, 1, 2)
    assert normalize(P("y^2 - x^3")) in basis
    for i, b in enumerate(basis):
        for c in basis[i + 1:]:
            assert gcd(b, c).total_degree() == 0


@given(st.lists(at_origin(max_degree=2, max_terms=3), min_size=1, max_size=3))
def test_coprime_basis_factors_every_input(polys):
    basis = coprime_basis(polys)
    for f in polys:
        rest = f
        for b in basis:
            k = multiplicity(b, f)
            for _ in range(k):
                rest = exact_quotient(rest, b)
        assert rest.total_degree() == 0


# residue rings ---------------------------------------------------------

I_RING = ExtensionRing(QQ, (Fraction(1), Fraction(0), Fraction(1)))


def test_gaussian_integer_arithmetic():
    i = ExtensionElement(I_RING, I_RING.gen())
    assert i * i == ExtensionElement.from_int(I_RING, -1)
    assert (1 + i).inverse() * (1 + i) == ExtensionElement.from_int(I_RING, 1)


def test_zero_divisor_splits_and_factors_recompute():
    R = ExtensionRing(QQ, (Fraction(-1), Fraction(0), Fraction(1)))  # z^2 - 1
    z = ExtensionElement(R, R.gen())
    with pytest.raises(Split) as info:
        (z - 1).inverse()
    factors = info.value.factors
    assert len(factors) == 2
    product = upoly.mul(QQ, list(factors[0]), list(factors[1]))
    assert upoly.strip(QQ, product) == [Fraction(-1), Fraction(0), Fraction(1)]
    for m in factors:
        if len(m) > 2:
            S = ExtensionRing(QQ, m)
            w = ExtensionElement(S, S.gen())
            assert (w - 1).inverse() is not None
        else:
            root = -m[0] / m[1]
            assert root in (1, -1)


coefficient_pairs = st.tuples(rationals, rationals)


@given(coefficient_pairs, coefficient_pairs, coefficient_pairs)
def test_residue_ring_associativity_and_inverse(a, b, c):
    R = ExtensionRing(QQ, (Fraction(-2), Fraction(0), Fraction(1)))  # z^2 - 2, a field
    ea, eb, ec = (ExtensionElement(R, tuple(v)) for v in (a, b, c))
    assert (ea + eb) + ec == ea + (eb + ec)
    assert (ea * eb) * ec == ea * (eb * ec)
    if not ea.is_zero():
        assert ea * ea.inverse() == ExtensionElement.from_int(R, 1)


@given(coefficient_pairs)
def test_inverse_or_split_over_reducible_modulus(a):
    R = ExtensionRing(QQ, (Fraction(-4), Fraction(0), Fraction(1)))  # z^2 - 4
    ea = ExtensionElement(R, tuple(a))
    assume(not ea.is_zero())
    try:
        assert ea * ea.inverse() == ExtensionElement.from_int(R, 1)
    except Split as s:
        for m in s.factors:
            assert len(m) == 2
            root = -m[0] / m[1]
            value = a[0] + a[1] * root
            assert root in (2, -2)
            if value:
                assert value * (1 / value) == 1
