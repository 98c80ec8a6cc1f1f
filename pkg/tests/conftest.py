from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lojasiewicz.algebra import BivariatePolynomial
from lojasiewicz.parsing import parse_polynomial

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

X = BivariatePolynomial.x()
Y = BivariatePolynomial.y()


def P(text: str) -> BivariatePolynomial:
    return parse_polynomial(text)


small_ints = st.integers(min_value=-4, max_value=4)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def polynomials(draw, max_degree=3, max_terms=4, allow_constant=True, nonzero=False):
    monos = [(a, b) for a in range(max_degree + 1) for b in range(max_degree + 1 - a)
             if allow_constant or a + b]
    picks = draw(st.lists(st.sampled_from(monos), min_size=1 if nonzero else 0,
                          max_size=max_terms, unique=True))
    p = BivariatePolynomial.constant(0)
    for a, b in picks:
        c = draw(st.integers(min_value=-3, max_value=3).filter(bool))
        p = p + BivariatePolynomial.monomial(a, b, c)
    return p


def at_origin(max_degree=3, max_terms=4):
    return polynomials(max_degree, max_terms, allow_constant=False, nonzero=True)


def fr(*args) -> Fraction:
    return Fraction(*args)


@st.composite
def y_regular_curves(draw, max_degree=4, max_terms=3):
    """``c*y^m`` plus terms of total degree at least ``m``: always y-regular of order ``m``."""
    m = draw(st.integers(1, 3))
    monos = [(a, b) for a in range(max_degree + 1) for b in range(max_degree + 1 - a)
             if a + b >= m and (a, b) != (0, m)]
    p = BivariatePolynomial.monomial(0, m, draw(st.integers(-3, 3).filter(bool)))
    for a, b in draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True)):
        p = p + BivariatePolynomial.monomial(a, b, draw(st.integers(-3, 3).filter(bool)))
    return p


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
