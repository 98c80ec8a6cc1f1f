import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P, at_origin
from lojasiewicz.intersect import i0_resultant
from lojasiewicz.newton import (
    NewtonDiagram,
    NotElementaryError,
    diagram,
    hull_union,
    n1_check,
    n2_check,
    n3_bound,
    teissier,
)

CURATED_IRREDUCIBLE = ["y^2 - x^3", "y^3 - x^5", "y - x", "y^2 - x^5"]


@pytest.mark.parametrize("text, vertices", [
    ("y^2 + x^3", [(0, 2), (3, 0)]),
    ("x", [(1, 0)]),
    ("y^2 + x*y + x^3", [(0, 2), (1, 1), (3, 0)]),
])
def test_diagram_examples(text, vertices):
    assert list(diagram(P(text)).vertices) == vertices


def test_rendering():
    assert str(diagram(P("y^2 - x^3"))) == "[(0,2),(3,0)]"


def test_teissier_examples():
    assert teissier(3, 2) == diagram(P("y^2 + x^3"))
    assert teissier(1, 1) == diagram(P("x + y"))
    assert list(teissier(5, 2).vertices) == [(0, 2), (5, 0)]


def test_hull_union_examples():
    assert list(hull_union(diagram(P("x^2")), diagram(P("y^3"))).vertices) == [(0, 3), (2, 0)]
    d = diagram(P("y^3 + x*y + x^4"))
    assert hull_union(d, d) == d
    assert hull_union(diagram(P("x")), diagram(P("y"))) == teissier(1, 1)


def test_non_convex_chain_is_rejected():
    with pytest.raises(ValueError):
        NewtonDiagram(((0, 2), (2, 1), (3, 0)))


@given(at_origin(max_degree=5, max_terms=6))
def test_diagrams_are_convex_chains(f):
    d = diagram(f)
    assert d.is_convex()
    slopes = d.inclinations()
    assert slopes == sorted(slopes)


@given(at_origin(max_degree=4), at_origin(max_degree=4))
def test_hull_union_is_convex_and_commutative(f, g):
    u = hull_union(diagram(f), diagram(g))
    assert u.is_convex() and u == hull_union(diagram(g), diagram(f))


def test_n3_examples():
    assert n3_bound(teissier(3, 2), teissier(5, 2)) == (6, True)
    assert n3_bound(teissier(3, 2), teissier(3, 2)) == (6, False)
    for a, b in [(1, 2), (2, 3), (3, 7)]:
        assert n3_bound(teissier(1, 1), teissier(b, a)) == (a, True)


def test_n3_rejects_non_elementary():
    with pytest.raises(NotElementaryError):
        n3_bound(diagram(P("y^2 + x*y + x^3")), teissier(1, 1))


@pytest.mark.parametrize("text", CURATED_IRREDUCIBLE)
def test_n2_curated(text):
    assert n2_check(P(text))


def test_n2_rejects_axis():
    with pytest.raises(ValueError):
        n2_check(P("x*(y - x^2)"))


@given(at_origin(max_degree=4), at_origin(max_degree=4), st.integers(0, 2**32))
def test_n1_generic_combination(f1, f2, seed):
    holds, attempts = n1_check(f1, f2, random.Random(seed))
    assert holds and 1 <= attempts <= 3


def test_n3_exactness_against_resultant():
    for s1 in CURATED_IRREDUCIBLE:
        for s2 in CURATED_IRREDUCIBLE:
            if s1 == s2:
                continue
            f, g = P(s1), P(s2)
            bound, exact = n3_bound(diagram(f), diagram(g))
            i0 = i0_resultant(f, g)
            assert i0 >= bound
            if exact:
                assert i0 == bound
