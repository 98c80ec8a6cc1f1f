import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import P, Y
from lojasiewicz.algebra import INFINITE, TruncatedSeries, substitute
from lojasiewicz.fuzz import oracle_values, random_oracle_pair
from lojasiewicz.intersect import (
    AxisConditionError,
    InsufficientPrecisionError,
    NotCoprimeError,
    RegularityError,
    branch_order,
    i0_branch,
    i0_resultant,
    i0_via_branches,
    log_distance,
    precision_bound,
)
from lojasiewicz.puiseux import Expansion, branch_classes, normalized_parametrization

IRREDUCIBLES = ["y - x", "y + x", "y", "y - x^2", "y^2 - x^3", "y^2 + x^3", "y^2 - x^3 - x^4",
                "y^3 - x^5", "y^2 + x^2", "y^2 - x^5", "y^3 - x^4 - x^5"]


def cusp(precision=12):
    return branch_classes(P("y^2 - x^3"), precision)[0]


@pytest.mark.parametrize("f, W, expected", [
    ("y^2 + x^3", "y^2 - x^3", 6),
    ("y", "y^2 - x^3", 3),
    ("x + y", "y", 1),
])
def test_precision_bound_examples(f, W, expected):
    assert precision_bound(P(f), P(W)).bound == expected


def test_precision_bound_refusals():
    with pytest.raises(NotCoprimeError):
        precision_bound(P("y^2 - x^3"), P("(y^2 - x^3)*(y - x)"))
    with pytest.raises(RegularityError):
        precision_bound(P("x"), P("y"))
    with pytest.raises(AxisConditionError):
        precision_bound(P("(y - 1)*(y - x)"), P("(y - 1)*(y + x) + x^2"))


@pytest.mark.parametrize("f, expected", [("y", 3), ("x", 2), ("y^2 - x^3", INFINITE), ("y^2 + x^3", 6)])
def test_i0_branch_on_cusp(f, expected):
    bound = precision_bound(P("y^2 + x^3"), P("y^2 - x^3"))
    assert i0_branch(P(f), cusp(), bound) == expected


def test_i0_branch_demands_precision():
    bound = precision_bound(P("y^2 + x^3"), P("y^2 - x^3"))
    with pytest.raises(InsufficientPrecisionError):
        i0_branch(P("y"), cusp(4), bound)


@pytest.mark.parametrize("f, g, expected", [("x", "y", 1), ("y - x^2", "y", 2), ("y^2 - x^3", "y^2 + x^3", 6)])
def test_i0_resultant_examples(f, g, expected):
    assert i0_resultant(P(f), P(g)) == expected


def test_i0_resultant_common_branch_is_infinite():
    assert i0_resultant(P("x*y"), P("x*(y + x)")) is INFINITE


def test_i0_resultant_divides_out_unit_factor():
    assert i0_resultant(P("(1 + y)*(y - x^2)"), P("(1 + y)*y")) == 2


def test_i0_via_branches_weights_multiplicities():
    assert i0_via_branches(Y, P("(y^2 - x^3)^2*(1 + y)")) == 6
    assert i0_via_branches(P("y^2 - x^3"), P("y^2 + x^3")) == 6


def test_oracles_agree_on_seeded_pairs():
    for i in range(30):
        f, g = random_oracle_pair(random.Random(f"pairs:{i}"))
        a, b = oracle_values(f, g)
        assert a == b


def test_log_distance_examples():
    exp = Expansion([P("x + y"), Y, P("y^2 - x^3")], precision=10)
    by_source = {c.source: c for c in exp.classes}
    diag, yb, cu = by_source[0], by_source[1], by_source[2]
    assert log_distance(diag, yb) == 1
    assert log_distance(yb, cu) == Fraction(3, 2)
    assert log_distance(cu, cu) is INFINITE


def test_log_distance_refuses_mixed_expansions():
    a = branch_classes(Y, 4)[0]
    b = branch_classes(P("y - x"), 4)[0]
    with pytest.raises(ValueError):
        log_distance(a, b)


def product(polys):
    out = P("1")
    for p in polys:
        out = out * p
    return out


@pytest.mark.parametrize("names", list(itertools.combinations(IRREDUCIBLES, 3)))
def test_distance_matches_resultant_on_known_irreducibles(names):
    polys = [P(n) for n in names]
    exp = Expansion(polys, precision=8)
    for c1, c2 in itertools.combinations(exp.classes, 2):
        assert exp.path_intersection(c1, c2) == exp.path_intersection(c2, c1)
        assert log_distance(c1, c2) == log_distance(c2, c1)
    rational = all(c.d == 1 for c in exp.classes)
    for i, j in itertools.permutations(range(3), 2):
        f, g = polys[i], polys[j]
        if rational:
            tree_total = sum(exp.path_intersection(cf, cg)
                             for cf in exp.classes if cf.source == i
                             for cg in exp.classes if cg.source == j)
            assert tree_total == i0_resultant(f, g)
        assert i0_via_branches(f, g) == i0_resultant(f, g)


@pytest.mark.parametrize("names", list(itertools.combinations(IRREDUCIBLES, 3)))
def test_ultrametric_on_known_irreducibles(names):
    exp = Expansion([P(n) for n in names], precision=8)
    for c1, c2, c3 in itertools.permutations(exp.classes, 3):
        assert log_distance(c1, c2) >= min(log_distance(c1, c3), log_distance(c2, c3))


@given(st.sampled_from(IRREDUCIBLES), st.sampled_from(IRREDUCIBLES), st.integers(2, 3),
       st.lists(st.integers(-2, 2), min_size=0, max_size=2))
def test_reparametrization_multiplies_order(curve, fname, k, tail):
    f = P(fname)
    assume(curve != fname)
    (c, *_) = branch_classes(P(curve), 6)
    assume(c.d == 1)
    base = substitute(f, normalized_parametrization(c, 12)).order()
    assume(isinstance(base, int))
    prec = 12 * k + 1
    tau = TruncatedSeries.from_rationals([0] * k + [1] + tail, prec)
    phi = normalized_parametrization(c, prec).compose(tau)
    assert substitute(f, phi).order() == k * base


def test_branch_order_reports_infinite_past_cap():
    c = cusp(8)
    assert branch_order(P("y^2 - x^3"), c, cap=20) is INFINITE
    assert branch_order(P("y^2 + x^3"), c, cap=20) == 6
