from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rectchar.polynomials import MultivarPoly, default_names

NVARS = 3


def poly_strategy(nvars=NVARS, max_terms=5, coef_bound=9, max_exp=3):
    exps = st.tuples(*([st.integers(0, max_exp)] * nvars))
    coefs = st.integers(-coef_bound, coef_bound)
    return st.dictionaries(exps, coefs, max_size=max_terms).map(
        lambda d: MultivarPoly(nvars, d)
    )


points = st.tuples(*([st.integers(-4, 4)] * NVARS))


@given(poly_strategy(), poly_strategy(), poly_strategy())
@settings(max_examples=60)
def test_ring_laws(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f
    assert f - f == MultivarPoly.zero(NVARS)


@given(poly_strategy(), poly_strategy(), points)
@settings(max_examples=60)
def test_evaluation_is_ring_homomorphism(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


def test_constructor_drops_zeros_and_normalizes_fractions():
    poly = MultivarPoly(2, {(1, 0): Fraction(4, 2), (0, 1): 0})
    assert poly.terms == {(1, 0): 2}
    assert isinstance(poly.terms[(1, 0)], int)


def test_scalar_arithmetic():
    p = MultivarPoly.variable(2, 0)
    q = MultivarPoly.variable(2, 1)
    poly = 2 * p - q + 1
    assert poly.evaluate((3, 4)) == 3
    assert (poly - 1).constant_term() == 0
    half = poly / 2
    assert half.evaluate((3, 4)) == Fraction(3, 2)
    assert p**3 == p * p * p
    assert p**0 == MultivarPoly.const(2, 1)


def test_degrees_and_homogeneous_part():
    p = MultivarPoly.variable(2, 0)
    q = MultivarPoly.variable(2, 1)
    poly = p**2 * q + p * q + 3
    assert poly.total_degree() == 3
    assert poly.degree_in(0) == 2
    assert poly.homogeneous_part(3) == p**2 * q
    assert poly.homogeneous_part(2) == p * q
    assert poly.homogeneous_part(5) == MultivarPoly.zero(2)
    assert MultivarPoly.zero(2).total_degree() == -1


def test_canonical_string():
    p = MultivarPoly.variable(2, 0)
    q = MultivarPoly.variable(2, 1)
    poly = p * q**2 - p**2 * q
    assert poly.to_string(["p", "q"]) == "-p^2*q + p*q^2"
    assert MultivarPoly.zero(2).to_string(["p", "q"]) == "0"
    assert MultivarPoly.const(2, -7).to_string(["p", "q"]) == "-7"
    assert (p * q + 1).to_string(["p", "q"]) == "p*q + 1"


def test_canonical_order_degree_then_lex():
    terms = {(0, 2): 1, (2, 0): 1, (1, 1): 1, (1, 0): 1}
    poly = MultivarPoly(2, terms)
    assert poly.to_string(["p", "q"]) == "p^2 + p*q + q^2 + p"


def test_json_round_trip():
    poly = MultivarPoly(2, {(3, 1): -12345678901234567890, (0, 0): 7})
    terms = poly.to_json_terms()
    assert terms == [
        {"exp": [3, 1], "coef": "-12345678901234567890"},
        {"exp": [0, 0], "coef": "7"},
    ]
    assert MultivarPoly.from_json_terms(2, terms) == poly


def test_json_rejects_nonintegral():
    poly = MultivarPoly(1, {(1,): Fraction(1, 2)})
    assert not poly.is_integral()
    with pytest.raises(ValueError):
        poly.to_json_terms()


def test_negate_vars():
    p = MultivarPoly.variable(2, 0)
    q = MultivarPoly.variable(2, 1)
    poly = p**2 * q + q**2
    flipped = poly.negate_vars([1])
    assert flipped == -(p**2) * q + q**2
    assert flipped.negate_vars([1]) == poly


def test_coefficient_queries():
    p = MultivarPoly.variable(2, 0)
    poly = 5 * p**2 + 3
    assert poly.coefficient((2, 0)) == 5
    assert poly.coefficient((1, 1)) == 0
    assert poly.constant_term() == 3
    assert poly.coefficient_sum() == 8
    assert not poly.is_constant()
    assert MultivarPoly.const(2, 9).as_constant() == 9


def test_default_names():
    assert default_names(1) == ["p", "q"]
    assert default_names(2) == ["a", "p", "b", "q"]
    assert default_names(3) == ["p1", "p2", "p3", "q1", "q2", "q3"]


def test_mismatched_arity_rejected():
    with pytest.raises(ValueError):
        MultivarPoly(2, {(1,): 1})
    f = MultivarPoly.variable(2, 0)
    g = MultivarPoly.variable(3, 0)
    with pytest.raises(ValueError):
        _ = f + g
