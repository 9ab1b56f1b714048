from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from matroidlc.collapse import collapse_S, f_k, g_polynomial
from matroidlc.matroid import independents_of_size, make_uniform
from matroidlc.poly import (
    MultiPoly,
    coefficient,
    compose_linear,
    constant,
    dominates,
    embed,
    evaluate,
    evaluate_float,
    from_lines,
    monomial,
    partial_derivative,
    poly_mul,
    substitute_zero,
    to_lines,
    variable,
)

NV = 3


def polys(nvars=NV, max_exp=3, max_terms=5, coeffs=st.integers(-5, 5)):
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * nvars), coeffs)
    return st.lists(term, max_size=max_terms).map(lambda ts: MultiPoly(nvars, ts))


def nonneg_polys(nvars=NV):
    return polys(nvars, coeffs=st.integers(0, 5))


x0, x1, x2 = (variable(NV, i) for i in range(NV))


def test_product_examples():
    s = variable(2, 0) + variable(2, 1)
    assert s * s == MultiPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    f = x0 * x1 + 3 * x2
    assert f * constant(NV, 1) == f
    f1 = f_k(make_uniform(2, 4), 1)
    assert coefficient(f1 * f1, (1, 1, 0, 0)) == 2


def test_terms_are_graded_lex_descending():
    f = MultiPoly(2, {(0, 1): 1, (2, 0): 1, (1, 0): 1, (1, 1): 1})
    assert f.support() == [(2, 0), (1, 1), (1, 0), (0, 1)]


def test_zero_coefficients_are_dropped():
    f = MultiPoly(2, [((1, 0), 2), ((1, 0), -2)])
    assert f.is_zero() and f == MultiPoly(2)
    assert (x0 - x0).is_zero()


def test_mismatched_variable_counts():
    with pytest.raises(ValueError):
        variable(2, 0) + variable(3, 0)
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})


def test_degree_and_homogeneity():
    assert (x0 * x1 + x2 * x2).degree == 2
    assert (x0 + x1 * x2).degree is None
    assert not (x0 + x1 * x2).is_homogeneous()
    assert MultiPoly(NV).is_homogeneous()


def test_partial_derivative_examples():
    assert partial_derivative(monomial((2, 1)), 0) == monomial((1, 1), 2)
    assert partial_derivative(x1 * x2, 0).is_zero()
    G = g_polynomial(make_uniform(1, 2))
    assert partial_derivative(G, 0) == monomial((1, 0, 0), 2) + monomial((0, 1, 0)) + monomial((0, 0, 1))
    with pytest.raises(IndexError):
        partial_derivative(x0, 3)


def test_substitute_zero_examples():
    assert substitute_zero(variable(2, 0) + variable(2, 1), 1) == variable(2, 0)
    assert substitute_zero(x0 * x1, 2) == x0 * x1
    G = g_polynomial(make_uniform(1, 2))
    assert substitute_zero(G, 1) == monomial((2, 0, 0)) + monomial((1, 0, 1))


def test_coefficient_examples():
    f2 = f_k(make_uniform(2, 4), 2)
    assert coefficient(f2, (1, 1, 0, 0)) == 1
    assert coefficient(f2, (2, 0, 0, 0)) == 0
    S = collapse_S(make_uniform(1, 2))
    assert coefficient(S, (0, 2)) == 0


def test_dominance_examples():
    U = make_uniform(2, 4)
    f1, f2 = f_k(U, 1), f_k(U, 2)
    with pytest.warns(UserWarning):
        f3 = f_k(U, 3)
    assert f3.is_zero()
    assert dominates(f2 * f2, f1 * f3).holds
    d = dominates(f1 * f1, f_k(U, 0) * f2, Fraction(9, 4))
    assert not d.holds
    assert d.witness == ((1, 1, 0, 0), 2, 1)
    assert 4 * d.witness[1] == 8 and 9 * d.witness[2] == 9
    assert dominates(f2, f2).holds
    assert dominates(f2, f2).tight[0] == (1, 1, 0, 0)


def test_evaluate_examples():
    U = make_uniform(2, 4)
    for k in range(3):
        assert evaluate(f_k(U, k), [1] * 4) == len(independents_of_size(U, k))
    assert evaluate(g_polynomial(U), [1] * 5) == 11
    assert evaluate(MultiPoly(2), [Fraction(1, 3), 7]) == 0
    assert evaluate(x0 * x1 + x2, [Fraction(1, 2), 4, Fraction(-1, 3)]) == Fraction(5, 3)
    with pytest.raises(ValueError):
        evaluate(x0, [1, 2])


def test_embed_and_compose():
    f = variable(2, 0) * variable(2, 1)
    assert embed(f, 4, (1, 3)) == monomial((0, 1, 0, 1))
    # (y0 + y1) * (2 y1)
    g = compose_linear(f, [[1, 1], [0, 2]])
    assert g == MultiPoly(2, {(1, 1): 2, (0, 2): 2})


def test_serialization_example():
    f = MultiPoly(3, {(1, 0, 2): 3, (0, 0, 0): -1})
    assert to_lines(f) == ["3 * x0^1 * x2^2", "-1"]
    assert to_lines(MultiPoly(2)) == []


@settings(max_examples=80, deadline=None)
@given(polys(), polys())
def test_commutativity(f, g):
    assert f * g == g * f
    assert f + g == g + f


@settings(max_examples=60, deadline=None)
@given(polys(max_terms=4), polys(max_terms=4), polys(max_terms=4))
def test_associativity_and_distributivity(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=80, deadline=None)
@given(polys(), st.integers(0, NV - 1), st.integers(0, NV - 1))
def test_mixed_partials_commute(f, i, j):
    assert partial_derivative(partial_derivative(f, i), j) == partial_derivative(partial_derivative(f, j), i)


@settings(max_examples=80, deadline=None)
@given(polys(), polys())
def test_leibniz_rule(f, g):
    lhs = partial_derivative(f * g, 1)
    assert lhs == partial_derivative(f, 1) * g + f * partial_derivative(g, 1)


@settings(max_examples=80, deadline=None)
@given(polys(), polys(), st.lists(st.fractions(-3, 3, max_denominator=5), min_size=NV, max_size=NV))
def test_evaluate_is_a_ring_map(f, g, pt):
    assert evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt)
    assert evaluate(f + g, pt) == evaluate(f, pt) + evaluate(g, pt)
    assert evaluate_float(f, [float(x) for x in pt]) == pytest.approx(float(evaluate(f, pt)), abs=1e-9)


@settings(max_examples=80, deadline=None)
@given(nonneg_polys(), nonneg_polys(), nonneg_polys(), st.fractions(0, 3, max_denominator=4), st.fractions(0, 3, max_denominator=4))
def test_dominance_is_transitive(f, g, h, s, t):
    if dominates(f, g, s).holds and dominates(g, h, t).holds:
        assert dominates(f, h, s * t).holds


@settings(max_examples=80, deadline=None)
@given(polys(), polys())
def test_dominance_matches_difference(f, g):
    assert dominates(f, g).holds == all(c >= 0 for c in (f - g).terms.values())


@settings(max_examples=80, deadline=None)
@given(polys(coeffs=st.integers(-10**30, 10**30)))
def test_serialization_round_trip(f):
    assert from_lines(NV, to_lines(f)) == f


def test_big_integer_coefficients():
    f = constant(1, 10**40) * variable(1, 0)
    assert coefficient(f * f, (2,)) == 10**80


def test_poly_mul_matches_operator():
    f = x0 + 2 * x1
    assert poly_mul(f, f) == f**2 == f * f
    with pytest.raises(ValueError):
        f ** -1
