from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedrham.errors import NonHomogeneousRelation, WeightZeroInfinite
from gradedrham.polynomial import Polynomial, Presentation, expand_shift, render_polynomial
from gradedrham.ringfile import parse_polynomial

exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, st.integers(-5, 5).map(Fraction), max_size=5).map(lambda t: Polynomial(2, t))


def test_zero_coefficients_are_dropped():
    p = Polynomial(2, {(1, 0): Fraction(0), (0, 1): Fraction(2)})
    assert p.terms == {(0, 1): 2}
    assert not Polynomial(2, {(1, 1): 0})


def test_derivative():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert (x ** 3 * y ** 2).derivative(0) == 3 * x ** 2 * y ** 2
    assert (y ** 2 - x ** 3).derivative(1) == 2 * y


def test_weight_and_degree():
    p = parse_polynomial("y^2 - x^3", ["x", "y"])
    assert p.weight((2, 3)) == 6
    assert p.std_degree() == 3
    with pytest.raises(Exception):
        parse_polynomial("y^2 - x", ["x", "y"]).weight((2, 3))


def test_nonhomogeneous_relation_names_monomials():
    bad = parse_polynomial("y^2 - x", ["x", "y"])
    with pytest.raises(NonHomogeneousRelation) as err:
        Presentation("bad", (("x", 2), ("y", 3)), (bad,))
    assert "x has weight 2" in str(err.value) and "y^2 has weight 6" in str(err.value)


def test_mixed_zero_weights_rejected():
    with pytest.raises(WeightZeroInfinite):
        Presentation("z", (("x", 0), ("y", 1)), ())


def test_duplicate_symbols_rejected():
    with pytest.raises(ValueError):
        Presentation("d", (("x", 1), ("x", 2)), ())


def test_expand_shift_is_binomial():
    terms = expand_shift((2, 1))
    assert sorted(terms) == sorted([
        ((2, 1), (0, 0), 1), ((2, 0), (0, 1), 1), ((1, 1), (1, 0), 2),
        ((1, 0), (1, 1), 2), ((0, 1), (2, 0), 1), ((0, 0), (2, 1), 1),
    ])


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == Polynomial(2)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_leibniz(a, b):
    for i in range(2):
        assert (a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i)


@settings(max_examples=100, deadline=None)
@given(polys)
def test_render_parse_round_trip(p):
    assert parse_polynomial(render_polynomial(p, ["x", "y"]), ["x", "y"]) == p
