from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedrham.errors import NonHomogeneousRelation, ParseError, WeightZeroInfinite
from gradedrham.polynomial import Polynomial, Presentation
from gradedrham.ringfile import parse_polynomial, parse_ring, parse_ring_file, render_ring

from conftest import ring


def test_spec_examples():
    cusp = ring("ring cusp / vars x:2 y:3 / rels y^2 - x^3")
    assert cusp.name == "cusp" and cusp.weights == (2, 3)
    y, x = Polynomial.variable(2, 1), Polynomial.variable(2, 0)
    assert cusp.relations == (y ** 2 - x ** 3,)
    torus = ring("ring torus / vars t:1 s:-1 / rels t*s - 1")
    assert torus.weights == (1, -1) and torus.regime == "mixed"
    with pytest.raises(NonHomogeneousRelation) as info:
        ring("ring bad / vars x:2 y:3 / rels y^2 - x")
    assert sorted(info.value.pair) == [(0, 2), (1, 0)]
    assert "weight 6" in str(info.value) and "weight 2" in str(info.value)


@pytest.mark.parametrize("text, want", [
    ("x^2", {(2, 0): 1}),
    ("-x", {(1, 0): -1}),
    ("--x", {(1, 0): 1}),
    ("3/4*x*y", {(1, 1): Fraction(3, 4)}),
    ("(x + y)^2", {(2, 0): 1, (1, 1): 2, (0, 2): 1}),
    ("x - (y - x)", {(1, 0): 2, (0, 1): -1}),
    ("2 * 3 - 6", {}),
    ("  x*  y ", {(1, 1): 1}),
    ("-x^2", {(2, 0): -1}),
    ("x^0", {(0, 0): 1}),
])
def test_polynomial_grammar(text, want):
    p = parse_polynomial(text, ("x", "y"))
    assert p == Polynomial(2, {e: Fraction(c) for e, c in want.items()})


@pytest.mark.parametrize("text, col", [
    ("x +", 4), ("x ^ y", 5), ("z", 1), ("x $ y", 3), ("(x", 3), ("1/0", 1), ("x/2", 2), ("", 1), ("x y", 3),
])
def test_polynomial_errors(text, col):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, ("x", "y"), line=7)
    assert info.value.line == 7
    assert info.value.column == col


def test_file_errors_have_positions():
    with pytest.raises(ParseError) as info:
        parse_ring("ring r\nvars x:1 y:1\nrels x*y, x + $")
    assert info.value.line == 3 and info.value.column == 15
    with pytest.raises(ParseError) as info:
        parse_ring("ring r\nvars x:one\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_ring("vars x:1\n")
    with pytest.raises(ParseError):
        parse_ring("ring r\n")
    with pytest.raises(ParseError) as info:
        parse_ring("ring r\nvars x:1\nbogus 3\n")
    assert info.value.line == 3


def test_comments_and_metadata():
    rf = parse_ring_file(
        "# header\nring c  # trailing\nvars x:2 y:3\nrels y^2 - x^3\nkrull 1\nsource a note\n"
        "expect hartshorne 1 0 0 window=0..18 p_max=8\nperiod x y x*dy\nsame-as other\n"
    )
    assert rf.name == "c" and rf.krull == 1 and rf.source == "a note"
    (exp,) = rf.expectations
    assert exp.route == "hartshorne" and exp.totals == (1, 0, 0)
    assert exp.params == {"window": (0, 18), "p_max": 8}
    assert rf.periods == [("x", "y", "x*dy")] and rf.same_as == ["other"]


def test_negative_window_parameter():
    rf = parse_ring_file("ring t\nvars t:1 s:-1\nrels t*s - 1\nexpect amitsur 1 1 0 window=-6..6\n")
    assert rf.expectations[0].params["window"] == (-6, 6)


def test_relations_split_at_top_level_commas():
    p = parse_ring("ring r\nvars x:1 y:1 z:1\nrels x*(y + z), y*z\n")
    assert len(p.relations) == 2


def test_weight_zero_mixing_rejected():
    with pytest.raises(WeightZeroInfinite):
        parse_ring("ring r\nvars x:0 y:1\n")


def test_bundled_corpus_round_trips(corpus):
    for rf in corpus.values():
        assert parse_ring(render_ring(rf.presentation)) == rf.presentation


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 3))
    syms = ["x", "y", "z"][:n]
    weights = draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    rels = []
    for _ in range(draw(st.integers(0, 2))):
        target = draw(st.integers(1, 8))
        terms = {}
        for _ in range(draw(st.integers(1, 3))):
            e = tuple(draw(st.integers(0, 4)) for _ in range(n))
            if sum(a * w for a, w in zip(e, weights)) == target:
                terms[e] = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4)))
        poly = Polynomial(n, {e: c for e, c in terms.items() if c})
        if poly.terms:
            rels.append(poly)
    return Presentation("r", tuple(zip(syms, weights)), tuple(rels))


@settings(max_examples=60, deadline=None)
@given(presentations())
def test_render_parse_round_trip(p):
    assert parse_ring(render_ring(p)) == p
