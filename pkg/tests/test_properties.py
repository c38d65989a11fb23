"""Structural properties checked on every bundled ring."""

import pytest

from gradedrham.amitsur import AmitsurEngine, default_window
from gradedrham.complexes import cohomology_dims, euler_characteristic
from gradedrham.corpus import check_ring, load_corpus, run_corpus
from gradedrham.derham import DeRhamEngine
from gradedrham.graded import WindowPolicy
from gradedrham.jets import coface_matrix

CORPUS = load_corpus()
NAMES = sorted(CORPUS)


def _weights(p, k=3):
    return list(default_window(p))[:k] if p.regime != "mixed" else [-1, 0, 1]


def _slices(p):
    am = AmitsurEngine(p)
    dr = DeRhamEngine(p, alg=am.alg)
    for d in _weights(p):
        yield am.slice(d, 3, 2)
        yield dr.hartshorne_slice(3, d)
        yield dr.naive_slice(d)


@pytest.mark.parametrize("name", NAMES)
def test_differentials_square_to_zero(name):
    for c in _slices(CORPUS[name].presentation):
        for i in range(len(c.differentials) - 1):
            assert (c.differentials[i + 1] @ c.differentials[i]).is_zero()


@pytest.mark.parametrize("name", NAMES)
def test_euler_characteristic(name):
    for c in _slices(CORPUS[name].presentation):
        if c.truncated:
            continue
        h = cohomology_dims(c)
        assert sum((-1) ** i * v for i, v in enumerate(h)) == euler_characteristic(c)


@pytest.mark.parametrize("name", NAMES)
def test_simplicial_identities(name):
    p = CORPUS[name].presentation
    eng = AmitsurEngine(p)
    for d in _weights(p, 2):
        for m in (1, 2):
            a, b, c = eng.jet(m, 3), eng.jet(m + 1, 3), eng.jet(m + 2, 3)
            for j in range(m + 2):
                for i in range(j):
                    lhs = coface_matrix(b, c, j, d) @ coface_matrix(a, b, i, d)
                    rhs = coface_matrix(b, c, i, d) @ coface_matrix(a, b, j - 1, d)
                    assert lhs == rhs


@pytest.mark.parametrize("name", NAMES)
def test_jet_pieces_grow_with_adic_order(name):
    p = CORPUS[name].presentation
    eng = AmitsurEngine(p)
    for d in _weights(p):
        dims = [eng.jet(2, N).piece(d).dim for N in range(1, 5)]
        assert dims == sorted(dims)


@pytest.mark.parametrize("name", NAMES)
def test_ideal_powers_shrink(name):
    p = CORPUS[name].presentation
    eng = DeRhamEngine(p)
    for d in _weights(p, 5):
        dims = [eng.alg.quotient_piece(k, d).dim for k in range(1, 5)]
        assert dims == sorted(dims)


@pytest.fixture(scope="module")
def default_checks():
    return run_corpus()


def test_corpus_expectations(default_checks):
    bad = [c.as_json() for c in default_checks if not c.ok]
    assert not bad


def test_artin_bound(default_checks):
    artin = [c for c in default_checks if "vanishes above degree" in c.what]
    assert {c.ring for c in artin} == {name for name, rf in CORPUS.items() if rf.krull is not None
                                      and any(e.route != "naive" for e in rf.expectations)}
    assert all(c.ok for c in artin)


def test_every_ring_has_expectations():
    for rf in CORPUS.values():
        assert rf.expectations and rf.krull is not None


def test_monomial_order_invariance(default_checks):
    policy = WindowPolicy(order="grevlex")
    other = []
    for rf in CORPUS.values():
        other.extend(check_ring(rf, CORPUS, policy))
    assert [(c.ring, c.what, c.got) for c in other] == [(c.ring, c.what, c.got) for c in default_checks]
    assert all(c.ok for c in other)
