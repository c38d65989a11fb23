from fractions import Fraction

import pytest

from gradedrham.amitsur import AmitsurEngine, amitsur_cohomology, amitsur_slice, default_window
from gradedrham.complexes import cohomology_dims


def test_slice_dims(dual, torus):
    assert amitsur_slice(dual, 0, 2, 2).dims == [1, 1, 1]
    assert amitsur_slice(torus, 0, 3, 2).dims[1] == 3


def test_rejects_bad_truncation(cusp):
    with pytest.raises(ValueError):
        amitsur_slice(cusp, 0, 0, 2)
    with pytest.raises(ValueError):
        amitsur_slice(cusp, 0, 2, 0)


def test_level_zero_differential(cusp):
    # d_0(b) = 1 (x) b - b (x) 1 lies in J, so it vanishes mod J^1
    eng = AmitsurEngine(cusp)
    assert eng.slice(6, 1, 1).differentials[0].is_zero()
    assert not eng.slice(6, 2, 1).differentials[0].is_zero()


def test_default_windows(cusp, torus, artinian):
    assert list(default_window(cusp)) == list(range(0, 13))
    assert list(default_window(torus)) == list(range(-8, 9))
    assert list(default_window(artinian)) == [0]


def test_torus(torus):
    rep = amitsur_cohomology(torus, range(-6, 7), 4, 3)
    assert rep.stabilized and rep.totals == [1, 1, 0]
    assert rep.nonzero_weights() == [0]


def test_cusp(cusp):
    rep = amitsur_cohomology(cusp, range(0, 13), 4, 2)
    assert rep.stabilized and rep.totals == [1, 0]


def test_finite_regime(etale, artinian):
    assert amitsur_cohomology(etale, M=2).totals == [2, 0]
    assert amitsur_cohomology(etale, M=2, uncompleted=True).totals == [1, 0]
    assert amitsur_cohomology(artinian, M=2).totals == [1, 0]


def test_uncompleted_torus_collapses(torus):
    rep = amitsur_cohomology(torus, range(-3, 4), M=2, uncompleted=True)
    assert rep.stabilized and rep.totals == [1, 0]


def test_report_json_schema(cusp):
    js = amitsur_cohomology(cusp, range(0, 3), 3, 2).as_json()
    assert set(js) == {"ring", "source", "params", "weights", "totals", "warnings"}
    assert all({"d", "h", "stabilized"} <= set(w) for w in js["weights"])


def test_unstabilized_weight_is_reported_not_raised(torus):
    # N in {2} only: a single observation cannot be confirmed twice
    rep = amitsur_cohomology(torus, [0], N_max=3, M=2)
    assert not rep.stabilized and rep.warnings


def test_jobs_do_not_change_results(fermat):
    a = amitsur_cohomology(fermat, range(0, 5), 4, 2).as_json()
    b = amitsur_cohomology(fermat, range(0, 5), 4, 2, jobs=4).as_json()
    assert a == b


@pytest.mark.parametrize("name, window", [("cusp", range(1, 10)), ("fermat", range(1, 5)), ("plane", range(1, 5))])
def test_positive_weights_vanish_off_zero(request, name, window):
    rep = amitsur_cohomology(request.getfixturevalue(name), window, 4, 2)
    assert rep.stabilized and rep.totals == [0, 0]


def test_h0_is_constants_for_positive_weights(cusp, line, fermat):
    for p in (cusp, line, fermat):
        eng = AmitsurEngine(p)
        c = eng.slice(0, 3, 1)
        assert cohomology_dims(c) == [1]
