from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gradedrham.qlinalg import QMatrix, kernel_basis, membership, quotient_basis, rank, rref

F = Fraction


def dense(m):
    return [[F(x) for x in row] for row in m]


def test_rref_identity():
    red, piv, r = rref(QMatrix.identity(2))
    assert red.to_dense() == dense([[1, 0], [0, 1]]) and piv == [0, 1] and r == 2


def test_rref_proportional_rows():
    red, piv, r = rref(QMatrix.from_dense([[1, 2], [2, 4]]))
    assert red.to_dense() == dense([[1, 2], [0, 0]]) and piv == [0] and r == 1


def test_rref_permutation():
    red, piv, r = rref(QMatrix.from_dense([[0, 1], [1, 0]]))
    assert red.to_dense() == dense([[1, 0], [0, 1]]) and piv == [0, 1] and r == 2


def test_rref_is_normalized_over_q():
    red, piv, _ = rref(QMatrix.from_dense([[2, 3, 5], [4, 1, 1]]))
    assert red.to_dense() == [[1, 0, F(-1, 5)], [0, 1, F(9, 5)]]
    assert piv == [0, 1]


def test_kernel_examples():
    ker = kernel_basis(QMatrix.from_dense([[1, 1]]))
    assert len(ker) == 1 and ker[0][0] == -ker[0][1] != 0
    assert kernel_basis(QMatrix.identity(3)) == []
    assert len(kernel_basis(QMatrix.zeros(2, 3))) == 3


def test_quotient_basis_examples():
    reps, red = quotient_basis(2, QMatrix.from_dense([[1, 1]]))
    assert reps == [1] and red.to_dense() == [[F(-1), F(1)]]
    reps, red = quotient_basis(3, [])
    assert reps == [0, 1, 2] and red == QMatrix.identity(3)
    reps, red = quotient_basis(2, QMatrix.identity(2))
    assert reps == [] and red.shape == (0, 2)


def test_membership_examples():
    span = QMatrix.from_dense([[1, 1]])
    assert membership([2, 2], span)
    assert not membership([1, 0], span)
    assert membership([0, 0], [])


def test_large_entries_stay_exact():
    m = QMatrix.from_dense([[10**30 + 1, 7], [3, F(1, 10**20)]])
    assert rank(m) == 2
    assert rref(m)[0] == QMatrix.identity(2)


small = st.integers(-4, 4).map(Fraction)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return QMatrix.from_dense([[draw(small) for _ in range(c)] for _ in range(r)], c)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    red = rref(m)[0]
    assert rref(red)[0] == red


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.ncols
    for v in ker:
        assert not any(m.apply(v))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_pivots_increase_and_rows_reduced(m):
    red, piv, r = rref(m)
    assert piv == sorted(piv) and len(piv) == r
    for i, p in enumerate(piv):
        assert red[i, p] == 1
        assert all(red[k, p] == 0 for k in range(red.nrows) if k != i)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_quotient_basis_properties(m):
    reps, red = quotient_basis(m.ncols, m)
    assert len(reps) + rank(m) == m.ncols
    assert reps == [j for j in range(m.ncols) if j not in rref(m)[1]]
    for k, j in enumerate(reps):
        e = [F(0)] * m.ncols
        e[j] = F(1)
        assert red.apply(e) == [F(int(i == k)) for i in range(len(reps))]
    for row in m.to_dense():
        assert not any(red.apply(row))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_membership_agrees_with_rank(m, data):
    v = [data.draw(small) for _ in range(m.ncols)]
    stacked = QMatrix.from_dense(m.to_dense() + [v], m.ncols)
    assert membership(v, m) == (rank(stacked) == rank(m))


@settings(max_examples=60, deadline=None)
@given(matrices(4), matrices(4))
def test_matmul_matches_dense(a, b):
    if a.ncols != b.nrows:
        return
    want = [[sum(a[i, k] * b[k, j] for k in range(a.ncols)) for j in range(b.ncols)] for i in range(a.nrows)]
    assert (a @ b).to_dense() == want
