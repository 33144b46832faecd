import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twistlab.gf import Echelon, mm, nullspace, rank, rref, solve_right


def random_matrix(rng, rows, cols, p):
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_mm_matches_integer_product(p):
    rng = np.random.default_rng(7)
    a = random_matrix(rng, 8, 11, p)
    b = random_matrix(rng, 11, 5, p)
    assert np.array_equal(mm(a, b, p), (a @ b) % p)


def test_mm_huge_inner_dimension_chunks_exactly():
    p = 7
    rng = np.random.default_rng(1)
    a = random_matrix(rng, 2, 3000, p)
    b = random_matrix(rng, 3000, 2, p)
    assert np.array_equal(mm(a, b, p), (a.astype(object) @ b.astype(object) % p).astype(np.int64))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rref_reproduces_row_space(p):
    rng = np.random.default_rng(3)
    a = random_matrix(rng, 6, 9, p)
    r, pivots = rref(a, p)
    assert len(pivots) == rank(a, p)
    # every original row must reduce to zero against the echelon rows
    ech = Echelon(p, 9)
    ech.add(r[: len(pivots)])
    assert not ech.reduce(a).any()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_nullspace_annihilates(p):
    rng = np.random.default_rng(11)
    a = random_matrix(rng, 7, 10, p)
    basis = nullspace(a, p)
    assert basis.shape[0] == 10 - rank(a, p)
    if basis.shape[0]:
        assert not mm(a, basis.T, p).any()
        assert rank(basis, p) == basis.shape[0]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_solve_right_finds_a_preimage(p):
    rng = np.random.default_rng(5)
    a = random_matrix(rng, 6, 6, p)
    x = random_matrix(rng, 6, 2, p)
    b = mm(a, x, p)
    got = solve_right(a, b, p)
    assert np.array_equal(mm(a, got, p), b)


def test_solve_right_reports_inconsistency():
    a = np.array([[1, 0], [0, 0]], dtype=np.int64)
    b = np.array([[0], [1]], dtype=np.int64)
    with pytest.raises(np.linalg.LinAlgError):
        solve_right(a, b, 3)


def test_echelon_kernel_matches_nullspace():
    rng = np.random.default_rng(13)
    a = random_matrix(rng, 5, 8, 3)
    ech = Echelon(3, 8)
    ech.add(a)
    kern = ech.kernel()
    null = nullspace(a, 3)
    assert kern.shape == null.shape
    assert not mm(a, kern.T, 3).any()


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=5), st.data())
def test_rank_is_transpose_invariant(rows, data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    cols = data.draw(st.integers(min_value=0, max_value=5))
    cells = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=p - 1),
            min_size=rows * cols,
            max_size=rows * cols,
        )
    )
    a = np.array(cells, dtype=np.int64).reshape(rows, cols)
    assert rank(a, p) == rank(a.T, p)
