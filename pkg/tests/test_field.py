import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spreadhom import PrimeField

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-50, 50), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def test_prime_validation():
    PrimeField(2)
    PrimeField(5)
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField((1 << 20) + 7)  # prime, but past the int64 safety bound


def test_arr_reduces_mod_p():
    f = PrimeField(7)
    a = f.arr([[-1, 8], [14, 3]])
    assert a.tolist() == [[6, 1], [0, 3]]
    assert a.dtype == np.int64


def test_inv_scalar():
    f = PrimeField(32003)
    for x in [1, 2, 5, 32002, -3]:
        assert (f.inv_scalar(x) * x) % 32003 == 1
    with pytest.raises(ValueError):
        f.inv_scalar(0)


def test_rref_worked_example():
    f = PrimeField(5)
    m = f.arr([[1, 2, 3], [2, 4, 1], [0, 0, 4]])
    r, pivots = f.rref(m)
    assert pivots == (0, 2)
    assert r.tolist() == [[1, 2, 0], [0, 0, 1], [0, 0, 0]]


def test_rref_idempotent(field):
    m = field.arr([[3, 1, 4], [1, 5, 9], [2, 6, 5], [3, 5, 8]])
    r, pivots = field.rref(m)
    r2, pivots2 = field.rref(r)
    assert np.array_equal(r, r2)
    assert pivots == pivots2


@given(matrices)
def test_rank_nullity(data):
    f = PrimeField(31)
    m = f.arr(data)
    k = f.kernel_basis(m)
    assert f.rank(m) + k.shape[1] == m.shape[1]


@given(matrices)
def test_transpose_rank(data):
    f = PrimeField(31)
    m = f.arr(data)
    assert f.rank(m) == f.rank(m.T)


@given(matrices)
def test_kernel_basis_annihilates(data):
    f = PrimeField(31)
    m = f.arr(data)
    k = f.kernel_basis(m)
    assert not np.mod(m @ k, 31).any()
    # the basis really is one: full column rank
    assert f.rank(k) == k.shape[1]


@given(matrices, st.lists(st.integers(0, 30), min_size=5, max_size=5))
def test_solve_consistent_system(data, xs):
    f = PrimeField(31)
    a = f.arr(data)
    x = f.arr(xs[: a.shape[1]]).reshape(-1, 1)
    b = f.matmul(a, x)
    got = f.solve(a, b)
    assert got is not None
    assert np.array_equal(f.matmul(a, got), b)


def test_solve_inconsistent_returns_none(field):
    a = field.arr([[1, 0], [0, 0]])
    b = field.arr([[0], [1]])
    assert field.solve(a, b) is None


def test_pivot_columns_and_column_space(field):
    m = field.arr([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    # column 1 is twice column 0
    assert field.pivot_columns(m) == (0, 2)
    cs = field.column_space_basis(m)
    assert cs.shape == (3, 2)
    assert np.array_equal(cs, m[:, [0, 2]])


def test_image_complement_dim(field):
    sub = field.arr([[1, 0], [0, 1], [0, 0]])
    assert field.image_complement_dim(sub, 3) == 1
    assert field.image_complement_dim(field.zeros(3, 0), 3) == 3


def test_matmul_matches_integer_arithmetic():
    f = PrimeField(32003)
    rng = np.random.default_rng(7)
    a = rng.integers(0, 32003, size=(6, 4))
    b = rng.integers(0, 32003, size=(4, 5))
    want = (a.astype(object) @ b.astype(object)) % 32003
    got = f.matmul(a.astype(np.int64), b.astype(np.int64))
    assert got.tolist() == want.tolist()


def test_deterministic_bases(field):
    m = field.arr([[1, 3, 2, 0], [2, 6, 4, 1]])
    k1 = field.kernel_basis(m)
    k2 = field.kernel_basis(m.copy())
    assert np.array_equal(k1, k2)
