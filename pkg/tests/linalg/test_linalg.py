import random

import pytest

from dquiver.error import ShapeError, SingularMatrixError
from dquiver.field import PrimeField
from dquiver.linalg import (BlockLabels, ExactMatrix, block_diag, extract_blocks, inverse, is_invertible,
                            pivot_columns, rank, row_space_equal, rref, solve, solve_left,
                            solve_nullspace_dim, stack_split)


def _m(rows, field=None):
    return ExactMatrix.from_rows(rows) if field is None else ExactMatrix.from_rows(rows, field)


@pytest.mark.parametrize('m, expected', [
    (ExactMatrix.zeros(0, 5), 0),
    (ExactMatrix.identity(3), 3),
    (_m([[1, 1], [0, 1], [0, 1], [0, 1]]), 2),
    (_m([['1/2', 1], [1, 2]]), 1),
])
def test__rank(m, expected):
    assert rank(m) == expected


def test__rank__transpose():

    rng = random.Random(3)
    for _ in range(20):
        m = ExactMatrix.random(rng.randint(0, 4), rng.randint(0, 4), rng)
        assert rank(m) == rank(m.transpose())


def test__rank__prime_field():

    gf2 = PrimeField(2)
    m = _m([[1, 1], [1, 1]], gf2)

    # over GF(2) the rows of [[1, 1], [1, 3]] coincide
    assert rank(m) == 1
    assert rank(_m([[1, 1], [1, 3]], gf2)) == 1
    assert rank(_m([[1, 1], [1, 3]])) == 2


@pytest.mark.parametrize('m, expected', [
    (ExactMatrix.zeros(0, 4), 4),
    (ExactMatrix.identity(3), 0),
    (_m([[1, 1, 0], [0, 1, 1]]), 1),
])
def test__solve_nullspace_dim(m, expected):
    assert solve_nullspace_dim(m) == expected


def test__pivot_columns__prefix_ranks():

    m = _m([[0, 1, 2, 0], [0, 2, 4, 1], [0, 0, 0, 3]])
    pivots = pivot_columns(m)

    for k in range(m.cols + 1):
        assert rank(m.submatrix(0, m.rows, 0, k)) == sum(1 for c in pivots if c < k)


def test__inverse():

    m = _m([[2, 1], [1, 1]])

    assert inverse(m) @ m == ExactMatrix.identity(2)

    with pytest.raises(SingularMatrixError):
        inverse(_m([[1, 2], [2, 4]]))

    with pytest.raises(SingularMatrixError):
        inverse(_m([[1, 2]]))


def test__inverse__prime_field():

    gf7 = PrimeField(7)
    m = _m([[3, 1], [0, 5]], gf7)

    assert is_invertible(m)
    assert m @ inverse(m) == ExactMatrix.identity(2, gf7)


def test__solve():

    a = _m([[1, 2], [2, 4]])

    x = solve(a, _m([[3], [6]]))
    assert a @ x == _m([[3], [6]])

    assert solve(a, _m([[3], [7]])) is None


def test__solve_left():

    b = _m([[1, 0, 0], [0, 1, 0]])
    c = _m([[2, 3, 0]])

    x = solve_left(b, c)
    assert x @ b == c
    assert solve_left(b, _m([[0, 0, 1]])) is None


def test__rref__row_space():

    m1 = _m([[1, 2], [2, 4], [0, 1]])
    m2 = _m([[1, 0], [0, 3]])

    r, pivots = rref(m1)
    assert pivots == (0, 1)
    assert r.row(2) == (0, 0)

    assert row_space_equal(m1, m2)
    assert not row_space_equal(_m([[1, 0]]), _m([[0, 1]]))


def test__extract_blocks():

    m = _m([[1, 2, 3], [4, 5, 6]])
    rows = BlockLabels.of([('top', 1), ('bottom', 1)])
    cols = BlockLabels.of([('a', 1), ('b', 2)])

    assert extract_blocks(m, rows, cols) == m
    assert extract_blocks(m, rows, cols, [], []).shape == (0, 0)
    assert extract_blocks(m, rows, cols, ['top'], ['a', 'b']).to_json() == [[1, 2, 3]]

    with pytest.raises(ShapeError):
        extract_blocks(m, rows, BlockLabels.of([('a', 1)]))


def test__stack_split():

    m = _m([[1, 2], [3, 4]])
    n = _m([[5, 6]])

    assert stack_split(m, n, 0, 0).to_json() == [[1, 2], [3, 4], [5, 6]]
    assert stack_split(m, n, 2, 2) == block_diag(m, n)

    with pytest.raises(ShapeError):
        stack_split(m, n, 1, 0)


def test__matmul__shape_mismatch():
    with pytest.raises(ShapeError):
        _m([[1, 2]]) @ _m([[1, 2]])
