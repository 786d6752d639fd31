"""Base-field linear algebra used for coordinates, shifts, and oracles."""

import random

import pytest

from sminf import FieldMatrix, SingularMatrixError, jordan_block_sizes, nilpotency_index
from sminf.corpus import random_scalar


def _random(rng, field, rows, cols):
    return FieldMatrix(
        field, [[random_scalar(rng, field) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def test_rref_rank_nullspace(field):
    M = FieldMatrix(
        field,
        [
            [field.from_int(1), field.from_int(2), field.from_int(3)],
            [field.from_int(2), field.from_int(4), field.from_int(6)],
        ],
        cols=3,
    )
    assert M.rank() == 1
    null = M.nullspace()
    assert len(null) == 2
    for vec in null:
        col = FieldMatrix.column(field, vec)
        assert (M * col).is_zero


def test_solve_and_inverse(field):
    rng = random.Random(2)
    for n in (1, 2, 3, 4):
        while True:
            M = _random(rng, field, n, n)
            if M.is_invertible():
                break
        assert M * M.inverse() == FieldMatrix.identity(field, n)
    singular = FieldMatrix.zeros(field, 2, 2)
    with pytest.raises(SingularMatrixError):
        singular.inverse()


def test_solve_inconsistent(field):
    M = FieldMatrix(field, [[field.one], [field.one]], cols=1)
    rhs = FieldMatrix(field, [[field.one], [field.zero]], cols=1)
    assert M.solve(rhs) is None


def test_empty_shapes(field):
    empty = FieldMatrix.zeros(field, 0, 3)
    assert empty.rank() == 0
    assert len(empty.nullspace()) == 3
    tall = FieldMatrix.zeros(field, 3, 0)
    assert tall.rank() == 0
    assert (tall * FieldMatrix.zeros(field, 0, 2)) == FieldMatrix.zeros(field, 3, 2)


def test_jordan_structure(field):
    def jordan_block(k):
        return [
            [field.one if j == i + 1 else field.zero for j in range(k)] for i in range(k)
        ]

    rows = []
    sizes = [3, 1]
    n = sum(sizes)
    grid = [[field.zero] * n for _ in range(n)]
    offset = 0
    for k in sizes:
        block = jordan_block(k)
        for i in range(k):
            for j in range(k):
                grid[offset + i][offset + j] = block[i][j]
        offset += k
    N = FieldMatrix(field, grid, cols=n)
    assert jordan_block_sizes(N) == [3, 1]
    assert nilpotency_index(N) == 3
    assert jordan_block_sizes(FieldMatrix.zeros(field, 2, 2)) == [1, 1]
    assert jordan_block_sizes(FieldMatrix.zeros(field, 0, 0)) == []


def test_non_nilpotent_rejected(field):
    M = FieldMatrix.identity(field, 2)
    with pytest.raises(ValueError):
        jordan_block_sizes(M)
    with pytest.raises(ValueError):
        nilpotency_index(M)
