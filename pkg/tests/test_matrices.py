"""Exact matrix algebra over polynomials and rational functions."""

import random

import pytest

from sminf import (
    PolyMatrix,
    RatFun,
    RatMatrix,
    ShapeError,
    SingularMatrixError,
    det,
    inverse,
    is_bicausal,
    mat_at_zero,
    mat_mul,
    mat_pi_minus,
    mat_pi_plus,
)
from sminf.corpus import random_rat_matrix, random_nonsingular

from conftest import p, pm, rf, rm, worked_host


@pytest.fixture
def L(field):
    return worked_host(field).to_rat()


@pytest.fixture
def Linv(field):
    # [[-s, 1], [1, 0]]
    return rm(field, [[((0, -1), (1,)), ((1,), (1,))], [((1,), (1,)), ((), (1,))]])


class TestMul:
    def test_identity(self, field, L):
        assert mat_mul(L, RatMatrix.identity(field, 2)) == L

    def test_worked_inverse_product(self, field, L, Linv):
        assert mat_mul(L, Linv) == RatMatrix.identity(field, 2)

    def test_diag_product(self, field):
        a = rm(field, [[((0, 1), (1,)), ((), (1,))], [((), (1,)), ((1,), (1,))]])
        b = rm(field, [[((1,), (1,)), ((), (1,))], [((), (1,)), ((0, 1), (1,))]])
        s = rf(field, (0, 1))
        assert mat_mul(a, b) == RatMatrix.diag(field, [s, s])

    def test_shape_mismatch(self, field, L):
        with pytest.raises(ShapeError):
            mat_mul(L, RatMatrix.identity(field, 3))


class TestDet:
    def test_worked(self, field, L):
        assert det(L) == rf(field, (-1,))

    def test_identity(self, field):
        assert det(RatMatrix.identity(field, 3)) == rf(field, (1,))

    def test_diag(self, field):
        M = RatMatrix.diag(field, [rf(field, (0, 0, 1)), rf(field, (1,))])
        assert det(M) == rf(field, (0, 0, 1))

    def test_non_square(self, field):
        with pytest.raises(ShapeError):
            det(RatMatrix.zeros(field, 2, 3))

    def test_bareiss_matches_cofactor(self, field):
        rng = random.Random(11)
        for _ in range(5):
            M = random_rat_matrix(rng, field, 4, 4, 2)
            grid3 = M.submatrix(range(3), range(3))
            # 3x3 goes through cofactors, 4x4 through cleared Bareiss; check
            # consistency via a bordered expansion of the same matrix
            expanded = M.det()
            top = M.submatrix(range(4), range(4))
            assert expanded == top.det()
            assert grid3.det() == grid3.transpose().det()


class TestInverse:
    def test_worked(self, field, L, Linv):
        assert inverse(L) == Linv

    def test_identity(self, field):
        M = RatMatrix.identity(field, 2)
        assert inverse(M) == M

    def test_diag(self, field):
        M = RatMatrix.diag(field, [rf(field, (0, 0, 1)), rf(field, (1,))])
        assert inverse(M) == RatMatrix.diag(
            field, [rf(field, (1,), (0, 0, 1)), rf(field, (1,))]
        )

    def test_singular(self, field):
        M = rm(field, [[((0, 1), (1,)), ((), (1,))], [((0, 1), (1,)), ((), (1,))]])
        with pytest.raises(SingularMatrixError):
            inverse(M)

    def test_involution_and_4x4_path(self, field):
        rng = random.Random(5)
        for _ in range(3):
            M = random_nonsingular(rng, field, 4, 1).to_rat()
            Minv = inverse(M)
            assert M * Minv == RatMatrix.identity(field, 4)
            assert inverse(Minv) == M


class TestSplits:
    def test_polynomial_matrix_fixed(self, field, L):
        assert mat_pi_plus(L).to_rat() == L
        assert mat_pi_minus(L).is_zero

    def test_scalar_split(self, field):
        M = rm(field, [[((1, 0, 1), (0, 1))]])  # s + 1/s
        assert mat_pi_plus(M) == pm(field, [[(0, 1)]])
        assert mat_pi_minus(M) == rm(field, [[((1,), (0, 1))]])

    def test_at_zero(self, field):
        M = rm(field, [[((3, 2, 1), (0, 1))]])
        assert mat_at_zero(M).entry(0, 0) == field.from_int(2)

    def test_reassembly_random(self, field):
        rng = random.Random(3)
        for _ in range(5):
            M = random_rat_matrix(rng, field, 2, 3, 3)
            assert mat_pi_plus(M).to_rat() + mat_pi_minus(M) == M


class TestBicausal:
    def test_identity(self, field):
        assert is_bicausal(RatMatrix.identity(field, 2))

    def test_upper_unitriangular(self, field):
        M = rm(field, [[((1,), (1,)), ((1,), (0, 1))], [((), (1,)), ((1,), (1,))]])
        assert is_bicausal(M)

    def test_strictly_proper_det(self, field):
        M = RatMatrix.diag(field, [rf(field, (1,), (0, 1)), rf(field, (1,))])
        assert not is_bicausal(M)

    def test_improper_entry(self, field):
        M = RatMatrix.diag(field, [rf(field, (0, 1)), rf(field, (1,), (0, 1))])
        assert not is_bicausal(M)  # proper failure even though det is a unit

    def test_non_square(self, field):
        with pytest.raises(ShapeError):
            is_bicausal(RatMatrix.zeros(field, 2, 3))

    def test_products_and_inverses_stay_bicausal(self, field):
        a = rm(field, [[((1,), (1,)), ((1,), (0, 1))], [((), (1,)), ((1,), (1,))]])
        b = rm(field, [[((2,), (1,)), ((), (1,))], [((1,), (1, 1)), ((1,), (1,))]])
        assert is_bicausal(a * b)
        assert is_bicausal(inverse(a))
        assert is_bicausal(inverse(a * b))


def test_det_multiplicative(field):
    rng = random.Random(9)
    for n in (2, 3, 4):
        A = random_rat_matrix(rng, field, n, n, 1)
        B = random_rat_matrix(rng, field, n, n, 1)
        assert det(A * B) == det(A) * det(B)
