"""Smith factorization over the proper ring and derived invariants."""

import random

import pytest

from sminf import (
    ExponentProfile,
    RatFun,
    RatMatrix,
    SingularMatrixError,
    dim_UL,
    finite_structure_at_zero,
    infinite_elementary_divisors,
    minor_valuation_profile,
    smith_at_infinity,
)
from sminf.corpus import random_nonsingular, random_pencil, random_rat_matrix

from conftest import pm, rf, rm, worked_host


def scaled_worked(field):
    return worked_host(field).to_rat().scale(RatFun.monomial(field, -1))


class TestSmithAtInfinity:
    def test_worked_profile(self, field):
        fact = smith_at_infinity(scaled_worked(field))
        assert fact.profile == ExponentProfile((2,), (0,), 2)

    def test_scaled_identity(self, field):
        W = RatMatrix.identity(field, 2).scale(RatFun.monomial(field, -1))
        fact = smith_at_infinity(W)
        assert fact.profile == ExponentProfile((1, 1), (), 2)
        assert fact.sigma == W

    def test_reorders_mixed_diagonal(self, field):
        W = RatMatrix.diag(field, [rf(field, (0, 1)), rf(field, (1,), (0, 1))])
        fact = smith_at_infinity(W)
        assert fact.profile == ExponentProfile((1,), (1,), 2)
        assert fact.sigma == RatMatrix.diag(
            field, [rf(field, (1,), (0, 1)), rf(field, (0, 1))]
        )
        assert fact.verify(W)

    def test_rank_deficient_and_rectangular(self, field):
        rng = random.Random(23)
        for _ in range(6):
            M = random_rat_matrix(rng, field, 2, 3, 2)
            tall = M.vstack(M)  # forced rank deficiency
            fact = smith_at_infinity(tall)
            assert fact.verify(tall)
            assert fact.profile == minor_valuation_profile(tall)
            assert fact.profile.rank <= 2

    def test_zero_matrix(self, field):
        W = RatMatrix.zeros(field, 2, 2)
        fact = smith_at_infinity(W)
        assert fact.profile == ExponentProfile((), (), 0)
        assert fact.verify(W)

    def test_pivot_order_independence(self, field):
        rng = random.Random(29)
        for _ in range(8):
            W = random_rat_matrix(rng, field, 3, 3, 2)
            first = smith_at_infinity(W, tie_break="first")
            last = smith_at_infinity(W, tie_break="last")
            assert first.profile == last.profile
            assert first.verify(W) and last.verify(W)


class TestMinorOracle:
    def test_worked(self, field):
        assert minor_valuation_profile(scaled_worked(field)) == ExponentProfile(
            (2,), (0,), 2
        )

    def test_scaled_identity(self, field):
        W = RatMatrix.identity(field, 2).scale(RatFun.monomial(field, -1))
        assert minor_valuation_profile(W) == ExponentProfile((1, 1), (), 2)

    def test_improper_diag(self, field):
        W = RatMatrix.diag(field, [rf(field, (0, 1)), rf(field, (1,))])
        assert minor_valuation_profile(W) == ExponentProfile((), (0, 1), 2)


class TestInfiniteElementaryDivisors:
    def test_worked(self, field):
        assert infinite_elementary_divisors(worked_host(field)) == [2]

    def test_identity(self, field):
        from sminf import PolyMatrix

        assert infinite_elementary_divisors(PolyMatrix.identity(field, 2)) == [1, 1]

    def test_proper_shifted_inverse_means_empty(self, field):
        L = pm(field, [[(0, 1), (1,)], [(), (0, 1)]])
        assert infinite_elementary_divisors(L) == []
        shifted = L.to_rat().inverse().scale(rf(field, (0, 1)))
        assert shifted.is_proper

    def test_singular_rejected(self, field):
        L = pm(field, [[(0, 1), ()], [(0, 1), ()]])
        with pytest.raises(SingularMatrixError):
            infinite_elementary_divisors(L)


class TestDim:
    def test_examples(self, field):
        assert dim_UL(worked_host(field)) == 2
        assert dim_UL(pm(field, [[(0, 0, 1), ()], [(), (1,)]])) == 1
        assert dim_UL(pm(field, [[(0, 1), (1,)], [(), (0, 1)]])) == 0


class TestStructureAtZero:
    def test_diag(self, field):
        M = pm(field, [[(0, 1), ()], [(), (0, 0, 0, 1)]])
        assert finite_structure_at_zero(M) == [3, 1]

    def test_identity(self, field):
        from sminf import PolyMatrix

        assert finite_structure_at_zero(PolyMatrix.identity(field, 2)) == []

    def test_jordanish(self, field):
        M = pm(field, [[(0, 1), (1,)], [(), (0, 1)]])
        assert finite_structure_at_zero(M) == [2]


def test_oracle_agreement_and_reconstruction(field):
    rng = random.Random(41)
    for _ in range(12):
        n = rng.randint(1, 4)
        L = random_nonsingular(rng, field, n, rng.randint(0, 3))
        W = L.to_rat().scale(RatFun.monomial(field, -1))
        fact = smith_at_infinity(W)
        assert fact.verify(W)
        assert fact.profile == minor_valuation_profile(W)


def test_pencil_law(field):
    rng = random.Random(43)
    for _ in range(10):
        n = rng.randint(1, 4)
        host, swapped = random_pencil(rng, field, n)
        assert sorted(infinite_elementary_divisors(host), reverse=True) == \
            finite_structure_at_zero(swapped)


def test_dim_zero_iff_shifted_inverse_proper(field):
    rng = random.Random(47)
    for _ in range(10):
        n = rng.randint(1, 3)
        L = random_nonsingular(rng, field, n, rng.randint(0, 2))
        shifted = L.to_rat().inverse().scale(RatFun.monomial(field, 1))
        assert (dim_UL(L) == 0) == shifted.is_proper
