"""State-space realization of the polynomial part of a transfer matrix.

A transfer matrix G splits canonically as a strictly proper remainder
plus ``P2 * D2^-1 * Q2``, where D2 = s*N - I is built on a block upshift
nilpotent N sized to the polynomial part.  The module attached to D2 then
carries a realization (N2, B2, C2) with N2 nilpotent, whose parameter
products reproduce the coefficients of the polynomial part:
``G_v = -C2 * N2^v * B2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ImproperInputError,
    PreconditionError,
    ShapeError,
    SingularMatrixError,
)
from .field_matrix import FieldMatrix
from .matrices import PolyMatrix, RatMatrix
from .poly import Poly
from .ratfun import RatFun
from .residue_module import ModuleBasis, canonical_rep, compute_basis


def polynomial_part_coeffs(G: RatMatrix) -> list[FieldMatrix]:
    """Coefficient matrices [G_0, ..., G_t] of the polynomial part of G;
    a single zero matrix when G is strictly proper."""
    pp = G.pi_plus()
    t = int(pp.max_degree())
    F = G.field
    return [
        FieldMatrix(F, [[e.coeff(v) for e in row] for row in pp.entries], cols=G.cols)
        for v in range(t + 1)
    ]


@dataclass(frozen=True)
class TransferSplit:
    """G = w2 + p2 * d2^-1 * q2 with w2 strictly proper, p2 and q2 proper,
    and d2 a nonsingular polynomial matrix."""

    w2: RatMatrix
    p2: RatMatrix
    d2: PolyMatrix
    q2: RatMatrix

    def validate(self):
        m, p = self.w2.rows, self.w2.cols
        n2 = self.d2.rows
        if not self.d2.is_square:
            raise ShapeError("d2 must be square")
        if (self.p2.rows, self.p2.cols) != (m, n2) or (self.q2.rows, self.q2.cols) != (n2, p):
            raise ShapeError("split factor shapes are inconsistent")
        if not self.w2.is_strictly_proper:
            raise ImproperInputError("w2 must be strictly proper")
        if not (self.p2.is_proper and self.q2.is_proper):
            raise ImproperInputError("p2 and q2 must be proper")
        if self.d2.to_rat().det().is_zero:
            raise SingularMatrixError("d2 is singular")

    def reconstruct(self) -> RatMatrix:
        return self.w2 + self.p2 * self.d2.to_rat().inverse() * self.q2


def canonical_split(G: RatMatrix) -> TransferSplit:
    """Split G against the block companion D2 = s*N - I.

    N is the block upshift with identity blocks on the superdiagonal, one
    block per power of s in the polynomial part, so D2^-1 = -sum(s^v N^v)
    is polynomial, det D2 = +-1, and the reconstruction identity is exact
    by construction.
    """
    F = G.field
    m, p = G.rows, G.cols
    coeffs = polynomial_part_coeffs(G)
    t = len(coeffs) - 1
    size = (t + 1) * p

    zero, one = Poly.zero(F), Poly.one(F)
    s = Poly.monomial(F, 1)
    d2 = [[zero] * size for _ in range(size)]
    for i in range(size):
        d2[i][i] = -one
        if i + p < size:
            d2[i][i + p] = s
    d2 = PolyMatrix(F, d2, cols=size)

    q2 = [
        [RatFun.one(F) if i == size - p + j else RatFun.zero(F) for j in range(p)]
        for i in range(size)
    ]
    q2 = RatMatrix(F, q2, cols=p)

    p2 = [[RatFun.zero(F)] * size for _ in range(m)]
    for block in range(t + 1):
        coeff = coeffs[t - block]
        for i in range(m):
            for j in range(p):
                p2[i][block * p + j] = RatFun.constant(F, F.neg(coeff.entry(i, j)))
    p2 = RatMatrix(F, p2, cols=size)

    return TransferSplit(w2=G.pi_minus(), p2=p2, d2=d2, q2=q2)


@dataclass(frozen=True)
class PolyPartRealization:
    """Realization data on the module attached to d2: nilpotent n2 with
    input map b2 and output map c2 in the basis coordinates."""

    basis: ModuleBasis
    n2: FieldMatrix
    b2: FieldMatrix
    c2: FieldMatrix


def realize_plus(split: TransferSplit) -> PolyPartRealization:
    """Build (n2, b2, c2) from a validated split.

    b2 sends an input direction to the class of the matching q2 column;
    c2 reads a class through -(p2 * d2^-1 * x) at the constant coefficient,
    evaluated on the recorded proper preimage x of each basis element (the
    value is insensitive to the choice of preimage).
    """
    split.validate()
    F = split.d2.field
    basis = compute_basis(split.d2)
    d = basis.dim
    m, p = split.p2.rows, split.q2.cols

    d2inv = split.d2.to_rat().inverse()
    b2_cols = [
        basis.coordinates(canonical_rep(split.d2, split.q2.column(j))).column_values(0)
        for j in range(p)
    ]
    b2 = FieldMatrix(F, [[b2_cols[j][i] for j in range(p)] for i in range(d)], cols=p)

    c2_cols = []
    for x in basis.preimages:
        val = (split.p2 * d2inv * x).at_zero()
        c2_cols.append([F.neg(v) for v in val.column_values(0)])
    c2 = FieldMatrix(F, [[c2_cols[j][i] for j in range(d)] for i in range(m)], cols=d)

    return PolyPartRealization(basis=basis, n2=basis.shift, b2=b2, c2=c2)


def verify_markov(split: TransferSplit, rlz: PolyPartRealization) -> bool:
    """Check G_v = -c2 * n2^v * b2 for every coefficient of the polynomial
    part of the reconstructed transfer matrix, plus nilpotency of n2 at
    order t + 1."""
    G = split.reconstruct()
    coeffs = polynomial_part_coeffs(G)
    t = len(coeffs) - 1
    power = FieldMatrix.identity(rlz.n2.field, rlz.n2.rows)
    for v in range(t + 1):
        if coeffs[v] != -(rlz.c2 * power * rlz.b2):
            return False
        power = power * rlz.n2
    return power.is_zero
