"""Module homomorphisms between the spaces attached to two nonsingular
polynomial matrices L and L1.

A proper pair (theta, theta1) with ``theta * L = L1 * theta1`` induces a
well-defined module map sending the class of x to the class of theta * x.
This file builds such maps, completes a lone theta that respects kernels
into a full pair, dualizes, and decides surjectivity/injectivity through
coprimeness over the proper ring, where solvability of ``X C + Y D = I``
with proper unknowns is governed by the invariant exponents of the
compound [X | Y]: it is solvable exactly when the compound has full row
rank and no negative-power invariant factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    KernelInclusionError,
    PreconditionError,
    ShapeError,
    SingularMatrixError,
    VerificationError,
)
from .field_matrix import FieldMatrix
from .infinity import infinite_elementary_divisors, smith_at_infinity
from .matrices import PolyMatrix, RatMatrix
from .ratfun import RatFun
from .residue_module import (
    ModuleBasis,
    ModuleElement,
    canonical_rep_rational,
    compute_basis,
)


def _check_host(L: PolyMatrix, name: str):
    if not L.is_square:
        raise ShapeError(f"{name} must be square")
    if L.to_rat().det().is_zero:
        raise SingularMatrixError(f"{name} is singular")


def _check_pair_shapes(theta, theta1, L, L1):
    n, n1 = L.rows, L1.rows
    for name, M in (("theta", theta), ("theta1", theta1)):
        if (M.rows, M.cols) != (n1, n):
            raise ShapeError(f"{name} must be {n1} x {n}, got {M.rows} x {M.cols}")


@dataclass(frozen=True)
class Intertwiner:
    """Validated intertwining data; construction checks shapes, properness
    of both rational factors, nonsingularity of both hosts, and the exact
    relation theta * L = L1 * theta1."""

    L: PolyMatrix
    L1: PolyMatrix
    theta: RatMatrix
    theta1: RatMatrix

    def __post_init__(self):
        _check_host(self.L, "L")
        _check_host(self.L1, "L1")
        _check_pair_shapes(self.theta, self.theta1, self.L, self.L1)
        if not (self.theta.is_proper and self.theta1.is_proper):
            raise PreconditionError("intertwiner factors must be proper")
        if self.theta * self.L != self.L1 * self.theta1:
            raise PreconditionError("relation theta * L = L1 * theta1 fails")


def check_intertwining(theta, theta1, L, L1) -> bool:
    """Do (theta, theta1) intertwine L into L1?  Shape or singularity
    problems raise; properness and the exact relation decide the verdict."""
    _check_host(L, "L")
    _check_host(L1, "L1")
    _check_pair_shapes(theta, theta1, L, L1)
    return theta.is_proper and theta1.is_proper and theta * L == L1 * theta1


def alt_condition_check(theta, theta1, L, L1) -> bool:
    """Compare the polynomial parts of L1^-1 * theta and theta1 * L^-1.
    Implemented exactly as stated; used only as a reported condition, never
    as a substitute for the intertwining relation in decisions."""
    _check_host(L, "L")
    _check_host(L1, "L1")
    _check_pair_shapes(theta, theta1, L, L1)
    lhs = (L1.to_rat().inverse() * theta).pi_plus()
    rhs = (theta1 * L.to_rat().inverse()).pi_plus()
    return lhs == rhs


def apply_hom(iw: Intertwiner, u: ModuleElement) -> ModuleElement:
    """Image of a class under the induced map: the class of theta * rep."""
    if u.host != iw.L:
        raise PreconditionError("element is not hosted by the intertwiner's source")
    return canonical_rep_rational(iw.L1, iw.theta * u.rep.to_rat())


def hom_matrix(iw: Intertwiner, basis_L: ModuleBasis, basis_L1: ModuleBasis) -> FieldMatrix:
    """Matrix of the induced map in the two bases (columns are images of
    the source basis in target coordinates)."""
    cols = [
        basis_L1.coordinates(apply_hom(iw, e)).column_values(0) for e in basis_L.elements
    ]
    d, d1 = basis_L.dim, basis_L1.dim
    return FieldMatrix(iw.L.field, [[cols[j][i] for j in range(d)] for i in range(d1)], cols=d)


def _kernel_block_data(theta: RatMatrix, L: PolyMatrix, L1: PolyMatrix):
    """Common setup for the kernel-inclusion test and completion: factor
    L/s, split the diagonal into the negative-power block A and the rest,
    and form G = L1^-1 * theta * P * diag(A, I)."""
    _check_host(L, "L")
    _check_host(L1, "L1")
    n, n1 = L.rows, L1.rows
    if (theta.rows, theta.cols) != (n1, n):
        raise ShapeError(f"theta must be {n1} x {n}")
    if not theta.is_proper:
        raise PreconditionError("theta must be proper")
    F = L.field
    fact = smith_at_infinity(L.to_rat().scale(RatFun.monomial(F, -1)))
    t = len(fact.profile.alphas)
    diag_a_one = RatMatrix.diag(
        F,
        [
            RatFun.monomial(F, e) if i < t else RatFun.one(F)
            for i, e in enumerate(fact.profile.exponents())
        ],
    )
    M = L1.to_rat().inverse() * theta * fact.left
    G = M * diag_a_one
    return fact, t, M, G


def kernel_inclusion_check(theta: RatMatrix, L: PolyMatrix, L1: PolyMatrix) -> bool:
    """Does theta map the kernel of the source projection into the kernel
    of the target projection?  Kernel columns are spanned by P * diag(A, I)
    with A the negative-power block, so the inclusion holds exactly when
    G = L1^-1 * theta * P * diag(A, I) is strictly proper throughout."""
    _, _, _, G = _kernel_block_data(theta, L, L1)
    return G.is_strictly_proper


@dataclass(frozen=True)
class CompletionResult:
    """Adjustment of a kernel-respecting theta into an intertwining pair:
    psi is strictly proper with L1 * psi proper, and
    (theta + L1 * psi) * L = L1 * theta1 holds exactly."""

    psi: RatMatrix
    theta1: RatMatrix
    theta_adjusted: RatMatrix


def complete_intertwiner(theta: RatMatrix, L: PolyMatrix, L1: PolyMatrix) -> CompletionResult:
    """Produce (psi, theta1) for a theta that respects kernels.

    With L/s = P * Sigma * Q and Sigma = diag(A, B), discarding theta's
    action on the unit-block directions (psi = -M * diag(0, I) * P^-1 with
    M = L1^-1 * theta * P) leaves exactly theta1 = s * G * diag(I, 0) * Q,
    which the kernel condition (G strictly proper) makes proper.  All three
    output conditions plus the relation are re-verified exactly.
    """
    fact, t, M, G = _kernel_block_data(theta, L, L1)
    if not G.is_strictly_proper:
        raise KernelInclusionError(
            "theta does not map the source kernel into the target kernel"
        )
    F = L.field
    n = L.rows
    zero, one = RatFun.zero(F), RatFun.one(F)
    select_tail = RatMatrix.diag(F, [zero] * t + [one] * (n - t))
    select_head = RatMatrix.diag(F, [one] * t + [zero] * (n - t))
    psi = -(M * select_tail * fact.left.inverse())
    theta1 = (G * select_head).scale(RatFun.monomial(F, 1)) * fact.right
    theta_adjusted = theta + L1 * psi

    l1psi = L1 * psi
    if not psi.is_strictly_proper:
        raise VerificationError("completion produced a psi that is not strictly proper")
    if not l1psi.is_proper:
        raise VerificationError("completion produced an improper L1 * psi")
    if not theta1.is_proper:
        raise VerificationError("completion produced an improper theta1")
    if theta_adjusted * L != L1 * theta1:
        raise VerificationError("completion does not satisfy the intertwining relation")
    return CompletionResult(psi=psi, theta1=theta1, theta_adjusted=theta_adjusted)


def dual_intertwiner(iw: Intertwiner) -> Intertwiner:
    """Transpose the data: (theta1^T, theta^T) intertwines L1^T into L^T
    and realizes the adjoint of the induced map under the duality pairing."""
    return Intertwiner(
        L=iw.L1.transpose(),
        L1=iw.L.transpose(),
        theta=iw.theta1.transpose(),
        theta1=iw.theta.transpose(),
    )


@dataclass(frozen=True)
class CoprimeCertificate:
    """Verdict of the left-coprimeness test with exact witnesses: when the
    verdict is true, X * C + Y * D = I holds with proper C and D."""

    verdict: bool
    C: RatMatrix | None = None
    D: RatMatrix | None = None
    reason: str | None = None


def left_coprime(X: RatMatrix, Y: RatMatrix) -> CoprimeCertificate:
    """Decide solvability of X C + Y D = I with proper C, D.

    The compound [X | Y] is factored over the proper ring; solvability
    requires full row rank and no negative-power invariant factor, in
    which case back-substitution through the factorization yields proper
    witnesses (re-verified exactly before returning).
    """
    if X.rows != Y.rows:
        raise ShapeError("X and Y must have the same number of rows")
    r = X.rows
    compound = X.hstack(Y)
    fact = smith_at_infinity(compound)
    if fact.profile.rank < r:
        return CoprimeCertificate(False, reason="compound is row rank deficient")
    if fact.profile.alphas:
        return CoprimeCertificate(
            False, reason="compound has a negative-power invariant factor"
        )
    F = X.field
    exps = fact.profile.exponents()
    sigma_inv = RatMatrix.diag(F, [RatFun.monomial(F, -e) for e in exps])
    top = sigma_inv * fact.left.inverse()
    bottom = RatMatrix.zeros(F, compound.cols - r, r)
    Z = fact.right.inverse() * top.vstack(bottom)
    C = Z.submatrix(range(X.cols), range(r))
    D = Z.submatrix(range(X.cols, compound.cols), range(r))
    if not (C.is_proper and D.is_proper):
        raise VerificationError("coprimeness witnesses are not proper")
    if X * C + Y * D != RatMatrix.identity(F, r):
        raise VerificationError("coprimeness witness identity fails")
    return CoprimeCertificate(True, C=C, D=D)


def is_surjective(iw: Intertwiner) -> bool:
    """The induced map is onto iff theta and L1/s are left coprime."""
    F = iw.L.field
    return left_coprime(iw.theta, iw.L1.to_rat().scale(RatFun.monomial(F, -1))).verdict


def is_injective(iw: Intertwiner) -> bool:
    """The induced map is one-to-one iff theta1^T and L^T/s are left
    coprime (right coprimeness of the untransposed pair)."""
    F = iw.L.field
    return left_coprime(
        iw.theta1.transpose(),
        iw.L.transpose().to_rat().scale(RatFun.monomial(F, -1)),
    ).verdict


def exists_surjective(L: PolyMatrix, L1: PolyMatrix) -> bool:
    """Majorization test on invariant exponents: a surjection exists iff
    the source has at least as many exponents and dominates termwise."""
    a = infinite_elementary_divisors(L)
    g = infinite_elementary_divisors(L1)
    return len(a) >= len(g) and all(a[i] >= g[i] for i in range(len(g)))


def exists_injective(L: PolyMatrix, L1: PolyMatrix) -> bool:
    """Dual majorization: an injection exists iff the target has at least
    as many exponents and dominates termwise."""
    a = infinite_elementary_divisors(L)
    g = infinite_elementary_divisors(L1)
    return len(a) <= len(g) and all(a[i] <= g[i] for i in range(len(a)))


def hom_space_oracle(
    L: PolyMatrix,
    L1: PolyMatrix,
    basis_L: ModuleBasis | None = None,
    basis_L1: ModuleBasis | None = None,
) -> list[FieldMatrix]:
    """Independent description of all module maps as plain linear algebra.

    Because multiplication by 1/s generates the scalar action on both
    spaces (their shifts are nilpotent, so every proper scalar acts as a
    polynomial in the shift), the module maps are exactly the field-linear
    maps M with M * shift(L) = shift(L1) * M.  Returns a basis of that
    solution space."""
    if basis_L is None:
        basis_L = compute_basis(L)
    if basis_L1 is None:
        basis_L1 = compute_basis(L1)
    F = L.field
    S, S1 = basis_L.shift, basis_L1.shift
    d, d1 = basis_L.dim, basis_L1.dim
    if d * d1 == 0:
        return []
    rows = []
    for a in range(d1):
        for b in range(d):
            row = [F.zero] * (d1 * d)
            for k in range(d):
                row[a * d + k] = F.add(row[a * d + k], S.entry(k, b))
            for k in range(d1):
                row[k * d + b] = F.sub(row[k * d + b], S1.entry(a, k))
            rows.append(row)
    system = FieldMatrix(F, rows, cols=d1 * d)
    return [
        FieldMatrix(F, [vec[a * d : (a + 1) * d] for a in range(d1)], cols=d)
        for vec in system.nullspace()
    ]
