"""Exact structure at infinity of nonsingular polynomial matrices.

Computes Smith-type factorizations of rational matrices over the ring of
proper rational functions, the finite-dimensional module a polynomial
matrix attaches to that ring, homomorphisms between such modules (with
duality, coprimeness-based surjectivity/injectivity tests, and existence
criteria), and state-space realizations of polynomial parts of transfer
matrices.  All arithmetic is exact, over the rationals or a prime field.
"""

from .errors import (
    FieldMismatchError,
    ImproperInputError,
    KernelInclusionError,
    ParseError,
    PreconditionError,
    ShapeError,
    SingularMatrixError,
    SminfError,
    VerificationError,
)
from .fields import GF, QQ, Field, PrimeField, RationalField, field_from_tag
from .poly import Poly, poly_gcd
from .ratfun import (
    IMPROPER,
    STRICTLY_PROPER,
    UNIT,
    ZERO,
    RatFun,
    at_zero,
    causality_class,
    delta,
    pi_split,
    ratfun_normalize,
)
from .matrices import (
    PolyMatrix,
    RatMatrix,
    det,
    inverse,
    is_bicausal,
    mat_at_zero,
    mat_mul,
    mat_pi_minus,
    mat_pi_plus,
)
from .field_matrix import FieldMatrix, jordan_block_sizes, nilpotency_index
from .infinity import (
    ExponentProfile,
    SmithFactorization,
    dim_UL,
    finite_structure_at_zero,
    infinite_elementary_divisors,
    minor_valuation_profile,
    smith_at_infinity,
)
from .residue_module import (
    ModuleBasis,
    ModuleElement,
    canonical_rep,
    canonical_rep_rational,
    compute_basis,
    gram_matrix,
    kernel_member,
    pairing,
    scalar_action,
    shift_matrix,
)
from .hom import (
    CompletionResult,
    CoprimeCertificate,
    Intertwiner,
    alt_condition_check,
    apply_hom,
    check_intertwining,
    complete_intertwiner,
    dual_intertwiner,
    exists_injective,
    exists_surjective,
    hom_matrix,
    hom_space_oracle,
    is_injective,
    is_surjective,
    kernel_inclusion_check,
    left_coprime,
)
from .realization import (
    PolyPartRealization,
    TransferSplit,
    canonical_split,
    polynomial_part_coeffs,
    realize_plus,
    verify_markov,
)

__version__ = "0.1.0"
