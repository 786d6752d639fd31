"""Seeded random instances for tests and the `gen` subcommands.

Every generator takes an explicit ``random.Random`` so corpora are
reproducible.  Intertwining pairs are assembled blockwise -- diagonal
power hosts conjugated by constant invertible matrices, with the rational
factor built entry by entry so its counterpart is proper by construction
-- because rejection sampling on random proper matrices essentially never
yields a proper counterpart.
"""

from __future__ import annotations

from random import Random

from fractions import Fraction

from .fields import Field, QQ, PrimeField
from .hom import Intertwiner
from .matrices import PolyMatrix, RatMatrix
from .poly import Poly
from .ratfun import RatFun


def random_scalar(rng: Random, field: Field, nonzero=False):
    if isinstance(field, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, field.p)
    while True:
        value = Fraction(rng.randint(-3, 3))
        if rng.random() < 0.15:
            value /= rng.randint(2, 3)
        if value != 0 or not nonzero:
            return value


def random_poly(rng: Random, field: Field, max_degree: int, nonzero=False) -> Poly:
    while True:
        deg = rng.randint(0, max_degree)
        coeffs = [random_scalar(rng, field) for _ in range(deg + 1)]
        p = Poly(field, coeffs)
        if not (nonzero and p.is_zero):
            return p


def random_proper_ratfun(rng: Random, field: Field, max_degree: int = 2) -> RatFun:
    den = random_poly(rng, field, max_degree, nonzero=True)
    deg_den = int(den.degree)
    num = random_poly(rng, field, deg_den) if rng.random() < 0.8 else Poly.zero(field)
    return RatFun(num, den)


def random_ratfun(rng: Random, field: Field, max_degree: int = 3) -> RatFun:
    num = random_poly(rng, field, max_degree)
    den = random_poly(rng, field, max_degree, nonzero=True)
    return RatFun(num, den)


def random_poly_matrix(rng: Random, field: Field, rows, cols, max_degree) -> PolyMatrix:
    return PolyMatrix(
        field,
        [[random_poly(rng, field, max_degree) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def random_nonsingular(rng: Random, field: Field, n, max_degree) -> PolyMatrix:
    while True:
        L = random_poly_matrix(rng, field, n, n, max_degree)
        if not L.to_rat().det().is_zero:
            return L


def random_rat_matrix(rng: Random, field: Field, rows, cols, max_degree=3) -> RatMatrix:
    return RatMatrix(
        field,
        [[random_ratfun(rng, field, max_degree) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def random_constant_invertible(rng: Random, field: Field, n) -> PolyMatrix:
    while True:
        M = PolyMatrix(
            field,
            [
                [Poly.constant(field, random_scalar(rng, field)) for _ in range(n)]
                for _ in range(n)
            ],
            cols=n,
        )
        if not M.to_rat().det().is_zero:
            return M


def random_pencil(rng: Random, field: Field, n):
    """Nonsingular degree-one host A0 - A1*s, returned together with the
    swapped pencil A0*s - A1 used by the structure-at-zero cross-check."""
    while True:
        a0 = [[random_scalar(rng, field) for _ in range(n)] for _ in range(n)]
        a1 = [[random_scalar(rng, field) for _ in range(n)] for _ in range(n)]
        F = field
        host = PolyMatrix(
            F,
            [[Poly(F, (a0[i][j], F.neg(a1[i][j]))) for j in range(n)] for i in range(n)],
            cols=n,
        )
        swapped = PolyMatrix(
            F,
            [[Poly(F, (F.neg(a1[i][j]), a0[i][j])) for j in range(n)] for i in range(n)],
            cols=n,
        )
        if not host.to_rat().det().is_zero:
            return host, swapped


def random_intertwiner(rng: Random, field: Field, max_size=3, max_power=2) -> Intertwiner:
    n = rng.randint(1, max_size)
    n1 = rng.randint(1, max_size)
    a = [rng.randint(0, max_power) for _ in range(n)]
    c = [rng.randint(0, max_power) for _ in range(n1)]
    F = field

    theta_d = []
    for i in range(n1):
        row = []
        for j in range(n):
            if rng.random() < 0.35:
                row.append(RatFun.zero(F))
            else:
                drop = max(0, a[j] - c[i])
                row.append(random_proper_ratfun(rng, F, 1) * RatFun.monomial(F, -drop))
        theta_d.append(row)
    theta_d = RatMatrix(F, theta_d, cols=n)

    diag_a = PolyMatrix.diag(F, [Poly.monomial(F, e) for e in a])
    diag_c = PolyMatrix.diag(F, [Poly.monomial(F, e) for e in c])
    theta1_d = (
        RatMatrix.diag(F, [RatFun.monomial(F, -e) for e in c])
        * theta_d
        * diag_a.to_rat()
    )

    outer_l, inner_l = (random_constant_invertible(rng, F, n) for _ in range(2))
    outer_l1, inner_l1 = (random_constant_invertible(rng, F, n1) for _ in range(2))
    L = outer_l * diag_a * inner_l
    L1 = outer_l1 * diag_c * inner_l1
    theta = outer_l1.to_rat() * theta_d * outer_l.to_rat().inverse()
    theta1 = inner_l1.to_rat().inverse() * theta1_d * inner_l.to_rat()
    return Intertwiner(L=L, L1=L1, theta=theta, theta1=theta1)


def kernel_respecting_perturbation(rng: Random, iw: Intertwiner) -> RatMatrix:
    """theta plus L1 * (s^-d * E): leaves the induced class map unchanged
    (so kernel inclusion still holds) but breaks the exact relation with
    the original theta1."""
    F = iw.L.field
    n, n1 = iw.L.rows, iw.L1.rows
    E = RatMatrix(
        F,
        [
            [RatFun.constant(F, random_scalar(rng, F)) for _ in range(n)]
            for _ in range(n1)
        ],
        cols=n,
    )
    l1e = iw.L1 * E
    degs = [e.num.degree for row in l1e.entries for e in row if not e.is_zero]
    d = max(1, int(max(degs, default=0)))
    return iw.theta + l1e.scale(RatFun.monomial(F, -d))


def random_kernel_respecting_theta(
    rng: Random, field: Field, L: PolyMatrix, L1: PolyMatrix
) -> RatMatrix:
    """A proper theta satisfying the kernel inclusion on arbitrary hosts:
    scale a random proper matrix down until the kernel-block image is
    strictly proper."""
    from .hom import _kernel_block_data

    n, n1 = L.rows, L1.rows
    R = RatMatrix(
        field,
        [[random_proper_ratfun(rng, field, 1) for _ in range(n)] for _ in range(n1)],
        cols=n,
    )
    _, _, _, G = _kernel_block_data(R, L, L1)
    md = G.min_delta()
    if md == float("inf"):
        return R
    drop = max(0, 1 - int(md))
    return R.scale(RatFun.monomial(field, -drop))


def host_zoo(field: Field) -> list[PolyMatrix]:
    """Twelve fixed hosts with varied invariant exponent profiles."""
    F = field
    s = Poly.monomial(F, 1)
    s2 = Poly.monomial(F, 2)
    s3 = Poly.monomial(F, 3)
    one = Poly.one(F)
    zero = Poly.zero(F)

    def mat(rows):
        return PolyMatrix(F, rows, cols=len(rows[0]))

    return [
        mat([[one]]),
        mat([[s]]),
        mat([[s + one]]),
        PolyMatrix.identity(F, 2),
        mat([[zero, one], [one, s]]),
        mat([[zero, one], [one, s2]]),
        PolyMatrix.diag(F, [s2, one]),
        mat([[s, one], [zero, s]]),
        mat([[one, s], [zero, one]]),
        PolyMatrix.diag(F, [s3, one]),
        PolyMatrix.identity(F, 3),
        PolyMatrix.diag(F, [one, one, s]),
    ]
