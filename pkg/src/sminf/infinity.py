"""Structure at infinity of rational matrices.

Over the ring of proper rational functions -- a discrete valuation ring
whose prime is 1/s and whose valuation is ``delta`` -- every rational
matrix W factors as W = P * Sigma * Q with P, Q bicausal and Sigma
diagonal in signed powers of s, padded with zero rows/columns when W is
rank deficient.  The diagonal exponents are invariants of W; sorted with
negative exponents first they give the exponent profile (alphas, betas).

Two independent routes to the profile are provided: the constructive
elimination (:func:`smith_at_infinity`) and a minor-valuation scan
(:func:`minor_valuation_profile`), which cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ShapeError, SingularMatrixError, VerificationError
from .matrices import PolyMatrix, RatMatrix
from .ratfun import RatFun


@dataclass(frozen=True)
class ExponentProfile:
    """Invariant exponents of Sigma: ``alphas`` are the negated negative
    s-exponents (descending, all >= 1), ``betas`` the nonnegative
    s-exponents (ascending), ``rank`` the count of nonzero diagonal
    entries."""

    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if list(self.alphas) != sorted(self.alphas, reverse=True) or any(
            a < 1 for a in self.alphas
        ):
            raise ValueError("alphas must be descending positive integers")
        if list(self.betas) != sorted(self.betas) or any(b < 0 for b in self.betas):
            raise ValueError("betas must be ascending nonnegative integers")
        if self.rank != len(self.alphas) + len(self.betas):
            raise ValueError("rank must count all nonzero diagonal entries")

    def exponents(self) -> list[int]:
        """Diagonal s-exponents in canonical (ascending) order."""
        return [-a for a in self.alphas] + list(self.betas)

    @classmethod
    def from_exponents(cls, exps) -> "ExponentProfile":
        alphas = sorted((-e for e in exps if e < 0), reverse=True)
        betas = sorted(e for e in exps if e >= 0)
        return cls(tuple(alphas), tuple(betas), len(list(exps)))


@dataclass(frozen=True)
class SmithFactorization:
    """W = left * sigma * right with bicausal outer factors."""

    left: RatMatrix
    profile: ExponentProfile
    right: RatMatrix
    sigma: RatMatrix

    def reconstruct(self) -> RatMatrix:
        return self.left * self.sigma * self.right

    def verify(self, W: RatMatrix) -> bool:
        return (
            self.reconstruct() == W
            and self.left.is_bicausal()
            and self.right.is_bicausal()
        )


def _pivot_position(grid, k, rows, cols, tie_break):
    """Entry of minimal valuation in the trailing block, or None if the
    block is zero.  ``tie_break`` picks among equal valuations: "first"
    takes the smallest (row, col), "last" the largest."""
    best = None
    best_delta = math.inf
    for i in range(k, rows):
        for j in range(k, cols):
            d = grid[i][j].delta
            if d == math.inf:
                continue
            better = d < best_delta
            if d == best_delta:
                better = tie_break == "last"
            if better or best is None:
                best, best_delta = (i, j), d
    return best


def smith_at_infinity(W: RatMatrix, tie_break: str = "first") -> SmithFactorization:
    """Diagonalize W over the proper ring by valuation-minimal pivoting.

    Each step picks a remaining entry of least valuation, normalizes its
    unit part away, and clears its row and column; the quotients used as
    multipliers have nonnegative valuation by minimality of the pivot, so
    every transformation (and its inverse) stays proper with unit
    determinant.  Every step shrinks the active block by one, and entries
    of the trailing block keep valuation >= the pivot's, so the loop
    terminates with a diagonal of ascending valuations, reordered at the
    end to the canonical ascending-exponent form.
    """
    if tie_break not in ("first", "last"):
        raise ValueError("tie_break must be 'first' or 'last'")
    F = W.field
    m, r = W.rows, W.cols
    grid = [list(row) for row in W.entries]
    # Accumulated outer factors; invariant: W == P * grid * Q throughout.
    P = [list(row) for row in RatMatrix.identity(F, m).entries]
    Q = [list(row) for row in RatMatrix.identity(F, r).entries]

    def swap_rows(a, b):
        if a != b:
            grid[a], grid[b] = grid[b], grid[a]
            for row in P:
                row[a], row[b] = row[b], row[a]

    def swap_cols(a, b):
        if a != b:
            for row in grid:
                row[a], row[b] = row[b], row[a]
            Q[a], Q[b] = Q[b], Q[a]

    rank = 0
    for k in range(min(m, r)):
        pos = _pivot_position(grid, k, m, r, tie_break)
        if pos is None:
            break
        swap_rows(k, pos[0])
        swap_cols(k, pos[1])
        pivot = grid[k][k]
        d = pivot.delta
        unit = pivot * RatFun.monomial(F, d)  # valuation-zero unit part
        unit_inv = unit.inverse()
        grid[k] = [unit_inv * e for e in grid[k]]
        for row in P:
            row[k] = row[k] * unit
        for i in range(k + 1, m):
            e = grid[i][k]
            if e.is_zero:
                continue
            mult = e / grid[k][k]
            grid[i] = [a - mult * b for a, b in zip(grid[i], grid[k])]
            for row in P:
                row[k] = row[k] + mult * row[i]
        for j in range(k + 1, r):
            e = grid[k][j]
            if e.is_zero:
                continue
            mult = e / grid[k][k]
            for row in grid:
                row[j] = row[j] - mult * row[k]
            Q[k] = [a + mult * b for a, b in zip(Q[k], Q[j])]
        rank += 1

    # Elimination leaves valuations ascending along the diagonal; the
    # canonical order is s-exponents ascending, i.e. valuations descending,
    # so reverse the nonzero block with permutations folded into P and Q.
    for a in range(rank // 2):
        b = rank - 1 - a
        swap_rows(a, b)
        swap_cols(a, b)

    exponents = []
    for k in range(rank):
        e = grid[k][k]
        d = e.delta
        if e != RatFun.monomial(F, -d):
            raise VerificationError("pivot did not normalize to a power of s")
        exponents.append(-d)

    profile = ExponentProfile.from_exponents(exponents)
    sigma = [
        [
            RatFun.monomial(F, exponents[i]) if i == j and i < rank else RatFun.zero(F)
            for j in range(r)
        ]
        for i in range(m)
    ]
    return SmithFactorization(
        left=RatMatrix(F, P, cols=m),
        profile=profile,
        right=RatMatrix(F, Q, cols=r),
        sigma=RatMatrix(F, sigma, cols=r),
    )


def minor_valuation_profile(W: RatMatrix) -> ExponentProfile:
    """Profile read off minor valuations, independent of any elimination:
    with v_k the least valuation over all k x k minors, the k-th invariant
    valuation is v_k - v_(k-1)."""
    mins = []
    rows, cols = W.rows, W.cols
    for k in range(1, min(rows, cols) + 1):
        v = math.inf
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                v = min(v, W.submatrix(ri, ci).det().delta)
        if v == math.inf:
            break
        mins.append(v)
    exps = []
    prev = 0
    for v in mins:
        exps.append(-(v - prev))
        prev = v
    return ExponentProfile.from_exponents(exps)


def infinite_elementary_divisors(L: PolyMatrix) -> list[int]:
    """Exponents a_1 >= ... >= a_t of the negative-power invariant factors
    of L scaled by 1/s; empty exactly when s * L^-1 is proper."""
    R = _nonsingular_rat(L)
    scaled = R.scale(RatFun.monomial(L.field, -1))
    return list(smith_at_infinity(scaled).profile.alphas)


def dim_UL(L: PolyMatrix) -> int:
    """Dimension over the base field of the module attached to L at
    infinity: the sum of the infinite elementary divisor exponents."""
    return sum(infinite_elementary_divisors(L))


def finite_structure_at_zero(M: PolyMatrix) -> list[int]:
    """Exponents (descending) of the elementary divisors of M at the root
    s = 0, via orders of vanishing of minor gcds."""
    R = _nonsingular_rat(M)
    n = M.rows
    orders = []
    for k in range(1, n + 1):
        w = math.inf
        for ri in combinations(range(n), k):
            for ci in combinations(range(n), k):
                d = R.submatrix(ri, ci).det()
                if d.is_zero:
                    continue
                w = min(w, d.num.order_at_zero())
        orders.append(w)
    exps = []
    prev = 0
    for w in orders:
        step = w - prev
        if step > 0:
            exps.append(step)
        prev = w
    return sorted(exps, reverse=True)


def _nonsingular_rat(L: PolyMatrix) -> RatMatrix:
    if not L.is_square:
        raise ShapeError("structure invariants need a square matrix")
    R = L.to_rat()
    if R.det().is_zero:
        raise SingularMatrixError("matrix is singular")
    return R
