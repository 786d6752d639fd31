"""Exact rational functions and the split K(s) = polynomials + strictly proper.

A :class:`RatFun` is always kept in canonical form: numerator and
denominator coprime, denominator monic, and zero stored as 0/1.  Equality
is therefore field-by-field comparison of coefficients.

The valuation at infinity ``delta = deg den - deg num`` grades causality:
negative means improper, zero a unit of the proper ring, positive strictly
proper.  ``delta`` of the zero function is +inf so that minimum scans over
matrix entries skip zeros naturally.
"""

from __future__ import annotations

import math

from .errors import FieldMismatchError
from .fields import Field
from .poly import Poly, poly_gcd

IMPROPER = "improper"
UNIT = "unit"
STRICTLY_PROPER = "strictly_proper"
ZERO = "zero"


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        """Normalize num/den: cancel the gcd, make the denominator monic."""
        if num.field != den.field:
            raise FieldMismatchError("numerator and denominator over different fields")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        F = num.field
        if num.is_zero:
            num, den = Poly.zero(F), Poly.one(F)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc_inv = F.inv(den.leading_coeff())
            if lc_inv != F.one:
                num = num.scale(lc_inv)
                den = den.scale(lc_inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(Poly.zero(field), Poly.one(field))

    @classmethod
    def one(cls, field):
        return cls(Poly.one(field), Poly.one(field))

    @classmethod
    def constant(cls, field, c):
        return cls(Poly.constant(field, c), Poly.one(field))

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.field))

    @classmethod
    def monomial(cls, field, k: int):
        """s**k for any integer k (negative powers are 1 / s**-k)."""
        if k >= 0:
            return cls(Poly.monomial(field, k), Poly.one(field))
        return cls(Poly.one(field), Poly.monomial(field, -k))

    @property
    def field(self):
        return self.num.field

    # -- causality grading --------------------------------------------------

    @property
    def delta(self):
        """Valuation at infinity: deg den - deg num, +inf for zero."""
        if self.num.is_zero:
            return math.inf
        return self.den.degree - self.num.degree

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_proper(self):
        return self.delta >= 0

    @property
    def is_strictly_proper(self):
        return self.delta >= 1

    @property
    def is_unit(self):
        return self.delta == 0

    def causality_class(self) -> str:
        d = self.delta
        if d is math.inf:
            return ZERO
        if d < 0:
            return IMPROPER
        if d == 0:
            return UNIT
        return STRICTLY_PROPER

    # -- the direct-sum split ------------------------------------------------

    def pi_split(self):
        """Split into (polynomial part, strictly proper part); the parts
        recombine to self exactly."""
        q, r = divmod(self.num, self.den)
        return q, RatFun(r, self.den)

    def pi_plus(self) -> Poly:
        return self.pi_split()[0]

    def pi_minus(self) -> "RatFun":
        return self.pi_split()[1]

    def at_zero(self):
        """Constant coefficient of the polynomial part."""
        return self.pi_plus().coeff(0)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"mixed fields {self.field!r} and {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RatFun(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero function")
        return RatFun(self.den, self.num)

    def scale(self, c):
        return RatFun(self.num.scale(c), self.den)

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def ratfun_normalize(num: Poly, den: Poly) -> RatFun:
    """Canonical rational function equal to num/den (den must be nonzero)."""
    return RatFun(num, den)


def delta(f: RatFun):
    return f.delta


def pi_split(f: RatFun):
    return f.pi_split()


def at_zero(f: RatFun):
    return f.at_zero()


def causality_class(f: RatFun) -> str:
    return f.causality_class()
