"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending (``coeffs[k]`` multiplies ``s**k``) with
no trailing zeros, so the zero polynomial is the empty tuple and its
degree is the sentinel ``-inf`` -- degree arithmetic never sees ``-1``.
Instances are immutable and hashable.
"""

from __future__ import annotations

import math

from .errors import FieldMismatchError
from .fields import Field

NEG_INF = -math.inf


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == field.zero:
            trimmed.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, k: int, c=None):
        """c * s**k for k >= 0 (c defaults to 1)."""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        c = field.one if c is None else c
        return cls(field, (field.zero,) * k + (c,))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(n) for n in ints])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    def leading_coeff(self):
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def order_at_zero(self):
        """Multiplicity of the root s = 0; +inf for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c != self.field.zero:
                return k
        return math.inf

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"mixed fields {self.field!r} and {other.field!r}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = F.add(out[k], c)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == F.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quo = [F.zero] * (dq + 1)
        lc_inv = F.inv(other.leading_coeff())
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top == F.zero:
                continue
            q = F.mul(top, lc_inv)
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = F.sub(rem[k + j], F.mul(q, b))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading_coeff()))

    def shift_down(self, k: int):
        """Polynomial part of self * s**-k, i.e. drop the k lowest coefficients."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return Poly(self.field, self.coeffs[k:])

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        F = self.field
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == F.zero:
                continue
            txt = F.format(c)
            if k == 0:
                parts.append(txt)
            else:
                power = "s" if k == 1 else f"s^{k}"
                parts.append(power if txt == "1" else f"{txt}*{power}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()
