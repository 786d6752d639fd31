"""Exact coefficient fields: arbitrary-precision rationals and GF(p).

Scalars are plain Python values -- ``fractions.Fraction`` over the
rationals, ints in ``[0, p)`` over a prime field -- and all arithmetic is
routed through the owning :class:`Field` object, so polynomial and matrix
code is written once and runs over either field.  Fields compare equal by
value and are hashable, which lets containers carry them freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ParseError


class Field:
    """Interface for an exact field of scalars."""

    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        """Parse a scalar written as ``"a"`` or ``"a/b"`` in decimal."""
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def tag(self):
        """JSON value identifying this field in serialized documents."""
        raise NotImplementedError


class RationalField(Field):
    """The rationals, with ``Fraction`` scalars."""

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {text!r}: {exc}") from None

    def format(self, a):
        return str(a)

    def tag(self):
        return "Q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    """GF(p) for prime p < 2**31, with int scalars in ``[0, p)``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31 or not _is_prime(p):
            raise ParseError(f"GF modulus must be a prime below 2**31, got {p!r}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        c = a + b
        return c - self.p if c >= self.p else c

    def sub(self, a, b):
        c = a - b
        return c + self.p if c < 0 else c

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return self.p - a if a else 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.div(self.from_int(int(num)), self.from_int(int(den)))
            return self.from_int(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad GF({self.p}) scalar {text!r}: {exc}") from None

    def format(self, a):
        return str(a)

    def tag(self):
        return {"GF": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag) -> Field:
    """Inverse of ``Field.tag()``; accepts ``"Q"`` or ``{"GF": p}``."""
    if tag == "Q":
        return QQ
    if isinstance(tag, dict) and set(tag) == {"GF"}:
        return GF(tag["GF"])
    raise ParseError(f"unknown field tag {tag!r}")


def field_from_flag(text: str) -> Field:
    """Parse the command line form ``Q`` or ``GF:<p>``."""
    if text == "Q":
        return QQ
    if text.startswith("GF:"):
        try:
            return GF(int(text[3:]))
        except ValueError:
            raise ParseError(f"bad field flag {text!r}") from None
    raise ParseError(f"bad field flag {text!r} (expected Q or GF:<p>)")
