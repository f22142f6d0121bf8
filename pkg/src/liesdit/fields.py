"""Exact scalar arithmetic: rationals and prime fields.

Rationals are plain ``fractions.Fraction`` values (always reduced, positive
denominator).  Prime-field elements are ``GFElement`` wrappers around a
residue in [0, p).  Both support the usual arithmetic operators, so the
linear-algebra layer is field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class GFElement:
    """A residue modulo a prime p."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _check(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldError("mixed moduli: %d vs %d" % (self.p, other.p))
            return other.val
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(v - self.val, self.p)

    def __mul__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.val * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        if self.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        v = self._check(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(v * pow(self.val, self.p - 2, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """The field of rationals; elements are Fraction."""

    name = "Q"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldError("cannot coerce %r into Q" % (x,))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.p = p
        self.name = "GF(%d)" % p
        self.characteristic = p

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise FieldError("element of GF(%d) used in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError("denominator of %s vanishes mod %d" % (x, self.p))
            return GFElement(x.numerator * pow(x.denominator, self.p - 2, self.p), self.p)
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise FieldError("cannot coerce %r into GF(%d)" % (x, self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]
