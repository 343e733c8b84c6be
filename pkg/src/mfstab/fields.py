"""Exact scalar fields: the rationals and prime fields of odd characteristic."""

from __future__ import annotations

from fractions import Fraction


class CharacteristicError(ValueError):
    """Raised when a field of characteristic 2 is requested."""


class RationalField:
    characteristic = 0
    name = "q"

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def to_str(self, c: Fraction) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class Fp:
    """Element of Z/pZ. Arithmetic with plain ints is allowed."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other) % self.p
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Fp(self._coerce(other), self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return "%d (mod %d)" % (self.v, self.p)


class PrimeField:
    name: str

    def __init__(self, p: int):
        if p == 2:
            raise CharacteristicError(
                "characteristic 2 is not allowed: the D-infinity catalogue "
                "requires a field of characteristic different from 2")
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%d is not a prime" % p)
        self.characteristic = p
        self.name = "fp:%d" % p

    def __call__(self, value) -> Fp:
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fp):
            return Fp(value.v, self.characteristic)
        if isinstance(value, Fraction):
            p = self.characteristic
            if value.denominator % p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % p)
            return Fp(value.numerator * pow(value.denominator, -1, p), p)
        return Fp(int(value), self.characteristic)

    @property
    def zero(self) -> Fp:
        return Fp(0, self.characteristic)

    @property
    def one(self) -> Fp:
        return Fp(1, self.characteristic)

    def to_str(self, c: Fp) -> str:
        # symmetric representative keeps small negatives readable
        v, p = c.v, self.characteristic
        return str(v - p if v > p // 2 else v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return "GF(%d)" % self.characteristic


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """Parse ``q`` or ``fp:P``."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError("unknown field %r (expected 'q' or 'fp:P')" % text)
