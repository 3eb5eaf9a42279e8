"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Prime-field
scalars are :class:`GFElement` instances carrying their modulus, so that
mixing elements of different fields is caught at the point of arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union


class FieldMismatchError(ValueError):
    """Raised when scalars (or objects) over different fields are combined."""


def is_prime(p: int) -> bool:
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


class GFElement:
    """A residue class modulo a prime ``p``, stored as an int in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"GF({self.p}) vs Q")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> GFElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * GFElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GFElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, GFElement]


class Rationals:
    """The field Q with :class:`Fraction` elements."""

    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, GFElement):
            raise FieldMismatchError(f"GF({x.p}) element used over Q")
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def format(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime ``p``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"F {p}"
        self.characteristic = p
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def __call__(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) element used over GF({self.p})")
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes in GF({self.p})")
            return GFElement(x.numerator, self.p) / x.denominator
        return GFElement(int(x), self.p)

    def contains(self, x) -> bool:
        return isinstance(x, GFElement) and x.p == self.p

    def elements(self) -> Iterator[GFElement]:
        for v in range(self.p):
            yield GFElement(v, self.p)

    def format(self, x: GFElement) -> str:
        return str(x.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x) -> Field:
    if isinstance(x, GFElement):
        return GF(x.p)
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return QQ
    raise TypeError(f"not a scalar: {x!r}")


def parse_field(spec: str) -> Field:
    """Parse ``Q``, ``F 5``, ``F5``, ``GF5``, ``GF(5)`` or a bare prime ``5``."""
    s = spec.strip().upper().replace("(", " ").replace(")", " ")
    if s in ("Q", "QQ"):
        return QQ
    for prefix in ("GF", "F"):
        if s.startswith(prefix):
            s = s[len(prefix):]
            break
    s = s.strip()
    if not s.isdigit():
        raise ValueError(f"unrecognised field {spec!r}")
    return GF(int(s))
