"""Exact coefficient fields: the rationals and prime fields GF(p).

Engines work on raw values (``int`` residues for GF(p), ``Fraction`` for QQ)
through the methods of :class:`FieldSpec`; :class:`FieldElement` is the
boxed, user-facing form.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadCharacteristic, DivisionByZero, MixedFields

MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldKind(enum.Enum):
    RATIONALS = "QQ"
    PRIME = "GF"


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    characteristic: int

    def __post_init__(self):
        if self.kind is FieldKind.RATIONALS:
            if self.characteristic != 0:
                raise BadCharacteristic("the rationals have characteristic 0")
        else:
            p = self.characteristic
            if not (is_prime(p) and p < MAX_CHARACTERISTIC):
                raise BadCharacteristic(f"{p} is not a prime below 2^31")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_characteristic(cls, char: int) -> FieldSpec:
        return cls.rationals() if char == 0 else cls.prime(char)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``qq`` / ``QQ`` / ``gf<p>`` / a bare characteristic."""
        t = text.strip().lower()
        if t in ("qq", "q", "0"):
            return cls.rationals()
        if t.startswith("gf"):
            t = t[2:].lstrip("(").rstrip(")")
        try:
            return cls.from_characteristic(int(t))
        except ValueError:
            raise BadCharacteristic(f"cannot parse field {text!r}") from None

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.PRIME

    @property
    def size(self):
        """Number of elements, ``None`` for an infinite field."""
        return self.characteristic if self.is_prime_field else None

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    # -- raw arithmetic ------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def convert(self, x):
        """Map an int or Fraction into this field."""
        p = self.characteristic
        if p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        return Fraction(x)

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a, b):
        p = self.characteristic
        return a * b % p if p else a * b

    def neg(self, a):
        p = self.characteristic
        return -a % p if p else -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_signed(self, a):
        """Symmetric representative in (-p/2, p/2] for display."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a


def default_field() -> FieldSpec:
    """The working field, overridable via ``BETTIKIT_FIELD``."""
    return FieldSpec.parse(os.environ.get("BETTIKIT_FIELD", "gf32003"))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.spec.convert(self.value))

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return FieldElement(self.spec, other)
        if other.spec != self.spec:
            raise MixedFields(f"{self.spec} vs {other.spec}")
        return other

    def __add__(self, other):
        return arith(self, self._check(other), "add")

    def __sub__(self, other):
        return arith(self, self._check(other), "sub")

    def __mul__(self, other):
        return arith(self, self._check(other), "mul")

    def __truediv__(self, other):
        return arith(self, self._check(other), "div")

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __repr__(self):
        return f"{self.value}∈{self.spec}"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.spec != b.spec:
        raise MixedFields(f"{a.spec} vs {b.spec}")
    spec = a.spec
    if op == "add":
        v = spec.add(a.value, b.value)
    elif op == "sub":
        v = spec.sub(a.value, b.value)
    elif op == "mul":
        v = spec.mul(a.value, b.value)
    elif op == "div":
        if not b.value:
            raise DivisionByZero("division by zero")
        v = spec.div(a.value, b.value)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return FieldElement(spec, v)


def sqrt_minus_one(spec: FieldSpec):
    """Smallest square root of -1 in GF(p), or None when p % 4 != 1."""
    if not spec.is_prime_field:
        raise ValueError("sqrt_minus_one needs a prime field")
    p = spec.characteristic
    if p % 4 != 1:
        return None
    # a^((p-1)/4) for a quadratic non-residue a squares to -1
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            r = pow(a, (p - 1) // 4, p)
            return FieldElement(spec, min(r, p - r))
    raise AssertionError("unreachable")
