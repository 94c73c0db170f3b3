"""Standard-graded polynomial rings, monomial orders, sparse polynomials, ideals.

Monomials are plain exponent tuples; ``x_1`` (index 0) is the greatest
variable in every order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import MixedRings
from .field import FieldSpec, default_field

Monomial = tuple
EXPONENT_LIMIT = 2**16 - 1


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_support(m: Monomial) -> tuple:
    return tuple(k for k, e in enumerate(m) if e)


def unit_vector(n: int, k: int, power: int = 1) -> Monomial:
    e = [0] * n
    e[k] = power
    return tuple(e)


def _degrevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


class MonomialOrder(enum.Enum):
    LEX = "lex"
    DEGREVLEX = "degrevlex"

    def key(self, m: Monomial):
        if self is MonomialOrder.LEX:
            return m
        return _degrevlex_key(m)


@dataclass(frozen=True)
class BlockOrder:
    """Degrevlex on the first ``split`` variables, then degrevlex on the rest.

    An elimination order for the first block; used internally by ``intersect``.
    """

    split: int

    def key(self, m: Monomial):
        return (_degrevlex_key(m[: self.split]), _degrevlex_key(m[self.split :]))


LEX = MonomialOrder.LEX
DEGREVLEX = MonomialOrder.DEGREVLEX


def compare(m1: Monomial, m2: Monomial, order=DEGREVLEX) -> int:
    """Three-way comparison: 1 if m1 > m2, -1 if m1 < m2, 0 if equal."""
    if len(m1) != len(m2):
        raise MixedRings("monomials from rings of different size")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class RingDescriptor:
    var_names: tuple
    field: FieldSpec = field(default_factory=default_field)

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def standard(cls, n: int, field: FieldSpec | None = None, prefix: str = "x"):
        return cls(tuple(f"{prefix}{k + 1}" for k in range(n)), field or default_field())

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    def with_field(self, field: FieldSpec) -> RingDescriptor:
        return RingDescriptor(self.var_names, field)

    def gens(self) -> list:
        return [self.var(k) for k in range(self.num_vars)]

    def var(self, k: int) -> Polynomial:
        return Polynomial(self, {unit_vector(self.num_vars, k): self.field.one})

    def index(self, name: str) -> int:
        return self.var_names.index(name)

    def monomial(self, m: Monomial, coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(m): coeff})

    def one(self) -> Polynomial:
        return self.monomial((0,) * self.num_vars)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.var_names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def monomials_of_degree(ring, d: int, order=LEX) -> list:
    """All monomials of degree d, descending in ``order``."""
    n = ring if isinstance(ring, int) else ring.num_vars
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    if order is not LEX:
        out.sort(key=order.key, reverse=True)
    return out


class Polynomial:
    """Sparse polynomial: a mapping monomial -> nonzero raw field value."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: RingDescriptor, terms=None, *, _trusted=False):
        self.ring = ring
        if _trusted:
            self._terms = terms
            return
        f = ring.field
        n = ring.num_vars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise MixedRings(f"monomial {m} has wrong length for {n} variables")
            c = f.convert(c)
            if c:
                clean[m] = c
        self._terms = clean

    # -- inspection ----------------------------------------------------------

    @property
    def term_dict(self) -> dict:
        return self._terms

    def terms(self, order=DEGREVLEX) -> list:
        """(monomial, coefficient) pairs, strictly descending in ``order``."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monomials(self, order=DEGREVLEX) -> list:
        return [m for m, _ in self.terms(order)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_monomial(self, order=DEGREVLEX) -> Monomial:
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order=DEGREVLEX):
        return self._terms[self.leading_monomial(order)]

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), self.ring.field.zero)

    def monic(self, order=DEGREVLEX) -> Polynomial:
        return self.scale(self.ring.field.inv(self.leading_coefficient(order)))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise MixedRings("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.monomial((0,) * self.ring.num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_arith(self, other, "sub")

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self._terms.items()}, _trusted=True)

    def __pow__(self, k: int):
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Polynomial:
        f = self.ring.field
        c = f.convert(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self._terms.items()}, _trusted=True)

    def mul_term(self, m: Monomial, c) -> Polynomial:
        f = self.ring.field
        return Polynomial(
            self.ring, {mono_mul(k, m): f.mul(v, c) for k, v in self._terms.items()}, _trusted=True
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self._check(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if p.ring != q.ring:
        raise MixedRings("polynomials from different rings")
    f = p.ring.field
    if op in ("add", "sub"):
        out = dict(p._terms)
        combine = f.add if op == "add" else f.sub
        zero = f.zero
        for m, c in q._terms.items():
            v = combine(out.get(m, zero), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(p.ring, out, _trusted=True)
    if op == "mul":
        out = {}
        zero = f.zero
        for m1, c1 in p._terms.items():
            for m2, c2 in q._terms.items():
                m = mono_mul(m1, m2)
                v = f.add(out.get(m, zero), f.mul(c1, c2))
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        for m in out:
            if max(m, default=0) > EXPONENT_LIMIT:
                raise OverflowError(f"exponent overflow in {m}")
        return Polynomial(p.ring, out, _trusted=True)
    raise ValueError(f"unknown operation {op!r}")


def format_coefficient(field: FieldSpec, c) -> str:
    c = field.to_signed(c)
    return str(c)


def format_polynomial(p: Polynomial, order=DEGREVLEX) -> str:
    if p.is_zero():
        return "0"
    f = p.ring.field
    pieces = []
    for m, c in p.terms(order):
        c = f.to_signed(c)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = p.ring.format_monomial(m)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def substitute(p: Polynomial, images: Sequence[Polynomial], target: RingDescriptor | None = None):
    """Replace variable k of ``p`` by ``images[k]`` (a ring homomorphism)."""
    if len(images) != p.ring.num_vars:
        raise MixedRings("need one image per variable")
    target = target or images[0].ring
    powers = [{0: target.one()} for _ in images]

    def power(k, e):
        cache = powers[k]
        if e not in cache:
            cache[e] = power(k, e - 1) * images[k]
        return cache[e]

    out = target.zero()
    for m, c in p.term_dict.items():
        if target.field != p.ring.field:
            c = _lift(p.ring.field, c)
        term = target.monomial((0,) * target.num_vars, c)
        for k, e in enumerate(m):
            if e:
                term = term * power(k, e)
        out = out + term
    return out


class Ideal:
    """A homogeneous ideal given by generators; zero generators are dropped."""

    def __init__(self, ring: RingDescriptor, generators: Iterable[Polynomial] = (), *, homogeneous=True):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise MixedRings("generator from a different ring")
            if g.is_zero():
                continue
            if homogeneous and not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    @classmethod
    def from_monomials(cls, ring: RingDescriptor, monos: Iterable[Monomial]) -> Ideal:
        return cls(ring, [ring.monomial(m) for m in monos])

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def max_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=0)

    def with_field(self, field: FieldSpec) -> Ideal:
        """Reinterpret integer/rational coefficients over another field."""
        ring = self.ring.with_field(field)
        old = self.ring.field
        gens = []
        for g in self.generators:
            terms = {m: _lift(old, c) for m, c in g.term_dict.items()}
            gens.append(Polynomial(ring, terms))
        return Ideal(ring, gens)

    def __add__(self, other: Ideal) -> Ideal:
        if other.ring != self.ring:
            raise MixedRings("ideals from different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"


def _lift(field: FieldSpec, c):
    return field.to_signed(c) if field.characteristic else c
