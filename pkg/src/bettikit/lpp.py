"""Lex-plus-powers ideals and the combinatorial Betti number formula for them.

For a power vector a = (a_1 <= ... <= a_N) with entries in Z>=2 ∪ {inf},
J(a) = (x_i^{a_i} : a_i finite). An a-LPP ideal is J(a) + L with L lex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .betti import ci_betti, minimal_monomials
from .combinat import binom
from .errors import InJA, NotMonomial, ParameterOutOfRange
from .field import FieldSpec
from .ring import LEX, Ideal, RingDescriptor, mono_divides, monomials_of_degree

INF = math.inf


@dataclass(frozen=True)
class PowerVector:
    bounds: tuple

    def __post_init__(self):
        b = tuple(INF if x in (None, INF, "inf") else int(x) for x in self.bounds)
        object.__setattr__(self, "bounds", b)
        if any(x < 2 for x in b):
            raise ParameterOutOfRange("power bounds must be at least 2")
        if any(x > y for x, y in zip(b, b[1:])):
            raise ParameterOutOfRange("power bounds must be non-decreasing")

    @classmethod
    def parse(cls, text: str) -> PowerVector:
        return cls(tuple(INF if t.strip().lower() in ("inf", "∞") else int(t) for t in text.split(",")))

    def __len__(self):
        return len(self.bounds)

    def finite_degrees(self) -> list:
        return [x for x in self.bounds if x != INF]

    def pure_powers(self) -> list:
        n = len(self.bounds)
        out = []
        for k, x in enumerate(self.bounds):
            if x != INF:
                e = [0] * n
                e[k] = x
                out.append(tuple(e))
        return out

    def in_J(self, m) -> bool:
        return any(e >= x for e, x in zip(m, self.bounds))

    def __str__(self):
        return ",".join("inf" if x == INF else str(x) for x in self.bounds)


@dataclass(frozen=True)
class LppIdeal:
    ring: RingDescriptor
    powers: PowerVector
    lex_part: tuple
    combined: Ideal


def lpp_ideal(ring: RingDescriptor, powers: PowerVector, lex_monomials) -> LppIdeal:
    lex = tuple(m for m in minimal_monomials([tuple(m) for m in lex_monomials]) if not powers.in_J(m))
    combined = Ideal.from_monomials(ring, minimal_monomials(powers.pure_powers() + list(lex)))
    return LppIdeal(ring, powers, lex, combined)


def _monomial_gens(I: Ideal) -> list:
    if not I.is_monomial():
        raise NotMonomial("LPP tests need a monomial ideal")
    return minimal_monomials([g.leading_monomial() for g in I.generators])


def is_lpp(I: Ideal, a: PowerVector) -> bool:
    """Whether I = J(a) + L for some lex ideal L."""
    gens = _monomial_gens(I)
    if len(a) != I.ring.num_vars:
        raise ParameterOutOfRange("power vector length differs from the number of variables")

    def member(m):
        return any(mono_divides(g, m) for g in gens)

    if not all(member(p) for p in a.pure_powers()):
        return False
    for m in gens:
        if a.in_J(m):
            continue
        # every monomial lex-above m outside J(a) must be in I
        for w in monomials_of_degree(I.ring, sum(m), LEX):
            if w == m:
                break
            if not a.in_J(w) and not member(w):
                return False
    return True


def _variables_descending(v):
    """[(index, exponent)] with 1-based indices i_1 > i_2 > ... > i_t."""
    return [(k + 1, v[k]) for k in range(len(v) - 1, -1, -1) if v[k]]


def murai_k(v, a: PowerVector) -> int:
    if a.in_J(v):
        raise InJA(f"{v} lies in J(a)")
    parts = _variables_descending(v)
    for ell, (idx, b) in enumerate(parts, start=1):
        if b < a.bounds[idx - 1] - 1:
            return ell
    return len(parts) + 1


def murai_A(v, i: int, a: PowerVector) -> int:
    k = murai_k(v, a)
    idx = [p[0] for p in _variables_descending(v)] + [0]
    return sum(binom(idx[ell - 1] - 1, i - ell) for ell in range(1, k + 1))


def _pure_power_betti(a: PowerVector, i: int, j: int) -> int:
    degrees = a.finite_degrees()
    if not degrees:
        return int(i == 0 and j == 0)
    return ci_betti(degrees, i, j)


def lpp_monomials_of_degree(L: LppIdeal, d: int) -> list:
    """Degree-d monomials of L outside J(a)."""
    if d < 0:
        return []
    gens = L.lex_part
    return [
        m
        for m in monomials_of_degree(L.ring, d, LEX)
        if not L.powers.in_J(m) and any(mono_divides(g, m) for g in gens)
    ]


def murai_betti(L: LppIdeal, i: int, j: int) -> int:
    """beta_{i,i+j}(S/L) from the monomials of L outside J(a)."""
    a = L.powers
    n = L.ring.num_vars
    first = sum(murai_A(u, i, a) for u in lpp_monomials_of_degree(L, j + 1))
    second = sum(binom(n, i) - murai_A(u, i + 1, a) for u in lpp_monomials_of_degree(L, j))
    return first - second + _pure_power_betti(a, i, i + j)


def construct_L(a: int, h: int, N: int | None = None, field: FieldSpec | None = None) -> LppIdeal:
    """J + (u) + (v_1..v_h), u = (x_1..x_h)^{a-1}, v_j = (x_1..x_{h-1})^{a-1} x_h^{a-2} x_{h+1} x_{h+j}."""
    if N is None:
        N = 2 * h
    if a <= 2 or h <= 1 or N < 2 * h:
        raise ParameterOutOfRange(f"need a > 2, h > 1, N >= 2h; got a={a}, h={h}, N={N}")
    ring = RingDescriptor.standard(N, field)
    powers = PowerVector(tuple([a] * h + [INF] * (N - h)))
    u = tuple([a - 1] * h + [0] * (N - h))
    vs = []
    for j in range(1, h + 1):
        e = [a - 1] * (h - 1) + [a - 2] + [0] * (N - h)
        e[h] += 1
        e[h + j - 1] += 1
        vs.append(tuple(e))
    return lpp_ideal(ring, powers, [u] + vs)


def prop_closed_form(a: int, h: int, i: int, j: int) -> int:
    """beta_{i,i+j}(S/L(a,h)) for j <= D = (a-1)h, by the case split."""
    if a <= 2 or h <= 1:
        raise ParameterOutOfRange(f"need a > 2 and h > 1; got a={a}, h={h}")
    D = (a - 1) * h
    if j < D - 1:
        return ci_betti([a] * h, i, i + j)
    if j == D - 1:
        return 0 if i > h else binom(h, i - 1)
    if j == D:
        return binom(2 * h, i) - binom(h, i)
    raise ParameterOutOfRange(f"closed form only covers j <= D = {D}")
