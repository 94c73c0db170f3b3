"""Hilbert functions and series of S/I from standard monomials of in(I).

The numerator q(z) of HS_{S/I} = q(z) / (1 - z)^N is recovered by applying the
difference operator (1 - z) to the Hilbert function N times, so it never
touches the Betti engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InsufficientDegree, UnitIdeal
from .groebner import buchberger
from .ring import DEGREVLEX, Ideal, RingDescriptor, mono_divides

STABLE_RUN = 3


def _leads(I: Ideal) -> list:
    return buchberger(I, DEGREVLEX).leading_monomials()


def standard_monomial_counts(leads, n: int, d_max: int) -> list:
    """[#degree-d monomials outside the monomial ideal (leads)] for d = 0..d_max."""
    if any(sum(g) == 0 for g in leads):
        return [0] * (d_max + 1)
    counts = [1]
    layer = {(0,) * n}
    for _ in range(d_max):
        nxt = set()
        for m in layer:
            for k in range(n):
                mm = m[:k] + (m[k] + 1,) + m[k + 1 :]
                if mm in nxt:
                    continue
                if not any(mono_divides(g, mm) for g in leads):
                    nxt.add(mm)
        layer = nxt
        counts.append(len(layer))
    return counts


def hilbert_function(I: Ideal, d: int) -> int:
    if d < 0:
        return 0
    return standard_monomial_counts(_leads(I), I.ring.num_vars, d)[d]


def hilbert_values(I: Ideal, d_max: int) -> list:
    return standard_monomial_counts(_leads(I), I.ring.num_vars, d_max)


def _default_dmax(I: Ideal) -> int:
    leads = _leads(I)
    gb_deg = max((sum(m) for m in leads), default=0)
    top = [max(col) for col in zip(*leads)] if leads else []
    lcm_deg = sum(top)
    deg = max(I.max_degree(), gb_deg)
    return max(2 * deg + I.ring.num_vars, lcm_deg + STABLE_RUN)


def hilbert_numerator(I: Ideal, d_max: int | None = None) -> list:
    """Integer coefficients (low degree first) of q(z) = HS_{S/I}(z) (1 - z)^N."""
    n = I.ring.num_vars
    if d_max is None:
        d_max = _default_dmax(I)
    hf = hilbert_values(I, d_max)
    q = [sum((-1) ** k * comb(n, k) * hf[d - k] for k in range(min(n, d) + 1)) for d in range(d_max + 1)]
    if d_max + 1 < STABLE_RUN or any(q[-STABLE_RUN:]):
        raise InsufficientDegree(f"numerator has not stabilized by degree {d_max}")
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


def poly_eval(q, z) -> int:
    return sum(c * z**k for k, c in enumerate(q))


def divide_by_one_minus_z(q: list) -> list:
    """q / (1 - z), assuming q(1) == 0."""
    out = []
    acc = 0
    for c in q[:-1]:
        acc += c
        out.append(acc)
    if acc + q[-1] != 0:
        raise ArithmeticError("(1 - z) does not divide the polynomial")
    return out or [0]


def reduced_numerator(q: list):
    """(p, k): q = p * (1 - z)^k with p(1) != 0."""
    k = 0
    while any(q) and poly_eval(q, 1) == 0:
        q = divide_by_one_minus_z(q)
        k += 1
    return q, k


def expand_series(q: list, n: int, d_max: int) -> list:
    """Coefficients of q(z) / (1 - z)^n up to z^d_max."""
    if n == 0:
        return [q[d] if d < len(q) else 0 for d in range(d_max + 1)]
    return [sum(c * comb(n - 1 + d - k, n - 1) for k, c in enumerate(q[: d + 1])) for d in range(d_max + 1)]


@dataclass
class HilbertData:
    ring: RingDescriptor
    hf_values: list
    numerator: list
    dim: int
    multiplicity: int


def hilbert_data(I: Ideal, d_max: int | None = None) -> HilbertData:
    n = I.ring.num_vars
    q = hilbert_numerator(I, d_max)
    if d_max is None:
        d_max = _default_dmax(I)
    p, k = reduced_numerator(q)
    if not any(p):
        raise UnitIdeal("the unit ideal has zero Hilbert series")
    return HilbertData(I.ring, hilbert_values(I, d_max), q, n - k, poly_eval(p, 1))


def multiplicity(I: Ideal) -> int:
    """e(S/I) = p(1) where HS_{S/I} = p(z) / (1 - z)^dim in lowest terms."""
    q = hilbert_numerator(I)
    p, _ = reduced_numerator(q)
    if not any(p):
        raise UnitIdeal("the unit ideal has no multiplicity")
    return poly_eval(p, 1)


def macaulay_representation(a: int, d: int) -> list:
    """Greedy d-binomial expansion a = C(k_d, d) + C(k_{d-1}, d-1) + ..."""
    out = []
    while a > 0 and d > 0:
        k = d
        while comb(k + 1, d) <= a:
            k += 1
        out.append((k, d))
        a -= comb(k, d)
        d -= 1
    return out


def macaulay_bound(a: int, d: int) -> int:
    """Largest possible HF(d + 1) given HF(d) = a, for d >= 1."""
    return sum(comb(k + 1, i + 1) for k, i in macaulay_representation(a, d))
