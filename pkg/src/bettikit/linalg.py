"""Exact sparse rank computation.

Vectors are ``{index: value}`` dicts. Over GF(p) we eliminate with monic
pivots; over QQ vectors are scaled to integers and eliminated fraction-free,
dividing out the content after every step to keep entries small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .field import FieldSpec


def _rank_mod_p(vectors, p: int) -> int:
    pivots = {}
    for v in vectors:
        v = {k: x % p for k, x in v.items() if x % p}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {k: x * inv % p for k, x in v.items()}
                break
            c = v[lead]
            for k, x in piv.items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(pivots)


def _primitive(v: dict) -> dict:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        v = {k: x // g for k, x in v.items()}
    return v


def _integral(v: dict) -> dict:
    den = 1
    for x in v.values():
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return {k: int(x * den) for k, x in v.items() if x}


def _rank_rational(vectors) -> int:
    pivots = {}
    for v in vectors:
        v = _primitive(_integral(v))
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = v
                break
            a, b = piv[lead], v[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: a * x for k, x in v.items()}
            for k, x in piv.items():
                nv = out.get(k, 0) - b * x
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            v = _primitive(out)
    return len(pivots)


def rank(vectors, field: FieldSpec) -> int:
    """Rank of the span of sparse vectors over ``field``."""
    if field.characteristic:
        return _rank_mod_p(vectors, field.characteristic)
    return _rank_rational(vectors)


def compose(outer, inner, field: FieldSpec):
    """Column lists: (outer ∘ inner)[c] = sum_k inner[c][k] * outer[k]."""
    out = []
    for col in inner:
        acc = {}
        for k, x in col.items():
            for r, y in outer[k].items():
                acc[r] = field.add(acc.get(r, field.zero), field.mul(x, y))
        out.append({r: v for r, v in acc.items() if v})
    return out
