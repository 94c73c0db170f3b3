"""Buchberger's algorithm and the ideal operations built on it.

Internally polynomials are ``{monomial: raw coefficient}`` dicts and orders
are anything with a ``key(monomial)`` method.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import (
    DegreeCapExceeded,
    FieldTooSmall,
    MixedRings,
    NotContained,
    NotRegularSequence,
    UnitIdeal,
    ZeroDivisor,
)
from .field import FieldSpec
from .ring import (
    DEGREVLEX,
    BlockOrder,
    Ideal,
    Polynomial,
    RingDescriptor,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    substitute,
)

DEFAULT_DEGREE_CAP = 30


def degree_cap() -> int:
    return int(os.environ.get("BETTIKIT_DEGREE_CAP", DEFAULT_DEGREE_CAP))


# -- low-level reduction -------------------------------------------------------


def _lead(p: dict, key):
    return max(p, key=key)


def _sub_multiple(p: dict, g: dict, shift, c, f: FieldSpec):
    """p -= c * x^shift * g, in place."""
    zero = f.zero
    for m, v in g.items():
        mm = mono_mul(m, shift) if shift is not None else m
        nv = f.sub(p.get(mm, zero), f.mul(c, v))
        if nv:
            p[mm] = nv
        else:
            p.pop(mm, None)


def _reduce(p: dict, basis, f: FieldSpec, key, full=True) -> dict:
    """Normal form of p modulo ``basis`` = list of (lm, lc_inverse, terms)."""
    p = dict(p)
    rem = {}
    while p:
        lm = _lead(p, key)
        c = p[lm]
        for glm, ginv, g in basis:
            if mono_divides(glm, lm):
                _sub_multiple(p, g, mono_div(lm, glm), f.mul(c, ginv), f)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[lm] = c
            del p[lm]
    return rem


def _entry(p: dict, f: FieldSpec, key):
    lm = _lead(p, key)
    return (lm, f.inv(p[lm]), p)


# -- Buchberger ----------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: object
    elements: tuple
    reduced: bool = True
    _entries: list = field(default=None, repr=False, compare=False)

    @property
    def ring(self) -> RingDescriptor:
        return self.ideal.ring

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def entries(self):
        if self._entries is None:
            f = self.ring.field
            key = self.order.key
            object.__setattr__(
                self, "_entries", [_entry(g.term_dict, f, key) for g in self.elements]
            )
        return self._entries

    def is_unit(self) -> bool:
        return any(g.degree() == 0 for g in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _spoly(a, b, f: FieldSpec):
    lma, ia, pa = a
    lmb, ib, pb = b
    l = mono_lcm(lma, lmb)
    out = {}
    zero = f.zero
    sa, sb = mono_div(l, lma), mono_div(l, lmb)
    for m, v in pa.items():
        out[mono_mul(m, sa)] = f.mul(v, ia)
    for m, v in pb.items():
        mm = mono_mul(m, sb)
        nv = f.sub(out.get(mm, zero), f.mul(v, ib))
        if nv:
            out[mm] = nv
        else:
            out.pop(mm, None)
    return out


def _disjoint(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _groebner_dicts(polys, f: FieldSpec, order, cap=None):
    """Reduced Groebner basis of a list of term dicts."""
    key = order.key
    cap = degree_cap() if cap is None else cap
    polys = [dict(p) for p in polys if p]
    if not polys:
        return []
    # feed generators in increasing order, each reduced by the ones before
    polys.sort(key=lambda p: key(_lead(p, key)))
    entries = []  # every polynomial ever added
    active = []  # indices into entries currently in G
    pairs = []  # (lcm, i, j)

    def lcm_of(i, j):
        return mono_lcm(entries[i][0], entries[j][0])

    def update(h):
        # Gebauer-Moeller installation of a new basis element
        nonlocal active, pairs
        lh = entries[h][0]
        cand = [(lcm_of(h, g), g) for g in active]
        kept = []
        while cand:
            l1, g1 = cand.pop(0)
            if _disjoint(lh, entries[g1][0]) or not (
                any(mono_divides(l2, l1) for l2, _ in cand)
                or any(mono_divides(l2, l1) for l2, _ in kept)
            ):
                kept.append((l1, g1))
        new_pairs = [(l, g, h) for l, g in kept if not _disjoint(lh, entries[g][0])]
        survivors = [
            (l, i, j)
            for l, i, j in pairs
            if not (mono_divides(lh, l) and lcm_of(i, h) != l and lcm_of(j, h) != l)
        ]
        pairs = survivors + new_pairs
        active = [g for g in active if not mono_divides(lh, entries[g][0])] + [h]

    def add(p):
        entries.append(_entry(p, f, key))
        update(len(entries) - 1)

    for p in polys:
        r = _reduce(p, [entries[g] for g in active], f, key)
        if r:
            add(r)

    while pairs:
        best = min(range(len(pairs)), key=lambda t: (sum(pairs[t][0]), key(pairs[t][0])))
        l, i, j = pairs.pop(best)
        if sum(l) > cap:
            raise DegreeCapExceeded(f"S-pair of degree {sum(l)} exceeds cap {cap}")
        s = _spoly(entries[i], entries[j], f)
        if not s:
            continue
        r = _reduce(s, [entries[g] for g in active], f, key)
        if r:
            add(r)

    # minimal then reduced
    gens = [entries[g] for g in active]
    gens.sort(key=lambda e: key(e[0]))
    minimal = []
    for e in gens:
        if not any(mono_divides(o[0], e[0]) for o in minimal):
            minimal.append(e)
    out = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = _reduce(e[2], others, f, key)
        inv = f.inv(r[e[0]])
        out.append({m: f.mul(v, inv) for m, v in r.items()})
    return out


_GB_CACHE: dict = {}


def buchberger(I: Ideal, order=DEGREVLEX, cap=None) -> GroebnerBasis:
    """Reduced Groebner basis of I, with results memoized per (ideal, order)."""
    ckey = (I.ring, I.generators, order)
    hit = _GB_CACHE.get(ckey)
    if hit is not None:
        return hit
    f = I.ring.field
    dicts = _groebner_dicts([g.term_dict for g in I.generators], f, order, cap)
    elems = tuple(Polynomial(I.ring, d, _trusted=True) for d in dicts)
    gb = GroebnerBasis(I, order, elems, True)
    if len(_GB_CACHE) > 4096:
        _GB_CACHE.clear()
    _GB_CACHE[ckey] = gb
    return gb


def groebner_polys(polys, order=DEGREVLEX, cap=None) -> list:
    """Reduced Groebner basis of arbitrary (possibly inhomogeneous) polynomials."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    ring = polys[0].ring
    dicts = _groebner_dicts([p.term_dict for p in polys], ring.field, order, cap)
    return [Polynomial(ring, d, _trusted=True) for d in dicts]


def s_polynomial(p: Polynomial, q: Polynomial, order=DEGREVLEX) -> Polynomial:
    f = p.ring.field
    s = _spoly(_entry(p.term_dict, f, order.key), _entry(q.term_dict, f, order.key), f)
    return Polynomial(p.ring, s, _trusted=True)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if p.ring != G.ring:
        raise MixedRings("polynomial and basis live in different rings")
    r = _reduce(p.term_dict, G.entries(), p.ring.field, G.order.key)
    return Polynomial(p.ring, r, _trusted=True)


def reduce_by(p: Polynomial, polys, order=DEGREVLEX) -> Polynomial:
    """Remainder of p on division by an arbitrary list of polynomials."""
    f = p.ring.field
    basis = [_entry(q.term_dict, f, order.key) for q in polys if q]
    return Polynomial(p.ring, _reduce(p.term_dict, basis, f, order.key), _trusted=True)


def is_groebner(polys, order=DEGREVLEX) -> bool:
    """Buchberger criterion: every S-pair reduces to zero."""
    polys = [p for p in polys if p]
    for a, b in combinations(polys, 2):
        if reduce_by(s_polynomial(a, b, order), polys, order):
            return False
    return True


def contains(I: Ideal, p: Polynomial, order=DEGREVLEX) -> bool:
    return normal_form(p, buchberger(I, order)).is_zero()


def initial_ideal(I: Ideal, order=DEGREVLEX) -> Ideal:
    gb = buchberger(I, order)
    return Ideal.from_monomials(I.ring, gb.leading_monomials())


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise MixedRings("ideals from different rings")
    gi, gj = buchberger(I), buchberger(J)
    return all(normal_form(p, gi).is_zero() for p in J.generators) and all(
        normal_form(p, gj).is_zero() for p in I.generators
    )


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True when J is a subset of I."""
    gi = buchberger(I)
    return all(normal_form(p, gi).is_zero() for p in J.generators)


# -- intersection and colon ----------------------------------------------------


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    if I.ring != J.ring:
        raise MixedRings("ideals from different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    name = "_t"
    while name in ring.var_names:
        name += "_"
    big = RingDescriptor((name,) + ring.var_names, ring.field)
    f = ring.field

    def lift(p, texp):
        return {(texp,) + m: c for m, c in p.term_dict.items()}

    polys = [lift(p, 1) for p in I.generators]
    for q in J.generators:
        d = lift(q, 0)
        for m, c in q.term_dict.items():
            d[(1,) + m] = f.neg(c)
        polys.append(d)
    order = BlockOrder(1)
    gb = _groebner_dicts(polys, f, order)
    gens = []
    for d in gb:
        if all(m[0] == 0 for m in d):
            gens.append(Polynomial(ring, {m[1:]: c for m, c in d.items()}, _trusted=True))
    gens.sort(key=lambda g: DEGREVLEX.key(g.leading_monomial()))
    return Ideal(ring, gens)


def divide_exact(p: Polynomial, g: Polynomial) -> Polynomial:
    f = p.ring.field
    key = DEGREVLEX.key
    glm, ginv, gt = _entry(g.term_dict, f, key)
    rest = dict(p.term_dict)
    quot = {}
    while rest:
        lm = _lead(rest, key)
        if not mono_divides(glm, lm):
            raise ArithmeticError(f"{g} does not divide {p}")
        q = mono_div(lm, glm)
        c = f.mul(rest[lm], ginv)
        quot[q] = c
        _sub_multiple(rest, gt, q, c, f)
    return Polynomial(p.ring, quot, _trusted=True)


def colon(I: Ideal, g: Polynomial) -> Ideal:
    """The ideal quotient I : g via I ∩ (g)."""
    if g.is_zero():
        raise ZeroDivisor("colon by the zero polynomial")
    if g.ring != I.ring:
        raise MixedRings("polynomial from a different ring")
    if not g.is_homogeneous():
        raise ValueError("colon needs a homogeneous element")
    meet = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [divide_exact(h, g) for h in meet.generators])


# -- dimension -----------------------------------------------------------------


def dimension(I: Ideal, order=DEGREVLEX):
    """(dim S/I, height I) from a maximal independent set of in(I)."""
    gb = buchberger(I, order)
    if gb.is_unit():
        raise UnitIdeal("the unit ideal has no dimension")
    n = I.ring.num_vars
    masks = []
    for m in gb.leading_monomials():
        mask = 0
        for k, e in enumerate(m):
            if e:
                mask |= 1 << k
        masks.append(mask)
    # keep minimal supports only
    masks = sorted(set(masks), key=lambda b: bin(b).count("1"))
    minimal = []
    for b in masks:
        if not any(a & b == a for a in minimal):
            minimal.append(b)
    for size in range(n, -1, -1):
        for W in combinations(range(n), size):
            w = sum(1 << k for k in W)
            if all(b & ~w for b in minimal):
                return size, n - size
    return 0, n


# -- coordinate changes --------------------------------------------------------


def _determinant(matrix, f: FieldSpec):
    a = [list(row) for row in matrix]
    n = len(a)
    det = f.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return f.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = f.neg(det)
        det = f.mul(det, a[c][c])
        inv = f.inv(a[c][c])
        for r in range(c + 1, n):
            if a[r][c]:
                t = f.mul(a[r][c], inv)
                a[r] = [f.sub(x, f.mul(t, y)) for x, y in zip(a[r], a[c])]
    return det


def _inverse(matrix, f: FieldSpec):
    n = len(matrix)
    a = [list(row) + [f.one if i == j else f.zero for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c])
        a[c], a[piv] = a[piv], a[c]
        inv = f.inv(a[c][c])
        a[c] = [f.mul(x, inv) for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                t = a[r][c]
                a[r] = [f.sub(x, f.mul(t, y)) for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


@dataclass(frozen=True)
class CoordinateChange:
    """x_k -> sum_l matrix[k][l] * x_l."""

    ring: RingDescriptor
    matrix: tuple
    seed: int = None

    def images(self) -> list:
        n = self.ring.num_vars
        out = []
        for row in self.matrix:
            out.append(
                Polynomial(self.ring, {tuple(int(l == k) for l in range(n)): c for k, c in enumerate(row)})
            )
        return out

    def apply(self, obj):
        imgs = self.images()
        if isinstance(obj, Polynomial):
            return substitute(obj, imgs)
        return Ideal(obj.ring, [substitute(g, imgs) for g in obj.generators])

    def inverse(self) -> CoordinateChange:
        return CoordinateChange(self.ring, _inverse(self.matrix, self.ring.field), self.seed)

    def determinant(self):
        return _determinant(self.matrix, self.ring.field)


def random_coordinate_change(ring: RingDescriptor, seed: int) -> CoordinateChange:
    f = ring.field
    n = ring.num_vars
    if f.size is not None and f.size < 2 * n * n:
        raise FieldTooSmall(f"{f} has fewer than 2N^2 = {2 * n * n} elements")
    rng = random.Random(seed)
    bound = f.characteristic - 1 if f.characteristic else 2 * n * n
    while True:
        if f.characteristic:
            rows = [[rng.randint(0, bound) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        matrix = tuple(tuple(f.convert(x) for x in row) for row in rows)
        if _determinant(matrix, f):
            return CoordinateChange(ring, matrix, seed)


# -- linkage -------------------------------------------------------------------


def _candidate_forms(ring: RingDescriptor, D: int, max_support: int):
    monos = monomials_of_degree(ring, D, DEGREVLEX)
    f = ring.field
    minus = f.neg(f.one)
    for size in range(1, min(max_support, len(monos)) + 1):
        for support in combinations(monos, size):
            for signs in product((f.one, minus), repeat=size - 1):
                terms = {support[0]: f.one}
                terms.update(zip(support[1:], signs))
                yield Polynomial(ring, terms, _trusted=True)


def linkage_witness(F: Ideal, target: Ideal, D: int, max_support: int = 3):
    """Search {0, ±1}-combinations of degree-D monomials for g with F : g = target.

    For D > 0 the target must strictly contain F. The search is incomplete by design: supports larger than ``max_support``
    are not tried. Returns None when nothing is found.
    """
    if F.ring != target.ring:
        raise MixedRings("ideals from different rings")
    if not ideal_contains(target, F):
        raise NotContained("F is not contained in the target ideal")
    if F.is_zero() or dimension(F)[1] != len(F.generators):
        raise NotRegularSequence("generators of F do not form a regular sequence")
    if D == 0:
        return F.ring.one() if ideal_equal(F, target) else None
    if ideal_equal(F, target):
        # every nonzerodivisor would do; that is not a linkage
        return None
    gf = buchberger(F)
    for g in _candidate_forms(F.ring, D, max_support):
        if normal_form(g, gf).is_zero():
            continue
        if not all(normal_form(t * g, gf).is_zero() for t in target.generators):
            continue
        if ideal_equal(colon(F, g), target):
            return g
    return None
