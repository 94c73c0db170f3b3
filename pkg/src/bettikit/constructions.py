"""Named ideals: Γ(h), the prime 𝔭(h), L(a, h), complete intersections,
Stanley-Reisner ideals of pure complexes, and a seeded corpus of the latter."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import DimensionMismatch, Infeasible, NoSqrtMinusOne, ParameterOutOfRange
from .field import FieldSpec, default_field, sqrt_minus_one
from .groebner import dimension, ideal_equal
from .hilbert import multiplicity
from .lpp import construct_L
from .ring import Ideal, RingDescriptor, substitute


class Kind(enum.Enum):
    GAMMA = "gamma"
    PRIME_CANDIDATE = "prime"
    LPP_L = "lpp"
    COMPLETE_INTERSECTION = "ci"
    STANLEY_REISNER = "sr"


@dataclass(frozen=True)
class NamedConstruction:
    kind: Kind
    params: dict
    ideal: Ideal


def _uv_ring(h, field, a="u", b="v"):
    names = tuple(f"{a}{k}" for k in range(1, h + 1)) + tuple(f"{b}{k}" for k in range(1, h + 1))
    return RingDescriptor(names, field or default_field())


def gamma(h: int, field: FieldSpec | None = None) -> NamedConstruction:
    """(u_1..u_h)(v_1..v_h): two disjoint codimension-h linear spaces."""
    if h < 1:
        raise ParameterOutOfRange("h must be at least 1")
    ring = _uv_ring(h, field)
    x = ring.gens()
    gens = [x[j] * x[h + k] for j in range(h) for k in range(h)]
    return NamedConstruction(Kind.GAMMA, {"h": h}, Ideal(ring, gens))


def prime_candidate(h: int, field: FieldSpec | None = None) -> NamedConstruction:
    """(y_j z_k - y_k z_j, j < k) + (y_j y_k + z_j z_k, j <= k), h^2 quadrics."""
    if h < 1:
        raise ParameterOutOfRange("h must be at least 1")
    ring = _uv_ring(h, field, "y", "z")
    x = ring.gens()
    y, z = x[:h], x[h:]
    skew = [y[j] * z[k] - y[k] * z[j] for j in range(h) for k in range(j + 1, h)]
    sym = [y[j] * y[k] + z[j] * z[k] for j in range(h) for k in range(j, h)]
    return NamedConstruction(Kind.PRIME_CANDIDATE, {"h": h}, Ideal(ring, skew + sym))


def lpp_L(a: int, h: int, n: int | None = None, field: FieldSpec | None = None) -> NamedConstruction:
    L = construct_L(a, h, n, field)
    return NamedConstruction(Kind.LPP_L, {"a": a, "h": h, "n": L.ring.num_vars}, L.combined)


def complete_intersection(degrees, n: int | None = None, field: FieldSpec | None = None) -> NamedConstruction:
    """(x_1^{d_1}, ..., x_h^{d_h}) in n >= h variables."""
    degrees = list(degrees)
    n = len(degrees) if n is None else n
    if not degrees or any(d < 1 for d in degrees) or n < len(degrees):
        raise ParameterOutOfRange("need positive degrees and n >= number of degrees")
    ring = RingDescriptor.standard(n, field)
    x = ring.gens()
    gens = [x[k] ** d for k, d in enumerate(degrees)]
    return NamedConstruction(Kind.COMPLETE_INTERSECTION, {"degrees": degrees, "n": n}, Ideal(ring, gens))


def coordinate_images(h: int, field: FieldSpec):
    """Images of y_j, z_j under y_j + ιz_j -> u_j, y_j - ιz_j -> v_j."""
    iota = sqrt_minus_one(field)
    if iota is None:
        raise NoSqrtMinusOne(f"-1 is not a square in {field}")
    target = _uv_ring(h, field)
    x = target.gens()
    half = field.inv(field.convert(2))
    half_iota = field.inv(field.mul(field.convert(2), iota.value))
    ys = [(x[j] + x[h + j]).scale(half) for j in range(h)]
    zs = [(x[j] - x[h + j]).scale(half_iota) for j in range(h)]
    return ys + zs, target


@dataclass
class PrimeRouteReport:
    h: int
    p: int
    image_is_gamma: bool
    height: int
    multiplicity: int

    @property
    def passed(self) -> bool:
        return self.image_is_gamma and self.height == self.h and self.multiplicity == 2


def verify_prime_route(h: int, p: int = 13) -> PrimeRouteReport:
    """Over GF(p), p = 1 mod 4: the coordinate change carries 𝔭(h) onto Γ(h)."""
    if not 1 <= h <= 4:
        raise ParameterOutOfRange("verify_prime_route is limited to 1 <= h <= 4")
    fs = FieldSpec.prime(p)
    I = prime_candidate(h, fs).ideal
    images, target = coordinate_images(h, fs)
    moved = Ideal(target, [substitute(g, images, target) for g in I.generators])
    same = ideal_equal(moved, gamma(h, fs).ideal)
    return PrimeRouteReport(h, p, same, dimension(I)[1], multiplicity(I))


# -- simplicial complexes ------------------------------------------------------


@dataclass(frozen=True)
class PureComplex:
    """A pure simplicial complex on vertices 0..vertex_count-1, given by facets."""

    vertex_count: int
    facets: tuple = field(default=())

    def __post_init__(self):
        facets = tuple(sorted({tuple(sorted(f)) for f in self.facets}))
        object.__setattr__(self, "facets", facets)
        if len({len(f) for f in facets}) > 1:
            raise ValueError("facets of a pure complex must have equal size")
        for f in facets:
            if any(v < 0 or v >= self.vertex_count for v in f):
                raise ValueError(f"facet {f} uses a vertex outside 0..{self.vertex_count - 1}")

    @property
    def facet_size(self) -> int:
        return len(self.facets[0]) if self.facets else 0

    def is_face(self, s) -> bool:
        s = set(s)
        return any(s <= set(f) for f in self.facets)

    def minimal_nonfaces(self) -> list:
        out = []
        for k in range(1, self.facet_size + 2):
            for s in combinations(range(self.vertex_count), k):
                if self.is_face(s):
                    continue
                if all(self.is_face(s[:r] + s[r + 1 :]) for r in range(k)):
                    out.append(s)
        return out

    def minimal_prime_supports(self) -> list:
        """Vertex sets of the minimal primes (x_v : v not in F), one per facet."""
        return [tuple(v for v in range(self.vertex_count) if v not in f) for f in self.facets]


def stanley_reisner(c: PureComplex, ring: RingDescriptor | None = None) -> Ideal:
    ring = ring or RingDescriptor.standard(c.vertex_count)
    if ring.num_vars != c.vertex_count:
        raise DimensionMismatch(f"{c.vertex_count} vertices but {ring.num_vars} variables")
    monos = []
    for s in c.minimal_nonfaces():
        e = [0] * ring.num_vars
        for v in s:
            e[v] = 1
        monos.append(tuple(e))
    return Ideal.from_monomials(ring, monos)


def random_pure_complex(n: int, facet_dim: int, count: int, seed: int) -> PureComplex:
    size = facet_dim + 1
    if n < 1 or size < 1 or size > n or count < 1 or count > comb(n, size):
        raise Infeasible(f"cannot choose {count} facets of size {size} on {n} vertices")
    rng = random.Random(seed)
    facets = rng.sample(list(combinations(range(n), size)), count)
    return PureComplex(n, tuple(facets))


@dataclass(frozen=True)
class CorpusEntry:
    ideal_id: str
    complex: PureComplex
    ideal: Ideal


def corpus(count: int, seed: int, max_vars: int = 8, facet_dim: int | None = None,
           vars: int | None = None, field: FieldSpec | None = None) -> list:
    """Seeded Stanley-Reisner ideals of random pure complexes (radical and unmixed)."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = vars if vars is not None else rng.randint(3, max_vars)
        fd = facet_dim if facet_dim is not None else rng.randint(0, max(n - 2, 0))
        top = comb(n, fd + 1)
        c = random_pure_complex(n, fd, rng.randint(1, min(top, 8)), rng.randrange(2**32))
        ideal = stanley_reisner(c, RingDescriptor.standard(n, field))
        out.append(CorpusEntry(f"sr-{seed}-{k:03d}", c, ideal))
    return out
