"""Upper bounds on the quadratic strand and checks of computed data against them."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .betti import quadratic_strand
from .combinat import binom
from .constructions import PrimeRouteReport, prime_candidate, verify_prime_route
from .errors import ParameterOutOfRange
from .field import FieldSpec
from .groebner import dimension
from .hilbert import hilbert_function
from .ring import Ideal


def strand_bound(h: int, i: int) -> int:
    """C(2h, i+2) - 2 C(h, i+2)."""
    if h < 1 or i < 0:
        raise ParameterOutOfRange("need h >= 1 and i >= 0")
    return binom(2 * h, i + 2) - 2 * binom(h, i + 2)


def remark_bound(h: int, t: int, i: int):
    """(C(2h-t, i+1) + C(t, i+1) - 2C(h, i+1), C(2h, i+1) - 2C(h, i+1)).

    Bounds beta_{i,i+1}(S/I) when I contains t independent linear forms; the
    first value is the sharper one, the second its relaxation.
    """
    if not 0 <= t <= h or i < 0:
        raise ParameterOutOfRange("need 0 <= t <= h and i >= 0")
    sharp = binom(2 * h - t, i + 1) + binom(t, i + 1) - 2 * binom(h, i + 1)
    return sharp, binom(2 * h, i + 1) - 2 * binom(h, i + 1)


def vandermonde_check(m: int, t: int, k: int) -> bool:
    if min(m, t, k) < 0 or max(m, t, k) > 64:
        raise ParameterOutOfRange("inputs must lie in 0..64")
    return sum(binom(m, j) * binom(t, k - j) for j in range(k + 1)) == binom(m + t, k)


@dataclass
class BoundReport:
    ideal_id: str
    height: int
    strand: list
    bounds: list
    satisfied: bool
    tight_indices: list
    attested: bool = False
    linear_forms: int = 0

    def to_json(self) -> dict:
        return asdict(self)


def linear_form_count(I: Ideal) -> int:
    """dim_K I_1."""
    return I.ring.num_vars - hilbert_function(I, 1)


def check_theorem(I: Ideal, assume_radical_unmixed: bool = False, ideal_id: str = "ideal") -> BoundReport:
    """Compare beta_{i,i+2}(I), i = 0..N-1, with the height-h bound.

    Radicality and unmixedness are not checked; ``assume_radical_unmixed``
    records the caller's attestation. Ideals containing t linear forms are
    compared against the sharper linear-form-adjusted bound.
    """
    _, h = dimension(I)
    t = linear_form_count(I)
    n = I.ring.num_vars
    strand = quadratic_strand(I, length=n)
    if t:
        bounds = [remark_bound(h, t, i + 1)[0] for i in range(n)]
    else:
        bounds = [binom(2 * h, i + 2) - 2 * binom(h, i + 2) for i in range(n)]
    tight = [i for i, (s, b) in enumerate(zip(strand, bounds)) if s == b]
    ok = all(s <= b for s, b in zip(strand, bounds))
    return BoundReport(ideal_id, h, strand, bounds, ok, tight, assume_radical_unmixed, t)


@dataclass
class SharpnessCertificate:
    h: int
    strand: list
    bounds: list
    prime_route: PrimeRouteReport = field(default=None)

    @property
    def passed(self) -> bool:
        return self.strand == self.bounds and (self.prime_route is None or self.prime_route.passed)


def sharpness_certificate(h: int, p: int = 13) -> SharpnessCertificate:
    """Strand of 𝔭(h) over QQ equals the bound at every index, plus the GF(p) route."""
    if not 1 <= h <= 3:
        raise ParameterOutOfRange("sharpness certificate is limited to 1 <= h <= 3")
    I = prime_candidate(h, FieldSpec.rationals()).ideal
    strand = quadratic_strand(I)
    bounds = [strand_bound(h, i) for i in range(len(strand))]
    return SharpnessCertificate(h, strand, bounds, verify_prime_route(h, p))
