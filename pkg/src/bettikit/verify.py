"""The bundled verification suite: one function per acceptance criterion.

Each check returns a CriterionResult; ``run_suite`` runs them in order.
The ``fast`` level shrinks parameter ranges and case counts for smoke runs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .betti import full_betti_table, koszul_complex, lemma_aci_check, quadratic_strand, betti_number
from .bounds import check_theorem, remark_bound, strand_bound, vandermonde_check
from .constructions import complete_intersection, corpus, gamma, lpp_L, prime_candidate, verify_prime_route
from .field import FieldSpec
from .groebner import buchberger, colon, dimension, ideal_contains, is_groebner, linkage_witness
from .hilbert import hilbert_numerator
from .ideal_file import format_ideal, parse_ideal
from .lpp import construct_L, murai_betti, prop_closed_form
from .ring import DEGREVLEX, LEX, Ideal, Polynomial, RingDescriptor, monomials_of_degree

GF = FieldSpec.prime(32003)
QQ = FieldSpec.rationals()


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number}: {self.name} ({self.seconds:.1f}s)"
        return text + (f" : {self.detail}" if self.detail else "")


def _timed(number, name, fn, *args):
    start = time.perf_counter()
    passed, detail, failures = fn(*args)
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start, failures)


# -- 1. Γ-sharpness ---------------------------------------------------------


def gamma_sharpness(hs=(1, 2, 3, 4), fields=(GF, QQ)):
    bad = []
    for fs in fields:
        for h in hs:
            got = quadratic_strand(gamma(h, fs).ideal)
            want = [strand_bound(h, i) for i in range(2 * h - 1)]
            if got != want:
                bad.append((str(fs), h, got, want))
    return not bad, f"h in {list(hs)}", bad


# -- 2. prime sharpness --------------------------------------------------------


def prime_sharpness(hs=(1, 2, 3), p=13):
    bad = []
    for h in hs:
        got = quadratic_strand(prime_candidate(h, QQ).ideal)
        want = [strand_bound(h, i) for i in range(2 * h - 1)]
        if got != want:
            bad.append(("strand", h, got, want))
        route = verify_prime_route(h, p)
        if not route.passed:
            bad.append(("route", h, route))
    return not bad, f"h in {list(hs)}, p = {p}", bad


# -- 3. LPP Betti formula ------------------------------------------------------


def murai_oracle(cases=((3, 2), (4, 2), (3, 3))):
    bad = []
    for a, h in cases:
        L = construct_L(a, h)
        n = L.ring.num_vars
        D = (a - 1) * h
        for j in range(D + 2):
            for i in range(n + 1):
                m = murai_betti(L, i, j)
                k = betti_number(L.combined, i, i + j)
                if m != k:
                    bad.append(("murai", a, h, i, j, m, k))
                if j <= D and prop_closed_form(a, h, i, j) != k:
                    bad.append(("closed form", a, h, i, j, prop_closed_form(a, h, i, j), k))
    return not bad, f"(a, h) in {list(cases)}", bad


# -- 4. the linkage lemma ------------------------------------------------------


def linked_instance(h=2):
    """F = (u_1 v_1, ..., u_h v_h) inside Γ(h) and a brute-forced witness g."""
    G = gamma(h, QQ).ideal
    x = G.ring.gens()
    F = Ideal(G.ring, [x[k] * x[h + k] for k in range(h)])
    D = h
    g = linkage_witness(F, G, D)
    return F, G, g


def lemma_linkage(h=2):
    F, _, g = linked_instance(h)
    if g is None:
        return False, "no witness found", []
    report = lemma_aci_check(F, g)
    fails = report.failures()
    detail = f"g = {g}"
    if fails:
        detail += f"; mismatched cells (i, j, lhs, rhs) = {[c[:4] for c in fails]}"
        detail += f"; agrees where CI Tor vanishes: {report.passed_where_ci_vanishes}"
    return report.passed, detail, fails


# -- 5. Hilbert consistency ----------------------------------------------------


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        for b, y in enumerate(q):
            out[a + b] += x * y
    return out


def gamma_numerator(h: int) -> list:
    """2(1-z)^h - (1-z)^{2h}, the numerator of 2/(1-z)^h - 1 over (1-z)^{2h}."""
    one_minus = [1, -1]
    ph = [1]
    for _ in range(h):
        ph = _poly_mul(ph, one_minus)
    p2h = _poly_mul(ph, ph)
    out = [0] * len(p2h)
    for k, c in enumerate(ph):
        out[k] += 2 * c
    for k, c in enumerate(p2h):
        out[k] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def named_constructions(full=True):
    out = [("gamma", h, gamma(h).ideal) for h in (1, 2, 3, 4 if full else 3)]
    out += [("prime", h, prime_candidate(h).ideal) for h in ((1, 2, 3) if full else (1, 2))]
    out += [("lpp", ah, lpp_L(*ah).ideal) for ah in ((3, 2), (4, 2), (3, 3))[: 3 if full else 1]]
    out += [("ci", d, complete_intersection(d, 4).ideal) for d in ([2, 2], [2, 3], [2, 2, 3])]
    out += [("sr", e.ideal_id, e.ideal) for e in corpus(5 if full else 2, 7)]
    return out


def hilbert_consistency(hs=(1, 2, 3, 4), full=True):
    bad = []
    for h in hs:
        got = hilbert_numerator(gamma(h).ideal)
        if got != gamma_numerator(h):
            bad.append(("numerator", h, got))
    for kind, param, I in named_constructions(full):
        euler = full_betti_table(I).euler_polynomial()
        num = hilbert_numerator(I)
        if euler != num:
            bad.append(("euler", kind, param, euler, num))
    return not bad, "", bad


# -- 6. corpus sweep -----------------------------------------------------------


def corpus_sweep(count=100, seed=42):
    bad = []
    for entry in corpus(count, seed):
        rep = check_theorem(entry.ideal, assume_radical_unmixed=True, ideal_id=entry.ideal_id)
        if not (rep.satisfied and rep.attested):
            bad.append(rep.to_json())
    return not bad, f"{count} ideals, seed {seed}", bad


# -- 7. linear-form remark -----------------------------------------------------


def remark_and_vandermonde(h_max=16, v_max=12):
    bad = []
    for h in range(1, h_max + 1):
        for t in range(h + 1):
            for i in range(2 * h + 1):
                sharp, final = remark_bound(h, t, i)
                if sharp > final:
                    bad.append(("remark", h, t, i, sharp, final))
    for m in range(v_max + 1):
        for t in range(v_max + 1):
            for k in range(v_max + 1):
                if not vandermonde_check(m, t, k):
                    bad.append(("vandermonde", m, t, k))
    return not bad, f"h <= {h_max}, m, t, k <= {v_max}", bad


# -- 8. randomized property suites ---------------------------------------------


def random_polynomial(rng: random.Random, ring: RingDescriptor, d: int, max_terms: int = 3) -> Polynomial:
    monos = monomials_of_degree(ring, d)
    picks = rng.sample(monos, min(len(monos), rng.randint(1, max_terms)))
    terms = {m: rng.choice([-3, -2, -1, 1, 1, 2, 3]) for m in picks}
    return Polynomial(ring, terms)


def random_ideal(rng: random.Random, n_max: int = 4, gens_max: int = 3, deg_max: int = 3, field=None) -> Ideal:
    """A small homogeneous ideal with few, short generators."""
    n = rng.randint(1, n_max)
    field = field or rng.choice([GF, QQ])
    ring = RingDescriptor.standard(n, field)
    gens = [random_polynomial(rng, ring, rng.randint(1, deg_max)) for _ in range(rng.randint(1, gens_max))]
    return Ideal(ring, gens)


def _prop_groebner(rng):
    I = random_ideal(rng)
    order = rng.choice([DEGREVLEX, LEX])
    return is_groebner(list(buchberger(I, order).elements), order)


def _prop_colon(rng):
    I = random_ideal(rng)
    g = random_polynomial(rng, I.ring, rng.randint(1, 2), 2)
    Q = colon(I, g)
    return ideal_contains(I, Ideal(I.ring, [g * q for q in Q.generators]))


def _prop_d_squared(rng):
    I = random_ideal(rng, n_max=3, gens_max=3, deg_max=2)
    K = koszul_complex(I)
    n = I.ring.num_vars
    top = I.max_degree() + n
    return all(K.strand(i, j).composition_is_zero() for i in range(n + 1) for j in range(i, top + 1))


def _prop_dimension(rng):
    I = random_ideal(rng)
    return dimension(I, LEX) == dimension(I, DEGREVLEX)


def _prop_round_trip(rng):
    I = random_ideal(rng, n_max=5, gens_max=4, deg_max=4)
    text = format_ideal(I)
    J = parse_ideal(text)
    return J.ring == I.ring and J.generators == I.generators and format_ideal(J) == text


PROPERTIES = {
    "S-pairs reduce to zero": _prop_groebner,
    "g (I : g) in I": _prop_colon,
    "d^2 = 0 on Koszul strands": _prop_d_squared,
    "dimension independent of order": _prop_dimension,
    "print/parse round trip": _prop_round_trip,
}


def property_suites(cases=500, seed=2024):
    bad = []
    for k, (name, prop) in enumerate(PROPERTIES.items()):
        rng = random.Random(seed * 31 + k)
        for case in range(cases):
            state = rng.getstate()
            if not prop(rng):
                bad.append((name, case, state))
    return not bad, f"{cases} cases x {len(PROPERTIES)} properties", bad


# -- driver --------------------------------------------------------------------


def criteria(level: str = "full"):
    full = level == "full"
    if level not in ("fast", "full"):
        raise ValueError("level must be 'fast' or 'full'")
    return [
        (1, "quadratic strand of Γ(h) meets the bound", gamma_sharpness, (1, 2, 3, 4) if full else (1, 2, 3)),
        (2, "prime 𝔭(h) meets the bound; coordinate route", prime_sharpness, (1, 2, 3) if full else (1, 2)),
        (3, "LPP Betti formula vs Koszul vs closed form", murai_oracle,
         ((3, 2), (4, 2), (3, 3)) if full else ((3, 2),)),
        (4, "linkage lemma on the h=2 instance", lemma_linkage, 2),
        (5, "Hilbert numerator and Euler identity", lambda: hilbert_consistency((1, 2, 3, 4) if full else (1, 2), full)),
        (6, "corpus sweep of the strand bound", corpus_sweep, 100 if full else 20),
        (7, "linear-form bound and Vandermonde", remark_and_vandermonde),
        (8, "randomized property suites", property_suites, 500 if full else 50),
    ]


def run_criterion(number: int, level: str = "full") -> CriterionResult:
    for num, name, fn, *args in criteria(level):
        if num == number:
            return _timed(num, name, fn, *args)
    raise ValueError(f"no criterion {number}")


def run_suite(level: str = "full", report=None) -> list:
    results = []
    for num, name, fn, *args in criteria(level):
        res = _timed(num, name, fn, *args)
        results.append(res)
        if report:
            report(res)
    return results
