"""Graded Betti numbers of S/I as Koszul homology.

beta_{i,j}(S/I) = dim H_i(K(x_1..x_N) ⊗ S/I)_j, computed from the strand

    ∧^{i+1} ⊗ (S/I)_{j-i-1}  ->  ∧^i ⊗ (S/I)_{j-i}  ->  ∧^{i-1} ⊗ (S/I)_{j-i+1}

with S/I represented by the degrevlex standard monomials of I.

Monomial ideals take a faster route: the same complex splits into blocks
indexed by multidegree, and only multidegrees in the lcm lattice of the
minimal generators can carry homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import CharacteristicSensitive, DegreeCapExceeded, PreconditionViolated
from .field import FieldSpec
from .groebner import _entry, _reduce, buchberger, colon, degree_cap, dimension
from .linalg import compose, rank
from .ring import (
    DEGREVLEX,
    Ideal,
    RingDescriptor,
    mono_divides,
    mono_lcm,
    monomials_of_degree,
    unit_vector,
)


@dataclass
class BettiTable:
    ring: RingDescriptor
    entries: dict
    i_max: int
    j_max: int

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def strand(self, k: int) -> list:
        """[beta_{i,i+k}] for i = 0..i_max."""
        return [self[i, i + k] for i in range(self.i_max + 1)]

    def to_json(self) -> dict:
        return {
            "ring": {"vars": list(self.ring.var_names), "char": self.ring.field.characteristic},
            "entries": [[i, j, v] for (i, j), v in sorted(self.nonzero().items())],
            "i_max": self.i_max,
            "j_max": self.j_max,
        }

    def staircase(self) -> str:
        """Rows j - i, columns i, in the usual computer-algebra layout."""
        nz = self.nonzero()
        if not nz:
            return "(zero table)"
        cols = max(i for i, _ in nz) + 1
        rows = range(min(j - i for i, j in nz), max(j - i for i, j in nz) + 1)
        width = max(len(str(v)) for v in nz.values()) + 1
        width = max(width, len(str(cols)) + 1)
        lines = [" " * 6 + "".join(str(i).rjust(width) for i in range(cols))]
        lines.append("total:" + "".join(
            str(sum(v for (a, _), v in nz.items() if a == i)).rjust(width) for i in range(cols)
        ))
        for r in rows:
            cells = []
            for i in range(cols):
                v = nz.get((i, i + r), 0)
                cells.append((str(v) if v else "-").rjust(width))
            lines.append(f"{r:>5}:" + "".join(cells))
        return "\n".join(lines)

    def euler_polynomial(self) -> list:
        """Coefficients of sum_{i,j} (-1)^i beta_{i,j} z^j."""
        top = max((j for (_, j) in self.nonzero()), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.nonzero().items():
            out[j] += (-1) ** i * v
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out


def wedge_basis(n: int, i: int) -> list:
    """Size-i subsets of range(n) in colex order."""
    return sorted(combinations(range(n), i), key=lambda t: tuple(reversed(t)))


# -- monomial ideals: multigraded route -----------------------------------------


def minimal_monomials(monos) -> list:
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def lcm_lattice(gens) -> set:
    n = len(gens[0]) if gens else 0
    lattice = {(0,) * n}
    for g in gens:
        lattice |= {mono_lcm(a, g) for a in lattice}
    return lattice


def _in_ideal(m, gens) -> bool:
    return any(mono_divides(g, m) for g in gens)


def _multidegree_betti(alpha, gens, n: int, field: FieldSpec) -> dict:
    """{i: beta_{i,alpha}(S/I)} for a monomial ideal with generators ``gens``."""
    support = [k for k in range(n) if alpha[k]]
    faces = {}
    for i in range(len(support) + 1):
        cells = []
        for T in combinations(support, i):
            m = list(alpha)
            for k in T:
                m[k] -= 1
            if not _in_ideal(m, gens):
                cells.append(T)
        faces[i] = cells
    index = {i: {T: r for r, T in enumerate(cells)} for i, cells in faces.items()}
    one, minus = field.one, field.neg(field.one)
    ranks = {}
    for i in range(1, len(support) + 1):
        cols = []
        target = index[i - 1]
        for T in faces[i]:
            col = {}
            for r in range(i):
                S = T[:r] + T[r + 1 :]
                row = target.get(S)
                if row is not None:
                    col[row] = one if r % 2 == 0 else minus
            cols.append(col)
        ranks[i] = rank(cols, field) if cols else 0
    out = {}
    for i in range(len(support) + 1):
        v = len(faces[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if v:
            out[i] = v
    return out


def monomial_betti(gens, n: int, field: FieldSpec) -> dict:
    """Full graded Betti table {(i, j): beta} of S/(gens) for monomial gens."""
    gens = minimal_monomials(gens)
    if any(sum(g) == 0 for g in gens):
        return {}
    table = {}
    for alpha in lcm_lattice(gens):
        for i, v in _multidegree_betti(alpha, gens, n, field).items():
            key = (i, sum(alpha))
            table[key] = table.get(key, 0) + v
    return table


# -- general ideals: graded Koszul strands --------------------------------------


@dataclass
class KoszulStrand:
    """Three-term piece of the Koszul complex at homological index i, degree j."""

    i: int
    j: int
    dim_in: int
    dim: int
    dim_out: int
    d_in: list  # columns of K_{i+1,j} -> K_{i,j}
    d_out: list  # columns of K_{i,j} -> K_{i-1,j}
    field: FieldSpec

    def composition_is_zero(self) -> bool:
        if not self.d_in or not self.d_out:
            return True
        return all(not col for col in compose(self.d_out, self.d_in, self.field))

    def homology(self) -> int:
        return self.dim - rank(self.d_out, self.field) - rank(self.d_in, self.field)


class KoszulComplex:
    """Koszul complex of S/I with lazily built bases and boundary maps."""

    def __init__(self, I: Ideal):
        self.ideal = I
        self.ring = I.ring
        self.n = I.ring.num_vars
        self.field = I.ring.field
        self.gb = buchberger(I, DEGREVLEX)
        self.leads = minimal_monomials(self.gb.leading_monomials())
        self._basis = {}
        self._mult = {}
        self._wedge = {}
        self._ranks = {}
        self._boundaries = {}

    def standard_monomials(self, d: int) -> list:
        if d not in self._basis:
            if d < 0:
                mons = []
            elif d == 0:
                mons = [] if _in_ideal((0,) * self.n, self.leads) else [(0,) * self.n]
            else:
                prev = self.standard_monomials(d - 1)
                cand = set()
                for m in prev:
                    for k in range(self.n):
                        mm = m[:k] + (m[k] + 1,) + m[k + 1 :]
                        if mm not in cand and not _in_ideal(mm, self.leads):
                            cand.add(mm)
                mons = sorted(cand, key=DEGREVLEX.key, reverse=True)
            self._basis[d] = (mons, {m: r for r, m in enumerate(mons)})
        return self._basis[d][0]

    def _index(self, d: int) -> dict:
        self.standard_monomials(d)
        return self._basis[d][1]

    def multiply(self, k: int, m) -> dict:
        """Normal form of x_k * m as {standard monomial: coefficient}."""
        key = (k, m)
        hit = self._mult.get(key)
        if hit is None:
            mm = m[:k] + (m[k] + 1,) + m[k + 1 :]
            if _in_ideal(mm, self.leads):
                hit = _reduce({mm: self.field.one}, self.gb.entries(), self.field, DEGREVLEX.key)
            else:
                hit = {mm: self.field.one}
            self._mult[key] = hit
        return hit

    def wedges(self, i: int):
        if i not in self._wedge:
            w = wedge_basis(self.n, i)
            self._wedge[i] = (w, {T: r for r, T in enumerate(w)})
        return self._wedge[i]

    def dim(self, i: int, j: int) -> int:
        if i < 0 or i > self.n or j - i < 0:
            return 0
        return comb(self.n, i) * len(self.standard_monomials(j - i))

    def boundary(self, i: int, j: int) -> list:
        """Columns of d: K_{i,j} -> K_{i-1,j}."""
        if i <= 0 or i > self.n or j - i < 0:
            return []
        key = (i, j)
        if key not in self._boundaries:
            self._boundaries[key] = self._build_boundary(i, j)
        return self._boundaries[key]

    def _build_boundary(self, i: int, j: int) -> list:
        f = self.field
        wedges, _ = self.wedges(i)
        _, target_w = self.wedges(i - 1)
        mons = self.standard_monomials(j - i)
        target_m = self._index(j - i + 1)
        width = len(target_m)
        cols = []
        for T in wedges:
            for m in mons:
                col = {}
                for r, k in enumerate(T):
                    S = T[:r] + T[r + 1 :]
                    base = target_w[S] * width
                    for mm, c in self.multiply(k, m).items():
                        c = c if r % 2 == 0 else f.neg(c)
                        row = base + target_m[mm]
                        v = f.add(col.get(row, f.zero), c)
                        if v:
                            col[row] = v
                        else:
                            col.pop(row, None)
                cols.append(col)
        return cols

    def boundary_rank(self, i: int, j: int) -> int:
        key = (i, j)
        if key not in self._ranks:
            cols = self.boundary(i, j)
            self._ranks[key] = rank(cols, self.field) if cols else 0
        return self._ranks[key]

    def strand(self, i: int, j: int) -> KoszulStrand:
        return KoszulStrand(
            i, j, self.dim(i + 1, j), self.dim(i, j), self.dim(i - 1, j),
            self.boundary(i + 1, j), self.boundary(i, j), self.field,
        )

    def betti(self, i: int, j: int, check=True) -> int:
        if i < 0 or i > self.n or j < i:
            return 0
        if check:
            s = self.strand(i, j)
            assert s.composition_is_zero(), f"d^2 != 0 at ({i},{j})"
        return self.dim(i, j) - self.boundary_rank(i, j) - self.boundary_rank(i + 1, j)


_COMPLEXES: dict = {}


def koszul_complex(I: Ideal) -> KoszulComplex:
    key = (I.ring, I.generators)
    kc = _COMPLEXES.get(key)
    if kc is None:
        if len(_COMPLEXES) > 256:
            _COMPLEXES.clear()
        kc = _COMPLEXES[key] = KoszulComplex(I)
    return kc


def _monomial_gens(I: Ideal):
    """Minimal monomial generators when I is generated by monomials, else None."""
    if not I.is_monomial():
        return None
    return minimal_monomials([g.leading_monomial() for g in I.generators])


_MONO_TABLES: dict = {}


def _monomial_table(gens, n, field) -> dict:
    key = (tuple(gens), n, field)
    t = _MONO_TABLES.get(key)
    if t is None:
        if len(_MONO_TABLES) > 1024:
            _MONO_TABLES.clear()
        t = _MONO_TABLES[key] = monomial_betti(gens, n, field)
    return t


def initial_betti_bound(I: Ideal) -> dict:
    """Betti table of S/in(I): an entrywise upper bound for that of S/I."""
    leads = minimal_monomials(buchberger(I, DEGREVLEX).leading_monomials())
    return _monomial_table(leads, I.ring.num_vars, I.ring.field)


def _check_cap(j: int):
    cap = degree_cap()
    if j > cap:
        raise DegreeCapExceeded(f"internal degree {j} exceeds cap {cap}")


def betti_number(I: Ideal, i: int, j: int, prune=True) -> int:
    """beta_{i,j}(S/I)."""
    if i < 0 or j < 0 or j < i or i > I.ring.num_vars:
        return 0
    _check_cap(j)
    gens = _monomial_gens(I)
    if gens is not None:
        return _monomial_table(tuple(gens), I.ring.num_vars, I.ring.field).get((i, j), 0)
    if prune and initial_betti_bound(I).get((i, j), 0) == 0:
        return 0
    return koszul_complex(I).betti(i, j)


def graded_betti_number(I: Ideal, i: int, j: int) -> int:
    """beta_{i,j}(S/I) through the graded Koszul strand, with no shortcuts."""
    if i < 0 or j < 0 or j < i or i > I.ring.num_vars:
        return 0
    return koszul_complex(I).betti(i, j)


def default_window(I: Ideal):
    n = I.ring.num_vars
    return n, n + I.max_degree()


def betti_table(I: Ideal, i_max: int | None = None, j_max: int | None = None, prune=True) -> BettiTable:
    di, dj = default_window(I)
    i_max = di if i_max is None else i_max
    j_max = dj if j_max is None else j_max
    _check_cap(j_max)
    entries = {}
    gens = _monomial_gens(I)
    if gens is not None:
        full = _monomial_table(tuple(gens), I.ring.num_vars, I.ring.field)
        entries = {k: v for k, v in full.items() if k[0] <= i_max and k[1] <= j_max}
    else:
        for i in range(i_max + 1):
            for j in range(i, j_max + 1):
                v = betti_number(I, i, j, prune=prune)
                if v:
                    entries[(i, j)] = v
    return BettiTable(I.ring, entries, i_max, j_max)


def full_betti_table(I: Ideal) -> BettiTable:
    """Every nonzero Betti number, using in(I) to bound the support."""
    bound = initial_betti_bound(I)
    i_max = I.ring.num_vars
    j_max = max((j for (_, j) in bound), default=0)
    return betti_table(I, i_max, j_max)


def quadratic_strand(I: Ideal, length: int | None = None) -> list:
    """[beta_{i,i+2}(I)] = [beta_{i+1,i+2}(S/I)] for i = 0..length-1 (default 2h-1)."""
    if length is None:
        _, h = dimension(I)
        length = max(2 * h - 1, 1)
    return [betti_number(I, i + 1, i + 2) for i in range(length)]


def ci_betti(degrees, i: int, j: int) -> int:
    """Koszul Betti number of a complete intersection of the given degrees."""
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("degrees must be a nonempty list of positive integers")
    return sum(1 for c in combinations(degrees, i) if sum(c) == j)


def minimal_generator_degrees(I: Ideal) -> dict:
    """{d: number of degree-d minimal generators}, by degreewise linear algebra."""
    ring = I.ring
    f = ring.field
    n = ring.num_vars
    by_degree = {}
    for g in I.generators:
        by_degree.setdefault(g.degree(), []).append(g)
    out = {}
    lower = []  # generators of degree < d
    for d in sorted(by_degree):
        index = {m: r for r, m in enumerate(monomials_of_degree(n, d))}
        spanning = []
        for g in lower:
            for shift in monomials_of_degree(n, d - g.degree()):
                spanning.append({index[tuple(a + b for a, b in zip(m, shift))]: c for m, c in g.term_dict.items()})
        fresh = [{index[m]: c for m, c in g.term_dict.items()} for g in by_degree[d]]
        r0 = rank(spanning, f) if spanning else 0
        r1 = rank(spanning + fresh, f)
        if r1 > r0:
            out[d] = r1 - r0
        lower.extend(by_degree[d])
    return out


def field_cross_check(I: Ideal, fields=(FieldSpec.rationals(), FieldSpec.prime(32003)),
                      i_max=None, j_max=None) -> dict:
    """Betti tables of I read over several fields; raises on disagreement."""
    tables = {}
    for fs in fields:
        J = I.with_field(fs)
        tables[str(fs)] = betti_table(J, i_max, j_max).nonzero()
    first = next(iter(tables.values()))
    if any(t != first for t in tables.values()):
        raise CharacteristicSensitive(f"Betti tables differ across fields: {tables}")
    return tables


# -- the almost complete intersection lemma ------------------------------------


@dataclass
class LemmaReport:
    """Cell-by-cell comparison; each cell is (i, j, beta(S/I), beta(S/a) shifted, ok, ci_vanishes).

    ``ci_vanishes`` records whether beta_{i,j+D} and beta_{i+1,j+D} of the
    complete intersection are both zero (away from (h, h)), which is what
    forces the shifted equality through the long exact Tor sequence.
    """

    h: int
    D: int
    cells: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c[4] for c in self.cells)

    @property
    def passed_where_ci_vanishes(self) -> bool:
        return all(c[4] for c in self.cells if c[5])

    def failures(self) -> list:
        return [c for c in self.cells if not c[4]]


def lemma_aci_check(F: Ideal, g, j_max: int | None = None) -> LemmaReport:
    """Compare beta(S/(F:g)) with beta(S/(F + (g))) shifted by D = sum(d_i - 1)."""
    problems = []
    degrees = sorted(p.degree() for p in F.generators)
    h = len(degrees)
    if h == 0:
        problems.append("F has no generators")
    if any(d < 2 for d in degrees):
        problems.append("F has a generator of degree < 2")
    if h and dimension(F)[1] != h:
        problems.append("F is not a complete intersection")
    D = sum(d - 1 for d in degrees)
    if not g.is_homogeneous() or g.degree() != D:
        problems.append(f"deg(g) = {g.degree()} differs from D = {D}")
    if problems:
        raise PreconditionViolated(problems)
    I = colon(F, g)
    gb = buchberger(I)
    if gb.is_unit():
        raise PreconditionViolated(["F : g is the unit ideal"])
    if any(p.degree() == 1 for p in gb.elements):
        raise PreconditionViolated(["F : g contains a linear form"])
    a = F + Ideal(F.ring, [g])
    n = F.ring.num_vars
    if j_max is None:
        j_max = max((j for (_, j) in initial_betti_bound(I)), default=0) + 1
    left = betti_table(I, n, j_max)
    right = betti_table(a, n, j_max + D)
    report = LemmaReport(h, D)
    for i in range(n + 1):
        for j in range(j_max + 1):
            lhs = left[i, j]
            rhs = right[i + 1, j + D]
            expected = rhs - 1 if (i, j) == (h - 1, h) else rhs
            ci_terms = [
                ci_betti(degrees, k, j + D)
                for k in (i, i + 1)
                if (k, j) != (h, h)
            ]
            report.cells.append((i, j, lhs, rhs, lhs == expected, not any(ci_terms)))
    return report
