import pytest
from hypothesis import given, settings, strategies as st

from bettikit.betti import (
    betti_number, betti_table, ci_betti, field_cross_check, full_betti_table, graded_betti_number,
    koszul_complex, lemma_aci_check, minimal_generator_degrees, quadratic_strand, wedge_basis,
)
from bettikit.combinat import binom
from bettikit.constructions import complete_intersection, gamma, prime_candidate, random_pure_complex, stanley_reisner
from bettikit.errors import PreconditionViolated
from bettikit.field import FieldSpec
from bettikit.groebner import colon, ideal_equal, linkage_witness
from bettikit.lpp import construct_L
from bettikit.ring import Ideal, RingDescriptor

from strategies import GF, QQ, ideals, monomial_ideals


def test_gamma2_cells():
    I = gamma(2).ideal
    assert betti_number(I, 1, 2) == 4
    assert betti_number(I, 2, 4) == 0
    assert betti_number(I, 2, 3) == 4
    assert betti_table(I, 4, 6).nonzero() == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}


def test_gamma2_strand_as_ideal_index():
    # beta_{i,i+2}(I) = beta_{i+1,i+2}(S/I); the i = 1 entry is the coefficient 4
    assert quadratic_strand(gamma(2).ideal)[1] == binom(4, 3) - 2 * binom(2, 3)


def test_proper_ideal_row_zero():
    for I in (gamma(2).ideal, prime_candidate(2, QQ).ideal):
        T = full_betti_table(I)
        assert T[0, 0] == 1
        assert all(T[0, j] == 0 for j in range(1, 6))
        assert all(j >= i for (i, j) in T.nonzero())


def test_complete_intersection_table():
    I = complete_intersection([2, 2]).ideal
    assert full_betti_table(I).nonzero() == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_lpp_top_row():
    L = construct_L(3, 2).combined
    # the row j - i = 4 needs internal degree up to 8 at i = 4
    assert betti_table(L, 6, 8).strand(4)[:5] == [0, 2, 5, 4, 1]


@pytest.mark.parametrize("h, strand", [(2, [4, 4, 1]), (3, [9, 18, 15, 6, 1])])
def test_gamma_strands(h, strand):
    assert quadratic_strand(gamma(h).ideal) == strand


def test_principal_quadric():
    R = RingDescriptor.standard(2, QQ)
    assert quadratic_strand(Ideal(R, [R.var(0) * R.var(1)])) == [1]


def test_ci_betti():
    assert [ci_betti([3, 3], 2, j) for j in range(8)] == [0] * 6 + [1, 0]
    assert ci_betti([2, 3, 4], 2, 6) == 1
    for h in (1, 2, 3, 4):
        for i in range(h + 1):
            assert ci_betti([2] * h, i, 2 * i) == binom(h, i)
    I = complete_intersection([2, 2, 2]).ideal
    for i in range(4):
        for j in range(7):
            assert graded_betti_number(I, i, j) == ci_betti([2, 2, 2], i, j)


def test_wedge_basis_colex():
    assert wedge_basis(3, 2) == [(0, 1), (0, 2), (1, 2)]


def linked_pair():
    G = gamma(2, QQ).ideal
    u1, u2, v1, v2 = G.ring.gens()
    F = Ideal(G.ring, [u1 * v1, u2 * v2])
    return F, G, linkage_witness(F, G, 2)


def test_lemma_h2_agrees_where_ci_tor_vanishes():
    F, G, g = linked_pair()
    assert ideal_equal(colon(F, g), G)
    rep = lemma_aci_check(F, g)
    assert rep.passed_where_ci_vanishes
    # the (0, 0) cell picks up beta_{1,2}(S/F) = 2 from the complete intersection
    assert rep.failures() == [(0, 0, 1, 3, False, False)]


def test_lemma_h1():
    R = RingDescriptor.standard(2, QQ)
    x1, x2 = R.gens()
    rep = lemma_aci_check(Ideal(R, [x1**2]), x2)
    assert rep.passed and rep.h == 1 and rep.D == 1


def test_lemma_preconditions():
    R = RingDescriptor.standard(3, QQ)
    x1, x2, x3 = R.gens()
    with pytest.raises(PreconditionViolated):
        lemma_aci_check(Ideal(R, [x1 * x2]), x1)  # (x1 x2) : x1 = (x2), a linear form
    with pytest.raises(PreconditionViolated):
        lemma_aci_check(Ideal(R, [x1**2, x2**2]), x3)  # degree of g is not D = 2


def test_frozen_regression():
    c = random_pure_complex(8, 2, 5, 42)
    assert c.facets == ((0, 1, 3), (0, 2, 4), (0, 4, 7), (2, 4, 5), (3, 4, 6))
    I = stanley_reisner(c)
    assert quadratic_strand(I, 8) == [15, 40, 45, 24, 5, 0, 0, 0]


def test_prime_cross_field():
    tables = field_cross_check(prime_candidate(2, QQ).ideal)
    assert len({tuple(sorted(t.items())) for t in tables.values()}) == 1


# -- properties -------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(monomial_ideals(n_max=4, gens_max=4, deg_max=3))
def test_monomial_shortcut_matches_graded_strands(I):
    n = I.ring.num_vars
    for i in range(n + 1):
        for j in range(i, n + 4):
            assert betti_number(I, i, j) == graded_betti_number(I, i, j)


@settings(max_examples=40, deadline=None)
@given(ideals(n_max=3, gens_max=3, deg_max=2))
def test_pruning_is_exact(I):
    n = I.ring.num_vars
    for i in range(n + 1):
        for j in range(i, n + 3):
            assert betti_number(I, i, j) == graded_betti_number(I, i, j)


@settings(max_examples=50, deadline=None)
@given(ideals(n_max=4, gens_max=4, deg_max=3))
def test_first_syzygies_count_minimal_generators(I):
    counts = minimal_generator_degrees(I)
    for d in range(1, 4):
        assert betti_number(I, 1, d) == counts.get(d, 0)


@settings(max_examples=40, deadline=None)
@given(ideals(n_max=3, gens_max=3, deg_max=2))
def test_d_squared(I):
    K = koszul_complex(I)
    n = I.ring.num_vars
    for i in range(n + 1):
        for j in range(i, n + 3):
            assert K.strand(i, j).composition_is_zero()


@settings(max_examples=30, deadline=None)
@given(ideals(n_max=3, gens_max=3, deg_max=2, field=QQ))
def test_rational_vs_large_prime(I):
    a = full_betti_table(I).nonzero()
    b = full_betti_table(I.with_field(GF)).nonzero()
    assert a == b


@settings(max_examples=30, deadline=None)
@given(ideals(n_max=3, gens_max=3, deg_max=2))
def test_initial_ideal_bounds(I):
    from bettikit.betti import initial_betti_bound

    bound = initial_betti_bound(I)
    for (i, j), v in full_betti_table(I).nonzero().items():
        assert v <= bound.get((i, j), 0)
