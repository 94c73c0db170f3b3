import pytest
from hypothesis import given, settings, strategies as st

from bettikit.betti import betti_number, ci_betti
from bettikit.combinat import binom
from bettikit.errors import InJA, ParameterOutOfRange
from bettikit.lpp import (
    INF, PowerVector, construct_L, is_lpp, lpp_ideal, murai_A, murai_betti, murai_k, prop_closed_form,
)
from bettikit.ring import LEX, Ideal, RingDescriptor, monomials_of_degree

from strategies import QQ


def test_power_vector():
    a = PowerVector.parse("3,3,inf,inf")
    assert a.bounds == (3, 3, INF, INF)
    assert str(a) == "3,3,inf,inf"
    with pytest.raises(ParameterOutOfRange):
        PowerVector((3, 2))
    with pytest.raises(ParameterOutOfRange):
        PowerVector((1, 2))


def test_L32_is_lpp():
    L = construct_L(3, 2)
    assert is_lpp(L.combined, L.powers)


def test_pure_powers_alone():
    R = RingDescriptor.standard(3, QQ)
    a = PowerVector((2, 3, 4))
    assert is_lpp(Ideal.from_monomials(R, a.pure_powers()), a)


def test_not_lpp():
    R = RingDescriptor.standard(2, QQ)
    assert not is_lpp(Ideal.from_monomials(R, [(0, 1)]), PowerVector((2, 2)))


def test_L32_generators():
    L = construct_L(3, 2)
    gens = sorted(g.leading_monomial() for g in L.combined.generators)
    assert gens == sorted([(3, 0, 0, 0), (0, 3, 0, 0), (2, 2, 0, 0), (2, 1, 2, 0), (2, 1, 1, 1)])


@pytest.mark.parametrize("a, h", [(3, 2), (4, 2), (3, 3), (5, 2)])
def test_construction_degrees(a, h):
    L = construct_L(a, h)
    D = (a - 1) * h
    u = tuple([a - 1] * h + [0] * h)
    assert sum(u) == D and u in L.lex_part
    assert all(sum(v) == D + 1 for v in L.lex_part if v != u)


def test_k_values():
    a = PowerVector((3, 3, INF, INF))
    assert murai_k((2, 2, 0, 0), a) == 3
    assert murai_k((1, 0, 0, 0), a) == 1
    with pytest.raises(InJA):
        murai_k((3, 0, 0, 0), a)


@pytest.mark.parametrize("a, h", [(3, 2), (4, 3), (3, 3)])
def test_A_of_u(a, h):
    pv = PowerVector(tuple([a] * h + [INF] * h))
    u = tuple([a - 1] * h + [0] * h)
    for i in range(2 * h + 2):
        assert murai_A(u, i, pv) == (binom(h, i - 1) if i <= h else 0)
        if i >= 1:
            for j in range(1, h + 1):
                ux = list(u)
                ux[h + j - 1] += 1
                assert murai_A(tuple(ux), i, pv) == binom(h + j - 1, i - 1)


def test_A_zero():
    a = PowerVector((3, 3, INF, INF))
    for v in [(1, 0, 0, 0), (2, 1, 1, 0), (0, 0, 0, 5)]:
        assert murai_A(v, 0, a) == 0


def test_v1_pattern():
    # v_1 = (x1 x2)^2 x3 x4 pattern: k reads past every saturated exponent
    a = PowerVector((3, 3, INF, INF))
    v = (2, 1, 2, 0)
    assert murai_k(v, a) == 1
    assert [murai_A(v, i, a) for i in range(5)] == [0, 1, 2, 1, 0]


def test_L32_rows():
    L = construct_L(3, 2)
    assert [murai_betti(L, i, 4) for i in range(5)] == [0, 2, 5, 4, 1]
    assert [murai_betti(L, i, 3) for i in range(5)] == [0, 1, 2, 0, 0]


def test_pure_powers_formula():
    R = RingDescriptor.standard(3, QQ)
    a = PowerVector((2, 3, INF))
    L = lpp_ideal(R, a, [])
    for i in range(4):
        for j in range(6):
            assert murai_betti(L, i, j) == ci_betti([2, 3], i, i + j)


def test_closed_form_cases():
    assert [prop_closed_form(3, 2, i, 4) for i in range(5)] == [0, 2, 5, 4, 1]
    assert prop_closed_form(3, 2, 3, 3) == 0
    assert prop_closed_form(4, 2, 1, 5) == 1
    with pytest.raises(ParameterOutOfRange):
        prop_closed_form(3, 2, 1, 5)
    with pytest.raises(ParameterOutOfRange):
        construct_L(2, 2)


@pytest.mark.parametrize("a, h", [(3, 2), (4, 2), (3, 3)])
def test_formula_matches_koszul(a, h):
    L = construct_L(a, h)
    D = (a - 1) * h
    for j in range(D + 2):
        for i in range(2 * h + 1):
            k = betti_number(L.combined, i, i + j)
            assert murai_betti(L, i, j) == k
            if j <= D:
                assert prop_closed_form(a, h, i, j) == k


def lex_segment_ideals():
    """Random J(a) + lex-segment ideals in 3 variables."""

    @st.composite
    def build(draw):
        n = 3
        raw = sorted(draw(st.lists(st.sampled_from([2, 3, 4, INF]), min_size=n, max_size=n)))
        a = PowerVector(tuple(raw))
        R = RingDescriptor.standard(n, QQ)
        monos = []
        for d in range(1, 5):
            outside = [m for m in monomials_of_degree(R, d, LEX) if not a.in_J(m)]
            k = draw(st.integers(0, min(len(outside), 3)))
            monos.extend(outside[:k])
        return lpp_ideal(R, a, monos)

    return build()


@settings(max_examples=40, deadline=None)
@given(lex_segment_ideals())
def test_formula_on_random_lpp(L):
    assert is_lpp(L.combined, L.powers)
    n = L.ring.num_vars
    for i in range(n + 1):
        for j in range(7):
            assert murai_betti(L, i, j) == betti_number(L.combined, i, i + j)
