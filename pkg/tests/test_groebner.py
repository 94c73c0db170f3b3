import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bettikit.constructions import gamma, prime_candidate
from bettikit.errors import DegreeCapExceeded, FieldTooSmall, NotContained, ZeroDivisor
from bettikit.field import FieldSpec
from bettikit.groebner import (
    buchberger, colon, contains, dimension, groebner_polys, ideal_contains, ideal_equal, initial_ideal,
    intersect, is_groebner, linkage_witness, normal_form, random_coordinate_change, s_polynomial,
)
from bettikit.hilbert import hilbert_values
from bettikit.ring import DEGREVLEX, LEX, Ideal, Polynomial, RingDescriptor, mono_divides

from strategies import GF, QQ, homogeneous_polys, ideals, monomial_ideals


def to_sympy(p, syms):
    return sum(sympy.Rational(c) * sympy.Mul(*[s**e for s, e in zip(syms, m)]) for m, c in p.term_dict.items())


def from_sympy(expr, ring, syms):
    poly = sympy.Poly(expr, *syms)
    return Polynomial(ring, {m: sympy.Rational(c).p * ring.field.one / sympy.Rational(c).q for m, c in poly.terms()})


def sympy_basis(I, order):
    syms = sympy.symbols(I.ring.var_names)
    G = sympy.groebner([to_sympy(g, syms) for g in I.generators], *syms, order=order, domain="QQ")
    return {from_sympy(g, I.ring, syms) for g in G.exprs}


def test_generator_reduces_to_zero():
    I = prime_candidate(2, QQ).ideal
    G = buchberger(I)
    for g in I.generators:
        assert normal_form(g, G).is_zero()


def test_x1x2_mod_x1():
    R = RingDescriptor.standard(2, QQ)
    x1, x2 = R.gens()
    assert normal_form(x1 * x2, buchberger(Ideal(R, [x1]))).is_zero()


def test_prime_membership():
    I = prime_candidate(2, QQ).ideal
    y1, y2, z1, z2 = I.ring.gens()
    # y1 y2 z1 z2 reduces to -z1^2 z2^2, so it is not a member; adding z1^2 z2^2 makes one
    G = buchberger(I)
    assert normal_form(y1 * y2 * z1 * z2, G) == -(z1**2 * z2**2)
    assert contains(I, y1 * y2 * z1 * z2 + z1**2 * z2**2)
    assert not contains(I, y1 * y2)
    syms = sympy.symbols(I.ring.var_names)
    ref = sympy.groebner([to_sympy(g, syms) for g in I.generators], *syms, order="grevlex")
    assert not ref.contains(to_sympy(y1 * y2 * z1 * z2, syms))
    assert ref.contains(to_sympy(y1 * y2 * z1 * z2 + z1**2 * z2**2, syms))


def test_monomial_input_is_minimalized():
    R = RingDescriptor.standard(3, QQ)
    I = Ideal.from_monomials(R, [(1, 0, 0), (2, 1, 0), (0, 1, 1)])
    G = buchberger(I)
    assert sorted(G.leading_monomials()) == sorted([(1, 0, 0), (0, 1, 1)])


def test_hand_example():
    R = RingDescriptor.standard(2, QQ)
    x1, x2 = R.gens()
    G = set(groebner_polys([x1**2 + x2**2, x1 * x2]))
    assert G == {x1**2 + x2**2, x1 * x2, x2**3}
    assert s_polynomial(x1**2 + x2**2, x1 * x2) == x2**3


def test_inhomogeneous_lex_matches_reference():
    R = RingDescriptor.standard(2, QQ)
    x, y = R.gens()
    half = QQ.convert(1) / 2
    assert set(groebner_polys([x**2 + x * y**2 * 2, x * y + y**3 * 2 - 1], LEX)) == {x, y**3 - half}
    R3 = RingDescriptor.standard(3, QQ)
    x, y, z = R3.gens()
    G = set(groebner_polys([-x**2 + y, -x**3 + z], LEX))
    assert G == {x**2 - y, x * y - z, x * z - y**2, y**3 - z**2}


def test_gamma_basis_is_generators():
    I = gamma(2, QQ).ideal
    assert set(buchberger(I).elements) == set(I.generators)
    assert ideal_equal(initial_ideal(I), I)


def test_initial_ideal_hilbert_function():
    I = prime_candidate(2, QQ).ideal
    assert hilbert_values(initial_ideal(I), 6) == hilbert_values(I, 6)


def test_principal_initial_ideal():
    R = RingDescriptor.standard(2, QQ)
    x1, x2 = R.gens()
    assert initial_ideal(Ideal(R, [x1**2 + x2**2])).generators == (x1**2,)


def test_equality():
    I = gamma(2, QQ).ideal
    shuffled = Ideal(I.ring, list(reversed(I.generators)))
    assert ideal_equal(I, shuffled)
    R = RingDescriptor.standard(1, QQ)
    (x1,) = R.gens()
    assert not ideal_equal(Ideal(R, [x1]), Ideal(R, [x1**2]))


def test_colon_examples():
    R = RingDescriptor.standard(3, QQ)
    x1, x2, x3 = R.gens()
    assert ideal_equal(colon(Ideal(R, [x1**2]), x1), Ideal(R, [x1]))
    assert ideal_equal(colon(Ideal(R, [x1 * x2, x1 * x3]), x1), Ideal(R, [x2, x3]))
    with pytest.raises(ZeroDivisor):
        colon(Ideal(R, [x1]), R.zero())


def test_intersections():
    G = gamma(2, QQ).ideal
    u1, u2, v1, v2 = G.ring.gens()
    assert ideal_equal(intersect(Ideal(G.ring, [u1, u2]), Ideal(G.ring, [v1, v2])), G)
    assert ideal_equal(intersect(G, G), G)
    R = RingDescriptor.standard(2, QQ)
    x1, x2 = R.gens()
    assert ideal_equal(intersect(Ideal(R, [x1]), Ideal(R, [x2])), Ideal(R, [x1 * x2]))


def test_dimensions():
    assert dimension(gamma(2).ideal) == (2, 2)
    R = RingDescriptor.standard(4, QQ)
    assert dimension(Ideal(R, R.gens())) == (0, 4)
    assert dimension(prime_candidate(3, QQ).ideal)[1] == 3


def test_coordinate_change():
    R = RingDescriptor.standard(3, GF)
    A = random_coordinate_change(R, 11)
    assert A.matrix == random_coordinate_change(R, 11).matrix
    assert A.determinant() != 0
    I = Ideal(R, [R.var(0) * R.var(1), R.var(2) ** 2])
    assert ideal_equal(A.inverse().apply(A.apply(I)), I)
    with pytest.raises(FieldTooSmall):
        random_coordinate_change(RingDescriptor.standard(3, FieldSpec.prime(7)), 0)


def test_linkage_witness_gamma2():
    G = gamma(2, QQ).ideal
    u1, u2, v1, v2 = G.ring.gens()
    F = Ideal(G.ring, [u1 * v1, u2 * v2])
    g = linkage_witness(F, G, 2)
    assert g is not None and g.degree() == 2
    assert ideal_equal(colon(F, g), G)
    # two-sided check of the colon: g G in F, and nothing outside G multiplies g into F
    assert ideal_contains(F, Ideal(G.ring, [g * t for t in G.generators]))


def test_linkage_boundaries():
    G = gamma(2, QQ).ideal
    u1, u2, v1, v2 = G.ring.gens()
    F = Ideal(G.ring, [u1 * v1, u2 * v2])
    assert linkage_witness(F, F, 0) == G.ring.one()
    assert linkage_witness(F, F, 2) is None
    with pytest.raises(NotContained):
        linkage_witness(Ideal(G.ring, [u1**2, v2**2]), G, 2)


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("BETTIKIT_DEGREE_CAP", "3")
    R = RingDescriptor.standard(2, QQ)
    x1, x2 = R.gens()
    with pytest.raises(DegreeCapExceeded):
        buchberger(Ideal(R, [x1**3 + x2**3, x1 * x2**2 + x1**2 * x2]))


# -- properties -------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(ideals(n_max=3, gens_max=3, deg_max=3, field=QQ), st.sampled_from([("grevlex", DEGREVLEX), ("lex", LEX)]))
def test_matches_sympy(I, orders):
    name, order = orders
    assert set(buchberger(I, order).elements) == sympy_basis(I, name)


@settings(max_examples=100, deadline=None)
@given(ideals(n_max=4, gens_max=3, deg_max=3), st.sampled_from([DEGREVLEX, LEX]))
def test_reduced_groebner_criterion(I, order):
    G = buchberger(I, order)
    assert is_groebner(list(G.elements), order)
    leads = G.leading_monomials()
    for g in G.elements:
        assert g.leading_coefficient(order) == I.ring.field.one
        for m in g.monomials(order):
            assert not any(mono_divides(l, m) for l in leads if l != g.leading_monomial(order))
    for g in I.generators:
        assert normal_form(g, G).is_zero()


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_colon_soundness(data):
    I = data.draw(ideals(n_max=3, gens_max=3, deg_max=3))
    g = data.draw(homogeneous_polys(I.ring, data.draw(st.integers(1, 2))))
    Q = colon(I, g)
    assert ideal_contains(I, Ideal(I.ring, [g * q for q in Q.generators]))
    assert ideal_contains(Q, I)


@settings(max_examples=80, deadline=None)
@given(ideals(n_max=4, gens_max=3, deg_max=2))
def test_dimension_order_invariant(I):
    assert dimension(I, LEX) == dimension(I, DEGREVLEX)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(n_max=4), monomial_ideals(n_max=4))
def test_monomial_intersection_is_lcms(I, J):
    if I.ring != J.ring:
        return
    lcms = [tuple(max(a, b) for a, b in zip(f.leading_monomial(), g.leading_monomial()))
            for f in I.generators for g in J.generators]
    assert ideal_equal(intersect(I, J), Ideal.from_monomials(I.ring, lcms))
