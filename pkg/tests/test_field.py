from fractions import Fraction

import pytest
from hypothesis import given

from bettikit.errors import BadCharacteristic, DivisionByZero, MixedFields
from bettikit.field import FieldElement, FieldSpec, default_field, sqrt_minus_one

from strategies import field_and_elements


def test_gf5_product():
    f = FieldSpec.prime(5)
    assert f.mul(3, 4) == 2
    assert FieldElement(f, 3) * FieldElement(f, 4) == FieldElement(f, 2)


def test_rational_sum():
    q = FieldSpec.rationals()
    assert q.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


@pytest.mark.parametrize("spec", [FieldSpec.rationals(), FieldSpec.prime(7)])
def test_self_division(spec):
    for x in (1, 3, 6):
        assert spec.div(spec.convert(x), spec.convert(x)) == spec.one


def test_prime_values_are_reduced():
    f = FieldSpec.prime(7)
    assert f.convert(-1) == 6
    assert f.convert(Fraction(1, 2)) == 4
    assert FieldElement(f, 15).value == 1


def test_rationals_lowest_terms():
    q = FieldSpec.rationals()
    x = q.convert(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)


@pytest.mark.parametrize("p, expected", [(5, 2), (13, 5), (17, 4), (29, 12)])
def test_sqrt_minus_one(p, expected):
    r = sqrt_minus_one(FieldSpec.prime(p))
    assert r.value == expected
    assert (r.value * r.value + 1) % p == 0


@pytest.mark.parametrize("p", [3, 7, 11, 19])
def test_sqrt_minus_one_absent(p):
    assert sqrt_minus_one(FieldSpec.prime(p)) is None


def test_errors():
    f = FieldSpec.prime(5)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        FieldSpec.rationals().div(1, 0)
    with pytest.raises(MixedFields):
        FieldElement(f, 1) + FieldElement(FieldSpec.prime(7), 1)
    for bad in (4, 1, -3, 2**31 + 11):
        with pytest.raises(BadCharacteristic):
            FieldSpec.from_characteristic(bad)


def test_parse_and_default(monkeypatch):
    assert FieldSpec.parse("qq") == FieldSpec.rationals()
    assert FieldSpec.parse("gf13") == FieldSpec.prime(13)
    monkeypatch.delenv("BETTIKIT_FIELD", raising=False)
    assert default_field() == FieldSpec.prime(32003)
    monkeypatch.setenv("BETTIKIT_FIELD", "qq")
    assert default_field() == FieldSpec.rationals()


@given(field_and_elements())
def test_field_axioms(data):
    f, (a, b, c) = data
    a, b, c = (f.convert(x) for x in (a, b, c))
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    assert f.sub(a, b) == f.add(a, f.neg(b))
    if a != f.zero:
        assert f.mul(a, f.inv(a)) == f.one
    assert f.convert(f.to_signed(a)) == a
