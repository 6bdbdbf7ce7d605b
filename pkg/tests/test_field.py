"""Cyclotomic field: exact arithmetic, inversion, parsing."""

import random
from fractions import Fraction

import pytest

from trigbethe.field import (DEFAULT_FIELD_ORDER, CyclotomicField,
                             cyclotomic_polynomial)


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_field_is_interned():
    assert CyclotomicField(6) is CyclotomicField(6)
    assert CyclotomicField(6) is not CyclotomicField(12)
    assert isinstance(CyclotomicField(6), CyclotomicField)


def test_default_order_six_identities():
    F = CyclotomicField(DEFAULT_FIELD_ORDER)
    z = F.zeta()
    assert (z ** 6).is_one()
    for k in range(1, 6):
        assert not (z ** k).is_one()
    # minimal polynomial z^2 - z + 1 = 0, hence z + 1/z = 1
    assert z * z - z + 1 == 0
    assert z + z ** -1 == 1


def test_roots_of_unity_by_divisor():
    F = CyclotomicField(6)
    for k in (1, 2, 3, 6):
        w = F.root_of_unity(k)
        assert (w ** k).is_one()
        for j in range(1, k):
            assert not (w ** j).is_one()
    with pytest.raises(ValueError, match="enlarge the field order"):
        F.root_of_unity(4)
    F12 = CyclotomicField(12)
    assert (F12.root_of_unity(4) ** 4).is_one()


def test_field_axioms_random():
    F = CyclotomicField(6)
    rng = random.Random(20260814)

    def rand_elem():
        return F.element([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(F.degree)])

    for _ in range(1000):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert (a * a.inverse()).is_one()
            assert a ** -2 == (a.inverse()) ** 2


def test_rational_detection_and_coercion():
    F = CyclotomicField(6)
    x = F.from_rational(Fraction(-7, 3))
    assert x.is_rational() and x.as_rational() == Fraction(-7, 3)
    assert not F.zeta().is_rational()
    with pytest.raises(ValueError):
        F.zeta().as_rational()
    assert F.coerce(5) == F.from_rational(Fraction(5))
    assert F.coerce(F.zeta()) is F.zeta() or F.coerce(F.zeta()) == F.zeta()


def test_int_and_fraction_mixing():
    F = CyclotomicField(6)
    z = F.zeta()
    assert 1 + z == z + 1
    assert 2 * z - z == z
    assert (z / 2) * 2 == z
    assert Fraction(1, 2) + z == z + Fraction(1, 2)
    assert sum([z, z, F.one()]) == 2 * z + 1


def test_str_parse_roundtrip_random():
    F = CyclotomicField(6)
    rng = random.Random(7)
    for _ in range(200):
        x = F.element([Fraction(rng.randint(-20, 20), rng.randint(1, 12))
                       for _ in range(F.degree)])
        assert F.parse(str(x)) == x
    assert F.parse("1/2 - 3*z") == F.from_rational(Fraction(1, 2)) - 3 * F.zeta()
    assert F.parse("0") == F.zero()


def test_pow_modulus_reduction():
    # z^2 reduces to z - 1 at order 6: coefficients stay in degree < 2
    F = CyclotomicField(6)
    z = F.zeta()
    assert z ** 2 == z - 1
    assert F.zeta(2) == z - 1
    assert len(z.coeffs) == F.degree


def test_cross_field_operations_rejected():
    a = CyclotomicField(6).zeta()
    b = CyclotomicField(12).zeta()
    with pytest.raises((ValueError, TypeError)):
        a + b


def test_hashable_and_equal():
    F = CyclotomicField(6)
    z = F.zeta()
    assert len({z, z + 0, z * 1}) == 1
    assert {F.one(): "u"}[F.from_rational(Fraction(1))] == "u"
