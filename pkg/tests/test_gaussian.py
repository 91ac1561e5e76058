"""Exactness of the Gaussian-rational arithmetic."""

from fractions import Fraction

import pytest

from pseudocurve.gaussian import GaussianRational as GR


def test_construction_normalizes_to_fractions():
    z = GR.of("1/3", 2)
    assert z.re == Fraction(1, 3)
    assert z.im == Fraction(2)


def test_field_operations_are_exact():
    a = GR.of(Fraction(1, 3), Fraction(1, 7))
    b = GR.of(Fraction(-2, 5), Fraction(3))
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * a.inverse() == GR.of(1)


def test_conjugate_and_norm():
    z = GR.of(3, -4)
    assert z.conjugate() == GR.of(3, 4)
    assert z.norm_sq() == Fraction(25)
    assert (z * z.conjugate()).re == Fraction(25)


def test_powers():
    i = GR.of(0, 1)
    assert i ** 2 == GR.of(-1)
    assert i ** 3 == GR.of(0, -1)
    assert i ** 0 == GR.of(1)
    assert (GR.of(2) ** -2).re == Fraction(1, 4)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        GR.of(0).inverse()


def test_quad_serialization_roundtrip():
    z = GR.of(Fraction(-7, 12), Fraction(5, 9))
    assert GR.from_quad(z.to_quad()) == z
    assert z.to_quad() == ["-7", "12", "5", "9"]


def test_complex_conversion():
    assert complex(GR.of(Fraction(1, 2), Fraction(-3, 4))) == 0.5 - 0.75j
