"""Tests for exact real algebraic number arithmetic."""

from fractions import Fraction as F

import pytest

from weilzeta.errors import DivisionByZero, InvalidInterval, NotIrreducible
from weilzeta.realalg import (
    RealNumberField,
    minimal_polynomial,
    same_number,
)


def test_constructor_validates_minpoly_and_interval():
    with pytest.raises(NotIrreducible):
        RealNumberField((-4, 0, 1), (F(1), F(3)))
    with pytest.raises(InvalidInterval):
        RealNumberField((-2, 0, 1), (F(2), F(3)))
    with pytest.raises(InvalidInterval):
        RealNumberField((-2, 0, 1), (F(-2), F(2)))


def test_quadratic_rejects_perfect_squares():
    with pytest.raises(NotIrreducible):
        RealNumberField.quadratic(4)
    with pytest.raises(NotIrreducible):
        RealNumberField.quadratic(0)


def test_sqrt2_squares_to_two():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    assert r2 * r2 == K.from_rational(F(2))
    assert (r2 * r2 - K.from_rational(F(2))).is_zero()


def test_sqrt2_decimal_and_interval():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    assert r2.decimal_str(30) == "1.41421356237309504880168872421"
    lo, hi = r2.interval()
    assert lo < hi
    assert lo * lo < 2 < hi * hi


def test_comparisons_are_exact():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    assert r2 < K.from_rational(F(3, 2))
    assert r2 > K.from_rational(F(7, 5))
    assert K.from_rational(F(239, 169)) < r2 < K.from_rational(F(577, 408))


def test_sign_and_floor():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    assert (r2 - K.from_rational(F(3, 2))).sign() == -1
    assert (r2 - r2).sign() == 0
    assert r2.sign() == 1
    assert (K.from_rational(F(10)) * r2).floor() == 14
    assert (-(K.from_rational(F(10)) * r2)).floor() == -15


def test_inverse_and_division_by_zero():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    assert r2.inverse() * r2 == K.one()
    # 1/sqrt(2) = sqrt(2)/2
    assert r2.inverse() == K.element((F(0), F(1, 2)))
    with pytest.raises(DivisionByZero):
        K.zero().inverse()


def test_field_operations_mixed_with_rationals():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    x = K.one() + r2
    assert (x - K.one()) == r2
    assert x * (K.one() - r2) * K.from_rational(F(-1)) == K.one()
    assert minimal_polynomial(x) == (-1, -2, 1)


def test_is_rational_and_as_fraction():
    K = RealNumberField.quadratic(2)
    assert not K.gen().is_rational()
    v = K.from_rational(F(7, 3))
    assert v.is_rational()
    assert v.as_fraction() == F(7, 3)


def test_rationals_field_degenerate_case():
    Q = RealNumberField.rationals()
    assert Q.gen().as_fraction() == F(0)
    assert (Q.one() + Q.one()).as_fraction() == F(2)
    assert Q.from_rational(F(-5, 2)).floor() == -3


def test_minimal_polynomial_is_primitive_with_positive_leading():
    K = RealNumberField.quadratic(2)
    assert minimal_polynomial(K.gen()) == (-2, 0, 1)
    assert minimal_polynomial(K.from_rational(F(3, 2))) == (-3, 2)
    # 10*sqrt(2) has minimal polynomial x^2 - 200
    assert minimal_polynomial(K.from_rational(F(10)) * K.gen()) == (-200, 0, 1)


def test_same_number_across_representations():
    K1 = RealNumberField.quadratic(2)
    K2 = RealNumberField.quadratic(2)
    assert same_number(K1.gen(), K2.gen())
    assert same_number((K1.one() + K1.gen()) - K1.one(), K2.gen())
    assert not same_number(K1.gen(), RealNumberField.quadratic(3).gen())
    assert not same_number(K1.gen(), K1.from_rational(F(141, 100)))


def test_refine_to_width_shrinks_interval():
    K = RealNumberField.quadratic(2)
    r2 = K.gen()
    r2.refine_to_width(F(1, 10**12))
    lo, hi = r2.interval()
    assert hi - lo <= F(1, 10**12)


def test_golden_ratio_arithmetic():
    K = RealNumberField.quadratic(5)
    phi = K.element((F(1, 2), F(1, 2)))
    # phi^2 = phi + 1
    assert phi * phi == phi + K.one()
    assert minimal_polynomial(phi) == (-1, -1, 1)
    assert phi.decimal_str(10) == "1.618033989"
