"""Bernoulli numbers, polynomials, and the power-sum bridge."""

from fractions import Fraction

import pytest

from worpitzky.bernoulli import (
    bernoulli_number,
    bernoulli_poly_eval,
    power_sum,
    worpitzky_d_lhs,
)


def test_small_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(6) == Fraction(1, 42)


def test_odd_numbers_vanish():
    assert all(bernoulli_number(2 * k + 1) == 0 for k in range(1, 8))


def test_poly_at_zero_is_the_number():
    for n in range(11):
        assert bernoulli_poly_eval(n, 0) == bernoulli_number(n)


def test_poly_values():
    assert bernoulli_poly_eval(2, 4) == Fraction(73, 6)  # 16 - 4 + 1/6
    assert bernoulli_poly_eval(1, 1) == Fraction(1, 2)


def test_power_sum():
    assert power_sum(2, 3) == 12
    assert power_sum(5, 0) == 0
    assert power_sum(1, 4) == 4  # 1 * (1^0 + ... + 4^0)


@pytest.mark.parametrize("n", range(2, 11))
@pytest.mark.parametrize("m", range(0, 7))
def test_bridge_identity(n, m):
    bridge = bernoulli_poly_eval(n, m + 1) - bernoulli_number(n)
    assert bridge.denominator == 1
    assert bridge == power_sum(n, m)


@pytest.mark.parametrize("x", [Fraction(3, 7), Fraction(-2, 5), Fraction(11, 2)])
@pytest.mark.parametrize("n", range(1, 9))
def test_forward_difference(n, x):
    assert bernoulli_poly_eval(n, x + 1) - bernoulli_poly_eval(n, x) == n * x ** (n - 1)


def test_type_d_lhs_spot_values():
    assert worpitzky_d_lhs(2, 1) == 5  # 9 - 2*2
    assert worpitzky_d_lhs(3, 1) == 15  # 27 - 4*3
    assert worpitzky_d_lhs(4, 0) == 1
    assert worpitzky_d_lhs(2, 0) == 1


def test_type_d_lhs_requires_n_at_least_two():
    with pytest.raises(ValueError):
        worpitzky_d_lhs(1, 3)
