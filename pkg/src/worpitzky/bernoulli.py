"""Exact Bernoulli numbers, Bernoulli polynomials and the power-sum bridge.

Everything is exact rational arithmetic; no floating point.  The numbers
follow the convention with first-order value -1/2, computed from the
defining recurrence sum_{k=0}^{n} C(n+1, k) * bern(k) = 0 for n >= 1.

The bridge used by the type-D identity is

    bernoulli_poly(n, m+1) - bernoulli_number(n) = n * (1^(n-1) + ... + m^(n-1))

for n >= 2, which lets the same left-hand side be computed along two
independent routes (Bernoulli values vs. plain power sums).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import binom


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """n-th Bernoulli number (convention: value -1/2 at n=1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(n):
        acc += binom(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


def bernoulli_poly_eval(n: int, x: Fraction | int) -> Fraction:
    """Value of the n-th Bernoulli polynomial at a rational point."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += binom(n, k) * bernoulli_number(k) * x ** (n - k)
    return acc


def power_sum(n: int, m: int) -> int:
    """n * (1^(n-1) + 2^(n-1) + ... + m^(n-1)) as an exact integer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    return n * sum(j ** (n - 1) for j in range(1, m + 1))


def worpitzky_d_lhs(n: int, m: int) -> int:
    """Left side of the type-D identity at q=1, computed two ways.

    Route one uses Bernoulli values, route two plain power sums; they must
    agree exactly and the result is an integer.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    via_bernoulli = (1 + 2 * m) ** n - 2 ** (n - 1) * (
        bernoulli_poly_eval(n, m + 1) - bernoulli_number(n)
    )
    via_power_sum = (1 + 2 * m) ** n - 2 ** (n - 1) * power_sum(n, m)
    if via_bernoulli != via_power_sum:
        raise ArithmeticError(
            f"Bernoulli and power-sum routes disagree at n={n}, m={m}: "
            f"{via_bernoulli} vs {via_power_sum}"
        )
    if via_bernoulli.denominator != 1:
        raise ArithmeticError(f"non-integral value {via_bernoulli} at n={n}, m={m}")
    return int(via_bernoulli)
