"""Exact arbitrary-precision rationals, normalized at construction."""

from __future__ import annotations

import math
from dataclasses import dataclass


class DivisionByZero(ArithmeticError):
    """Recoverable error value for inverting zero or a zero denominator."""


@dataclass(frozen=True, repr=False)
class Rational:
    """A fraction of Python ints with denominator > 0 and gcd(|num|, den) = 1."""

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        n, d = self.numerator, self.denominator
        if d == 0:
            raise DivisionByZero("zero denominator")
        if d < 0:
            n, d = -n, -d
        g = math.gcd(n, d)  # gcd(0, d) == d, so every zero normalizes to 0/1
        if g > 1:
            n //= g
            d //= g
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "denominator", d)

    @classmethod
    def _raw(cls, numerator: int, denominator: int) -> Rational:
        """Bypass normalization. Only for law-violation tests."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "numerator", numerator)
        object.__setattr__(obj, "denominator", denominator)
        return obj

    def plus(self, right: Rational) -> Rational:
        return Rational(
            self.numerator * right.denominator + right.numerator * self.denominator,
            self.denominator * right.denominator,
        )

    def times(self, right: Rational) -> Rational:
        return Rational(self.numerator * right.numerator, self.denominator * right.denominator)

    def add_inv(self) -> Rational:
        return Rational(-self.numerator, self.denominator)

    def mult_inv(self) -> Rational:
        if self.numerator == 0:
            raise DivisionByZero("multiplicative inverse of zero")
        return Rational(self.denominator, self.numerator)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def __repr__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


ZERO = Rational(0)
ONE = Rational(1)
