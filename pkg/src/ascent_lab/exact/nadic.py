"""Exact elements of Z[1/n], stored as numerator / n**exponent."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, slots=True)
class NAdicFraction:
    """The number ``numerator / base**exponent``.

    Instances are always normalized: either ``exponent == 0`` or ``base``
    does not divide ``numerator``.  Zero is ``(0, 0)``.  Build values with
    :meth:`make`, which normalizes; the raw constructor trusts its input.
    """

    numerator: int
    exponent: int
    base: int

    @classmethod
    def make(cls, numerator: int, exponent: int, base: int) -> "NAdicFraction":
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        if numerator == 0:
            return cls(0, 0, base)
        if exponent < 0:
            return cls(numerator * base ** (-exponent), 0, base)
        while exponent > 0 and numerator % base == 0:
            numerator //= base
            exponent -= 1
        return cls(numerator, exponent, base)

    @classmethod
    def integer(cls, value: int, base: int) -> "NAdicFraction":
        return cls.make(value, 0, base)

    def normalized(self) -> "NAdicFraction":
        return NAdicFraction.make(self.numerator, self.exponent, self.base)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def is_zero(self) -> bool:
        return self.numerator == 0

    def _check(self, other: "NAdicFraction") -> None:
        if other.base != self.base:
            raise ValueError(f"mixed bases {self.base} and {other.base}")

    def __add__(self, other: "NAdicFraction") -> "NAdicFraction":
        self._check(other)
        e = max(self.exponent, other.exponent)
        n = self.base
        num = self.numerator * n ** (e - self.exponent) + other.numerator * n ** (e - other.exponent)
        return NAdicFraction.make(num, e, n)

    def __neg__(self) -> "NAdicFraction":
        return NAdicFraction(-self.numerator, self.exponent, self.base)

    def __sub__(self, other: "NAdicFraction") -> "NAdicFraction":
        return self + (-other)

    def scale(self, k: int) -> "NAdicFraction":
        """Multiply by ``base**k`` (``k`` may be negative)."""
        if self.numerator == 0 or k == 0:
            return self
        return NAdicFraction.make(self.numerator, self.exponent - k, self.base)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.base**self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        if self.exponent == 1:
            return f"{self.numerator}/{self.base}"
        return f"{self.numerator}/{self.base}^{self.exponent}"
