"""Exact integer and rational helpers, including Gaussian binomials.

Python ints are the big integers and :class:`fractions.Fraction` the big
rationals; nothing in this module touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "HalfInt",
    "binom",
    "gauss_binom",
    "gauss_binom_pascal",
    "qint",
    "pow_halfint",
    "is_prime_power",
    "sign",
]


@dataclass(frozen=True, order=True)
class HalfInt:
    """A half-integer stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        value = Fraction(value)
        if (2 * value).denominator != 1:
            raise DomainError(f"{value} is not a half-integer")
        return cls(int(2 * value))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __mul__(self, k: int) -> "HalfInt":
        return HalfInt(self.twice * k)

    __rmul__ = __mul__

    def floor(self) -> int:
        return self.twice // 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def sign(x) -> int:
    return (x > 0) - (x < 0)


def binom(n: int, k: int) -> int:
    """Ordinary binomial coefficient with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise DomainError(f"binom: negative upper index n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def gauss_binom(n: int, m: int, b: int) -> int:
    """Generalized binomial [n over m] in base ``b``.

    Zero for ``m < 0``, the ordinary binomial for ``b == 1`` and otherwise
    the product of ``(b**(n-h) - 1) / (b**(m-h) - 1)`` for ``h < m``. The
    product is formed in exact rationals and must come out integral.
    """
    if m < 0:
        return 0
    if n < 0:
        raise DomainError(f"gauss_binom: negative upper index n={n}")
    if b == 1:
        return binom(n, m)
    if m == 0:
        return 1
    if b in (0, -1):
        raise DomainError(f"gauss_binom: base b={b} is not allowed (b must differ from 0 and -1)")
    if m > n:
        return 0
    value = Fraction(1)
    for h in range(m):
        value *= Fraction(b ** (n - h) - 1, b ** (m - h) - 1)
    if value.denominator != 1:
        raise ArithmeticError(f"gauss_binom({n}, {m}, {b}) is not integral: {value}")
    return value.numerator


def gauss_binom_pascal(n: int, m: int, b: int) -> int:
    """Same value as :func:`gauss_binom`, via the b-Pascal rule in integers only.

    Uses [k over r] = b**r [k-1 over r] + [k-1 over r-1].
    """
    if m < 0:
        return 0
    if n < 0:
        raise DomainError(f"gauss_binom_pascal: negative upper index n={n}")
    if m > n:
        return 0
    if b in (0, -1) and m >= 1:
        raise DomainError(f"gauss_binom_pascal: base b={b} is not allowed")
    row = [1] + [0] * m
    for k in range(1, n + 1):
        for r in range(min(k, m), 0, -1):
            row[r] = b**r * row[r] + row[r - 1]
    return row[m]


def qint(n: int, b: int) -> int:
    """[n over 1] in base ``b``; equals n when b == 1."""
    return gauss_binom(n, 1, b)


def pow_halfint(q: int, exponent) -> int:
    """``q ** e`` for a nonnegative half-integer ``e``.

    Half-integral exponents only occur for the unitary polar spaces, where
    ``q`` is the square of a prime power, so an odd ``2e`` needs a square ``q``.
    """
    e = HalfInt.of(exponent)
    if q < 2:
        raise DomainError(f"pow_halfint: base q={q} must be at least 2")
    if e.twice < 0:
        raise DomainError(f"pow_halfint: negative exponent {e}")
    if e.is_integer:
        return q ** (e.twice // 2)
    root = math.isqrt(q)
    if root * root != q:
        raise DomainError(
            f"half-integral exponent {e} needs q to be a perfect square "
            f"(unitary polar spaces have q the square of a prime power), got q={q}"
        )
    return root**e.twice


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True
