from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from scheme_spectra.errors import DomainError
from scheme_spectra.exact import (
    HalfInt,
    binom,
    gauss_binom,
    gauss_binom_pascal,
    is_prime_power,
    pow_halfint,
    qint,
    sign,
)


def test_gauss_binom_small_values():
    # [4 over 2]_2 counts the 2-subspaces of F_2^4
    assert gauss_binom(4, 2, 2) == 35
    assert gauss_binom(5, 2, 3) == 1210
    assert gauss_binom(6, 3, 1) == 20
    assert gauss_binom(3, 5, 2) == 0
    assert gauss_binom(3, -1, 2) == 0


def test_negative_base():
    # base -q occurs for Hermitian forms; [2 over 1]_{-2} = 1 + (-2)
    assert gauss_binom(2, 1, -2) == -1
    assert gauss_binom(3, 1, -2) == 3
    assert gauss_binom(4, 2, -2) == 15
    assert gauss_binom(4, 2, -2) == gauss_binom_pascal(4, 2, -2)


def test_forbidden_bases():
    for b in (0, -1):
        with pytest.raises(DomainError):
            gauss_binom(3, 1, b)
    with pytest.raises(DomainError):
        binom(-1, 0)


def test_qint():
    assert qint(5, 1) == 5
    assert qint(4, 2) == 15
    assert qint(3, -3) == 7


@given(st.integers(0, 12), st.integers(-1, 13), st.sampled_from([-5, -4, -3, -2, 1, 2, 3, 4, 5, 7]))
def test_gauss_binom_two_algorithms_agree(n, m, b):
    assert gauss_binom(n, m, b) == gauss_binom_pascal(n, m, b)


@given(st.integers(1, 12), st.integers(0, 12), st.sampled_from([-4, -2, 2, 3, 4]))
def test_gauss_binom_symmetry_and_pascal(n, m, b):
    m = min(m, n)
    assert gauss_binom(n, m, b) == gauss_binom(n, n - m, b)
    if 1 <= m <= n - 1:
        # the other Pascal rule: [n over m] = [n-1 over m-1] b^(n-m) + [n-1 over m]
        assert gauss_binom(n, m, b) == gauss_binom(n - 1, m - 1, b) * b ** (n - m) + gauss_binom(n - 1, m, b)


@given(st.integers(0, 30), st.integers(0, 30))
def test_base_one_is_binomial(n, m):
    assert gauss_binom(n, m, 1) == (comb(n, m) if m <= n else 0)


def test_halfint():
    h = HalfInt.of("3/2")
    assert h.twice == 3 and not h.is_integer and h.value == Fraction(3, 2)
    assert str(h) == "3/2" and str(HalfInt.of(2)) == "2"
    assert (h + 1).value == Fraction(5, 2)
    assert (h * 2).value == 3
    assert h.floor() == 1
    with pytest.raises(DomainError):
        HalfInt.of(Fraction(1, 3))


def test_pow_halfint():
    assert pow_halfint(4, HalfInt.of("1/2")) == 2
    assert pow_halfint(9, HalfInt.of("5/2")) == 243
    assert pow_halfint(3, 2) == 9
    with pytest.raises(DomainError):
        pow_halfint(2, HalfInt.of("1/2"))


def test_prime_powers_and_sign():
    assert [q for q in range(1, 30) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert (sign(-3), sign(0), sign(Fraction(1, 7))) == (-1, 0, 1)
