import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmgroups.exactmath import (Factorization, divisors, euler_phi, factorize,
                                format_rational, is_integer, is_prime, rat,
                                rational_decimal, smallest_prime_divisor,
                                to_integer)


class TestRat:
    def test_reduction(self):
        assert rat(6, 4) == Fraction(3, 2)

    def test_sign_normalization(self):
        q = rat(-2, -4)
        assert q == Fraction(1, 2)
        assert q.denominator == 2

    def test_zero(self):
        q = rat(0, 7)
        assert q.numerator == 0 and q.denominator == 1

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rat(1, 0)

    def test_arithmetic_dic3_spectrum(self):
        # sum of reciprocal orders over the dicyclic group of order 12
        total = rat(1) + rat(1, 2) + rat(2, 3) + rat(6, 4) + rat(2, 6)
        assert total == 4

    def test_inverse_product(self):
        assert rat(1, 3) * rat(3, 1) == 1

    def test_comparison(self):
        assert rat(36, 19) < rat(12, 5)

    def test_division(self):
        assert rat(3, 2) / rat(3, 4) == 2
        with pytest.raises(ZeroDivisionError):
            rat(1, 2) / rat(0, 5)


class TestIntegerPredicate:
    def test_integer(self):
        assert is_integer(rat(4, 1))
        assert to_integer(rat(8, 2)) == 4

    def test_non_integer(self):
        assert not is_integer(rat(24, 7))
        assert not is_integer(rat(16, 5))
        with pytest.raises(ValueError):
            to_integer(rat(24, 7))


@given(st.fractions(), st.fractions(), st.fractions())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


class TestFactorize:
    def test_basic(self):
        assert factorize(12).pairs == ((2, 2), (3, 1))
        assert factorize(1).pairs == ()
        assert factorize(823543).pairs == ((7, 7),)

    def test_errors(self):
        for bad in (0, -5):
            with pytest.raises(ValueError):
                factorize(bad)

    def test_value_roundtrip_full_range(self):
        # reconstruct-from-factorization identity over the whole scan range
        for n in range(1, 1_000_001):
            assert factorize(n).value() == n

    def test_factors_are_prime_and_sorted(self):
        for n in range(1, 20_000):
            f = factorize(n)
            assert all(is_prime(p) for p, _ in f)
            assert list(f.primes()) == sorted(f.primes())

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=1, max_value=10 ** 6))
    def test_value_roundtrip_sampled(self, n):
        f = factorize(n)
        assert f.value() == n
        assert all(is_prime(p) and e >= 1 for p, e in f)

    def test_divisor_count(self):
        assert Factorization(((2, 2), (3, 1))).divisor_count() == 6
        assert factorize(1).divisor_count() == 1

    def test_is_prime_power(self):
        assert factorize(16).is_prime_power()
        assert factorize(7).is_prime_power()
        assert not factorize(12).is_prime_power()
        assert not factorize(1).is_prime_power()


class TestDivisors:
    def test_examples(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]
        assert divisors(49) == [1, 7, 49]


class TestEulerPhi:
    def test_examples(self):
        assert euler_phi(1) == 1
        assert euler_phi(15) == 8
        assert euler_phi(9) == 6

    def test_error(self):
        with pytest.raises(ValueError):
            euler_phi(0)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=1, max_value=3000),
           st.integers(min_value=1, max_value=3000))
    def test_multiplicative_on_coprime(self, a, b):
        if math.gcd(a, b) == 1:
            assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)

    def test_divisor_sum_identity(self):
        # sum over d | n of phi(d) = n
        for n in range(1, 10_001):
            assert sum(euler_phi(d) for d in divisors(n)) == n


class TestSmallestPrimeDivisor:
    def test_examples(self):
        assert smallest_prime_divisor(12) == 2
        assert smallest_prime_divisor(15) == 3
        assert smallest_prime_divisor(49) == 7
        assert smallest_prime_divisor(97) == 97

    def test_error(self):
        with pytest.raises(ValueError):
            smallest_prime_divisor(1)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=2, max_value=10 ** 6))
    def test_matches_factorization(self, n):
        assert smallest_prime_divisor(n) == factorize(n).primes()[0]


class TestRendering:
    def test_format_always_with_denominator(self):
        assert format_rational(rat(4, 1)) == "4/1"
        assert format_rational(rat(24, 7)) == "24/7"
        assert format_rational(rat(-3, 6)) == "-1/2"

    def test_decimal(self):
        assert rational_decimal(rat(24, 7)) == "3.428571"
        assert rational_decimal(rat(24, 7), 3) == "3.429"
        assert rational_decimal(rat(1, 2), 0) == "1"  # rounds half up
        assert rational_decimal(rat(-24, 7), 2) == "-3.43"
        assert rational_decimal(rat(2, 1), 4) == "2.0000"

    def test_decimal_carry(self):
        assert rational_decimal(rat(999999, 1000000), 3) == "1.000"
