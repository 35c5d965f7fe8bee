"""Exact rational arithmetic and elementary number theory.

Every group statistic in this package (m, h_m, bounds) is an exact
rational; floats never enter a computation path.  ``Rational`` is the
stdlib :class:`fractions.Fraction`, which already keeps the canonical
form we rely on: reduced, denominator positive.  Decimal renderings are
produced by integer long division, display-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(num: int, den: int = 1) -> Rational:
    """Exact fraction num/den in canonical form; den must be nonzero."""
    return Fraction(num, den)


def is_integer(q: Rational) -> bool:
    return q.denominator == 1


def to_integer(q: Rational) -> int:
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return q.numerator


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((p1, e1), (p2, e2), ...) with p1 < p2 < ..."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p ** e
        return n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def divisor_count(self) -> int:
        n = 1
        for _, e in self.pairs:
            n *= e + 1
        return n

    def is_prime_power(self) -> bool:
        return len(self.pairs) == 1

    def __iter__(self):
        return iter(self.pairs)


def is_prime(n: int) -> bool:
    """Trial division primality test, adequate at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    limit = math.isqrt(n)
    while f <= limit:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division; n = 1 gives the empty product."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    pairs = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                pairs.append((p, e))
        f += 6
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = 1
    for p, e in factorize(n):
        result *= (p - 1) * p ** (e - 1)
    return result


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError(f"smallest_prime_divisor needs n >= 2, got {n}")
    for p in (2, 3):
        if n % p == 0:
            return p
    f = 5
    while f * f <= n:
        if n % f == 0:
            return f
        if n % (f + 2) == 0:
            return f + 2
        f += 6
    return n


def format_rational(q: Rational) -> str:
    """Canonical "num/den" rendering, denominator always present."""
    return f"{q.numerator}/{q.denominator}"


def rational_decimal(q: Rational, digits: int = 6) -> str:
    """Decimal approximation with `digits` places, by integer long division.

    Rounding is half-up on the last digit; no floats involved.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    sign = "-" if q < 0 else ""
    num, den = abs(q.numerator), q.denominator
    scale = 10 ** digits
    scaled, rem = divmod(num * scale, den)
    if 2 * rem >= den:
        scaled += 1
    whole, frac = divmod(scaled, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
