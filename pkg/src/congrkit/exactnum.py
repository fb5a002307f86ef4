"""Exact arithmetic primitives.

Integers are plain Python ints (arbitrary precision), rationals are
fractions.Fraction values, which are kept in lowest terms by construction.
Nothing in this module or its callers ever touches floating point.

Conventions that matter downstream:

* binomial(n, k) is the generalized coefficient prod_{j<k} (n - j) / k!,
  defined for every integer n and natural k.  For negative n it satisfies
  binomial(-n, k) = (-1)**k * binomial(n + k - 1, k).
* central_binomial_over_2k_minus_1(0) == -1 (the k = 0 term carries the
  sign of the 2k - 1 = -1 denominator); for k >= 1 the value is the
  integer binomial(2k, k) // (2k - 1) == 2 * catalan(k - 1).
* bernoulli_number follows the B(1) = -1/2 convention; values come from
  the recurrence sum_{j<=m} binomial(m+1, j) * B(j) == 0 with B(0) == 1.
* two_square_decompose(p) normalizes the odd part x of p = x**2 + y**2 to
  x == 1 (mod 4) (sign choice) and returns y even and positive.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

__all__ = [
    "DenominatorNotInvertible",
    "ResidueClass",
    "TwoSquareDecomposition",
    "bernoulli_number",
    "bernoulli_poly_eval",
    "binomial",
    "catalan",
    "central_binomial_over_2k_minus_1",
    "is_prime",
    "legendre_symbol",
    "pow_compare",
    "primes_up_to",
    "residue_of_rational",
    "residues_congruent",
    "two_square_decompose",
]

Rational = Union[int, Fraction]


class DenominatorNotInvertible(ArithmeticError):
    """A rational has no residue mod p**e because p divides its denominator."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the desk-scale inputs used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit, ascending."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, limit + 1) if sieve[p]]


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient for any integer n and natural k."""
    if k < 0:
        raise ValueError("binomial: k must be >= 0, got %r" % (k,))
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    value = math.comb(-n + k - 1, k)
    return -value if k % 2 else value


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan: k must be >= 0, got %r" % (k,))
    return math.comb(2 * k, k) // (k + 1)


def central_binomial_over_2k_minus_1(k: int) -> int:
    """binomial(2k, k) / (2k - 1), which is an integer for every k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0, got %r" % (k,))
    if k == 0:
        return -1
    return math.comb(2 * k, k) // (2 * k - 1)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p), p an odd prime, via Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError("legendre_symbol: %r is not an odd prime" % (p,))
    r = pow(a % p, (p - 1) // 2, p)
    return r - p if r == p - 1 else r


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_number(m: int) -> Fraction:
    """B(m) with B(1) = -1/2, from sum_{j<=m} binomial(m+1, j) B(j) == 0."""
    if m < 0:
        raise ValueError("bernoulli_number: m must be >= 0, got %r" % (m,))
    while len(_BERNOULLI) <= m:
        i = len(_BERNOULLI)
        # odd-index values beyond B(1) are zero, so skip them as addends
        acc = Fraction(0)
        for j in range(i):
            bj = _BERNOULLI[j]
            if bj:
                acc += math.comb(i + 1, j) * bj
        _BERNOULLI.append(-acc / (i + 1))
    return _BERNOULLI[m]


def bernoulli_poly_eval(m: int, x: Rational) -> Fraction:
    """Value of the m-th Bernoulli polynomial at a rational point."""
    if m < 0:
        raise ValueError("bernoulli_poly_eval: m must be >= 0, got %r" % (m,))
    bernoulli_number(m)  # warm the cache through index m
    x = Fraction(x)
    # Horner for sum_k binomial(m, k) B(k) x^(m-k): ascending k so that
    # B(0) picks up the full power x^m
    acc = Fraction(0)
    for k in range(m + 1):
        acc = acc * x + math.comb(m, k) * _BERNOULLI[k]
    return acc


@dataclass(frozen=True)
class TwoSquareDecomposition:
    p: int
    x: int  # odd, x == 1 (mod 4)
    y: int  # even, y > 0


def two_square_decompose(p: int) -> TwoSquareDecomposition:
    """Write the prime p == 1 (mod 4) as x**2 + y**2, normalized as above."""
    if not is_prime(p):
        raise ValueError("two_square_decompose: %r is not prime" % (p,))
    if p % 4 != 1:
        raise ValueError("two_square_decompose: %r is not 1 mod 4" % (p,))
    for t in range(1, math.isqrt(p) + 1):
        rest = p - t * t
        r = math.isqrt(rest)
        if r * r == rest:
            odd, even = (t, r) if t % 2 else (r, t)
            x = odd if odd % 4 == 1 else -odd
            return TwoSquareDecomposition(p, x, even)
    raise AssertionError("unreachable: every prime 1 mod 4 is a sum of two squares")


@dataclass(frozen=True)
class ResidueClass:
    """An element of Z / p**e Z, stored as the least nonnegative representative."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0


def residue_of_rational(r: Rational, p: int, e: int = 1) -> ResidueClass:
    """Reduce an exact rational mod p**e; the denominator must be prime to p."""
    if e < 1:
        raise ValueError("residue_of_rational: e must be >= 1, got %r" % (e,))
    if not is_prime(p):
        raise ValueError("residue_of_rational: %r is not prime" % (p,))
    r = Fraction(r)
    if r.denominator % p == 0:
        raise DenominatorNotInvertible(
            "denominator %d is divisible by %d" % (r.denominator, p)
        )
    modulus = p**e
    value = r.numerator * pow(r.denominator, -1, modulus) % modulus
    return ResidueClass(value, modulus)


def residues_congruent(a: Rational, b: Rational, p: int, e: int = 1) -> bool:
    """True iff a == b mod p**e after exact evaluation of both sides."""
    return residue_of_rational(Fraction(a) - Fraction(b), p, e).is_zero()


def pow_compare(a: int, ea: int, b: int, eb: int) -> int:
    """Compare a**ea with b**eb for positive ints, returning -1, 0 or 1.

    Uses exact truncated-mantissa interval bounds so that astronomically
    large powers are almost never materialized; falls back to the full
    exact powers only when the brackets overlap.
    """
    if a <= 0 or b <= 0:
        raise ValueError("pow_compare expects positive bases")
    for bits in (64, 256, 1024):
        sa = max(a.bit_length() - bits, 0)
        sb = max(b.bit_length() - bits, 0)
        lo_a, hi_a = (a >> sa) ** ea, ((a >> sa) + 1) ** ea
        lo_b, hi_b = (b >> sb) ** eb, ((b >> sb) + 1) ** eb
        pa, pb = sa * ea, sb * eb
        if pa >= pb:
            lo_a <<= pa - pb
            hi_a <<= pa - pb
        else:
            lo_b <<= pb - pa
            hi_b <<= pb - pa
        if lo_a > hi_b:
            return 1
        if hi_a < lo_b:
            return -1
    x, y = a**ea, b**eb
    return (x > y) - (x < y)


def iter_primes() -> Iterator[int]:
    """Unbounded ascending prime iterator (trial division)."""
    n = 2
    while True:
        if is_prime(n):
            yield n
        n += 1 if n == 2 else 2
