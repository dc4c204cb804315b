"""Brute-force oracles, deliberately independent of the package's code paths."""

from fractions import Fraction
from math import comb, factorial, prod


def vp_int(n, p):
    if n == 0:
        return None
    n, v = abs(n), 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(q, p):
    """Valuation by repeated division; None stands for zero."""
    q = Fraction(q)
    if q == 0:
        return None
    return vp_int(q.numerator, p) - vp_int(q.denominator, p)


def poch(x, k):
    return prod((Fraction(x) + i for i in range(k)), start=Fraction(1))


def series(top, bottom, z, n):
    """Direct term-by-term sum, every Pochhammer recomputed from scratch."""
    total = Fraction(0)
    for k in range(n + 1):
        num = prod((poch(x, k) for x in top), start=Fraction(1)) * Fraction(z) ** k
        den = prod((poch(y, k) for y in bottom), start=Fraction(1)) * factorial(k)
        total += num / den
    return total


def binom_int(x, k):
    """binom(x, k) for any integer x, using only math.comb."""
    if x >= 0:
        return comb(x, k)
    return (-1) ** k * comb(k - x - 1, k)


def alternating_binomial_power_sum(x, e, n):
    return sum((-1) ** k * binom_int(x, k) ** e for k in range(n + 1))


def harmonic(n):
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0:2] = [False, False]
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = [False] * len(sieve[i * i::i])
    return [i for i, b in enumerate(sieve) if b]
