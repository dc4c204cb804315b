"""Exact numeric substrate: rationals, residues modulo prime powers, p-adic valuations.

Rationals are plain :class:`fractions.Fraction` objects (always in lowest terms,
positive denominator, zero stored as 0/1).  Residues carry their modulus and
refuse to mix with residues of a different modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

#: Valuation of zero.  Compares greater than every integer.
INFINITY = math.inf


class NotInvertible(ArithmeticError):
    """Raised when a residue shares a factor with its modulus."""


class DenominatorNotCoprime(ArithmeticError):
    """Raised when a rational cannot be reduced because p divides its denominator."""


class ModulusMismatch(ValueError):
    pass


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-1/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of Z/modulus, stored as its least non-negative representative."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> Residue:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"cannot combine residues mod {self.modulus} and mod {other.modulus}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Residue(other % self.modulus, self.modulus)
        if isinstance(other, Fraction):
            return reduce_mod(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue((self.value + other.value) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue((self.value - other.value) % self.modulus, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value * other.value % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value % self.modulus, self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * mod_inv(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * mod_inv(self)

    def __pow__(self, k: int):
        if k < 0:
            return Residue(pow(mod_inv(self).value, -k, self.modulus), self.modulus)
        return Residue(pow(self.value, k, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def mod_inv(x: Residue) -> Residue:
    """Multiplicative inverse of a unit residue."""
    if math.gcd(x.value, x.modulus) != 1:
        raise NotInvertible(f"{x.value} is not a unit mod {x.modulus}")
    return Residue(pow(x.value, -1, x.modulus), x.modulus)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    # strip large powers first so huge numerators with high valuation stay cheap
    pk, k = p, 1
    while n % pk == 0:
        n //= pk
        v += k
        pk, k = pk * pk, k * 2
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_valuation(q, p: int):
    """Exponent of p in q; ``INFINITY`` for zero, negative if p divides the denominator."""
    q = as_rational(q)
    if q == 0:
        return INFINITY
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def residue_valuation(x: Residue, p: int):
    """Valuation of a residue mod p^e, capped at e.

    Returns ``(v, exact)``; ``exact`` is False when the residue is zero, in which
    case ``v == e`` is only a lower bound for any lift.
    """
    if x.value == 0:
        e = _int_valuation(x.modulus, p)
        return e, False
    return _int_valuation(x.value, p), True


def reduce_mod(q, modulus: int) -> Residue:
    """Image of a rational with unit denominator in Z/modulus."""
    q = as_rational(q)
    den = q.denominator
    if math.gcd(den, modulus) != 1:
        raise DenominatorNotCoprime(f"denominator {den} is not invertible mod {modulus}")
    return Residue(q.numerator * pow(den, -1, modulus) % modulus, modulus)


def is_p_integral(q, p: int) -> bool:
    return as_rational(q).denominator % p != 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def odd_primes(lo: int, hi: int) -> list[int]:
    """Odd primes in the closed interval [lo, hi]."""
    return [n for n in range(max(lo, 3), hi + 1) if n % 2 and is_prime(n)]
