"""Combinatorial primitives and the truncated hypergeometric evaluator.

Everything here works on exact rationals.  ``rising`` and ``trunc_hyper`` also
run over :class:`~hypercong.exactnum.Residue` arithmetic, which is the fast path
used by prime sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactnum import Residue, as_rational, reduce_mod


class NonTerminating(ValueError):
    """No top parameter is a non-positive integer, so the full series is infinite."""


def rising(x, k: int):
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.

    Works for ints, Fractions and Residues; the result has the type of ``x``
    (ints are promoted to Fraction).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(x, Residue):
        out = Residue(1, x.modulus)
    else:
        x = as_rational(x)
        out = Fraction(1)
    for i in range(k):
        out = out * (x + i)
    return out


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0 and, by convention, H_{-1} = 0."""
    if n < -1:
        raise ValueError("harmonic numbers are defined here for n >= -1")
    if n <= 0:
        return Fraction(0)
    return harmonic(n - 1) + Fraction(1, n)


def binomial(x, k: int) -> Fraction:
    """Generalized binomial coefficient via binom(x, k) = (-1)^k (-x)_k / k!."""
    x = as_rational(x)
    if k < 0:
        raise ValueError("k must be non-negative")
    return (-1) ** k * rising(-x, k) / rising(1, k)


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    return comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class HyperSeriesSpec:
    """Parameters of the truncated series (q+1)F(q)[top; bottom | z]_n."""

    top: tuple
    bottom: tuple
    z: Fraction = Fraction(1)
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(as_rational(t) for t in self.top))
        object.__setattr__(self, "bottom", tuple(as_rational(b) for b in self.bottom))
        object.__setattr__(self, "z", as_rational(self.z))
        if len(self.top) != len(self.bottom) + 1:
            raise ValueError(
                f"need one more top parameter than bottom ({len(self.top)} vs {len(self.bottom)})")
        if self.n < 0:
            raise ValueError("truncation index must be non-negative")


def _to_ring(x, modulus):
    return x if modulus is None else reduce_mod(x, modulus)


def trunc_hyper(spec: HyperSeriesSpec, modulus: int | None = None):
    """Sum of the first n+1 terms, exactly or modulo ``modulus``.

    Terms are updated incrementally: t_{k+1} = t_k * prod(x_i + k) / prod(y_j + k) * z / (k + 1).
    With ``modulus`` set, every parameter is reduced first and each denominator
    must be a unit (``DenominatorNotCoprime``/``NotInvertible`` otherwise).
    """
    top = [_to_ring(x, modulus) for x in spec.top]
    # 1 stands for the k! in every term
    bottom = [_to_ring(y, modulus) for y in spec.bottom] + [_to_ring(Fraction(1), modulus)]
    z = _to_ring(spec.z, modulus)
    one = _to_ring(Fraction(1), modulus)
    term = one
    total = one
    for k in range(spec.n):
        num = z
        for x in top:
            num = num * (x + k)
        if modulus is None and num == 0:
            # a top factor hit zero: every later term vanishes too
            break
        den = one
        for y in bottom:
            den = den * (y + k)
        if modulus is None and den == 0:
            raise ZeroDivisionError(f"bottom parameter hits zero at k = {k}")
        term = term * num / den
        total = total + term
    return total


def terminating_hyper(top, bottom, z=1) -> Fraction:
    """The full (untruncated) series, which is finite because some top parameter is -a <= 0."""
    top = [as_rational(t) for t in top]
    stops = [-int(t) for t in top if t.denominator == 1 and t <= 0]
    if not stops:
        raise NonTerminating("no top parameter is a non-positive integer")
    return trunc_hyper(HyperSeriesSpec(top, bottom, z, min(stops)))


def binomial_power_sum(x, e: int, n: int) -> Fraction:
    """sum_{k=0}^{n} (-1)^k binom(x, k)^e, built term by term from ``binomial``."""
    return sum(((-1) ** k * binomial(x, k) ** e for k in range(n + 1)), Fraction(0))
