"""Dense univariate polynomials over Q, and the series polynomials psi and phi."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exactnum import as_rational


class PolyQ:
    """Polynomial with Fraction coefficients; ``coeffs[i]`` multiplies x**i.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> PolyQ:
        return cls([c])

    @classmethod
    def x(cls) -> PolyQ:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyQ([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        if not isinstance(other, PolyQ):
            other = PolyQ([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, PolyQ):
            other = PolyQ([other])
        return self + (-other)

    def __rsub__(self, other):
        return PolyQ([other]) - self

    def __mul__(self, other):
        if not isinstance(other, PolyQ):
            c = as_rational(other)
            return PolyQ([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = PolyQ([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> PolyQ:
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation at an exact point (int, Fraction or Residue)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(acc, int):
            return Fraction(acc)
        return acc


def add(f: PolyQ, g: PolyQ) -> PolyQ:
    return f + g


def mul(f: PolyQ, g: PolyQ) -> PolyQ:
    return f * g


def derivative(f: PolyQ) -> PolyQ:
    return f.derivative()


def evaluate(f: PolyQ, x) -> Fraction:
    return f.eval(x)


# Integer-coefficient helpers: the series polynomials have integer numerators and
# a single factorial power in the denominator, so the heavy lifting stays in ints.

def _imul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _ipow(f: list[int], k: int) -> list[int]:
    result, base = [1], f
    while k:
        if k & 1:
            result = _imul(result, base)
        base = _imul(base, base)
        k >>= 1
    return result


def _shift_factor_coeffs(m: int, k: int) -> list[int]:
    # integer coefficients of (m - x)(m + 1 - x)...(m + k - 1 - x)
    coeffs = [1]
    for i in range(k):
        coeffs = _imul(coeffs, [m + i, -1])
    return coeffs


def pochhammer_shift_poly(m: int, k: int) -> PolyQ:
    """The rising factorial (m - x)_k as a polynomial in x."""
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    return PolyQ(_shift_factor_coeffs(m, k))


def _rising_int(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m + i
    return out


def series_poly(p: int, a: int, r: int, shifted: int) -> PolyQ:
    """Sum over k < p of (2a - x)_k^shifted * (2a)_k^(2r+1-shifted) / k!^(2r+1).

    ``shifted = 2r + 1`` gives psi, ``shifted = 1`` gives phi.
    """
    if not 1 <= 2 * a <= p - 1:
        raise ValueError("need 1 <= 2a <= p - 1")
    width = 2 * r + 1
    if not 0 <= shifted <= width:
        raise ValueError("shifted slot count must lie in [0, 2r + 1]")
    m = 2 * a
    # common denominator (p-1)!^width, so every term has an integer numerator
    big = factorial(p - 1) ** width
    total = [0]
    factor = [1]
    for k in range(p):
        if k:
            factor = _imul(factor, [m + k - 1, -1])
        fixed = _rising_int(m, k) ** (width - shifted)
        term = _ipow(factor, shifted)
        scale = fixed * (big // factorial(k) ** width)
        if len(term) > len(total):
            total.extend([0] * (len(term) - len(total)))
        for i, c in enumerate(term):
            total[i] += c * scale
    return PolyQ([Fraction(c, big) for c in total])


def psi_poly(p: int, a: int, r: int) -> PolyQ:
    """psi(x): the (2r+1)-fold series with every top parameter equal to 2a - x."""
    return series_poly(p, a, r, 2 * r + 1)


def phi_poly(p: int, a: int, r: int) -> PolyQ:
    """phi(x): the same series with only one top parameter shifted to 2a - x."""
    return series_poly(p, a, r, 1)
