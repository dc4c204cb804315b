import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercong.exactnum import DenominatorNotCoprime, Residue, p_valuation, reduce_mod
from hypercong.hyperg import (
    HyperSeriesSpec,
    NonTerminating,
    binomial,
    binomial_power_sum,
    catalan,
    harmonic,
    rising,
    terminating_hyper,
    trunc_hyper,
)
from oracles import alternating_binomial_power_sum, binom_int, primes_upto, series


def test_rising_examples():
    assert rising(2, 3) == 24
    assert rising(Fraction(7, 3), 0) == 1
    assert rising(Fraction(-1, 2), 2) == Fraction(-1, 4)
    assert rising(Residue(3, 25), 2) == Residue(12, 25)


def test_harmonic_examples():
    assert harmonic(0) == 0
    assert harmonic(-1) == 0
    assert harmonic(1) == 1
    assert harmonic(3) == Fraction(11, 6)
    with pytest.raises(ValueError):
        harmonic(-2)


def test_binomial_examples():
    assert binomial(-2, 3) == -4
    assert binomial(Fraction(1, 3), 0) == 1
    assert binomial(5, 2) == 10


def test_catalan_examples():
    assert [catalan(k) for k in (0, 3, 4)] == [1, 5, 14]


def test_trunc_hyper_examples():
    assert trunc_hyper(HyperSeriesSpec([2, 2, 2], [1, 1], 1, 6)) == 784
    assert trunc_hyper(HyperSeriesSpec([Fraction(5, 7), 3], [Fraction(1, 2)], 9, 0)) == 1
    assert trunc_hyper(HyperSeriesSpec([-1, 1], [1], 1, 1)) == 0


def test_terminating_hyper_examples():
    assert terminating_hyper([-1, 1], [1]) == 0
    assert terminating_hyper([-2, 2], [1]) == 0
    assert terminating_hyper([-1], []) == 0
    with pytest.raises(NonTerminating):
        terminating_hyper([Fraction(1, 2), 1], [1])


def test_spec_shape_is_enforced():
    with pytest.raises(ValueError):
        HyperSeriesSpec([1, 2], [1, 1], 1, 3)
    with pytest.raises(ValueError):
        HyperSeriesSpec([1], [], 1, -1)


def test_modular_mode_rejects_non_unit_denominator():
    with pytest.raises(DenominatorNotCoprime):
        trunc_hyper(HyperSeriesSpec([1, 1], [Fraction(1, 5)], 1, 2), 25)


@pytest.mark.parametrize("x", range(-12, 13))
@pytest.mark.parametrize("r", [0, 1, 2])
def test_binomial_form_equals_series(x, r):
    for n in range(13):
        spec = HyperSeriesSpec([-x] * (2 * r + 1), [1] * (2 * r), 1, n)
        assert trunc_hyper(spec) == alternating_binomial_power_sum(x, 2 * r + 1, n)
        assert binomial_power_sum(x, 2 * r + 1, n) == alternating_binomial_power_sum(x, 2 * r + 1, n)


@pytest.mark.parametrize("k", range(31))
def test_catalan_pochhammer_identity(k):
    assert Fraction(catalan(k), 4 ** k) == -2 * rising(Fraction(-1, 2), k + 1) / rising(1, k + 1)


@pytest.mark.parametrize("p", [q for q in primes_upto(50) if q > 2])
def test_harmonic_reflection(p):
    for k in range(p):
        assert p_valuation(harmonic(k) - harmonic(p - 1 - k), p) >= 1


def test_binomial_matches_integer_oracle():
    for x in range(-15, 16):
        for k in range(12):
            assert binomial(x, k) == binom_int(x, k)


def random_spec(rng, p):
    """A series whose parameters and bottom factors stay p-adic units through n < p."""
    q = rng.randint(0, 3)
    n = rng.randint(0, p - 1)

    def unit_rational():
        while True:
            num, den = rng.randint(-60, 60), rng.randint(1, 12)
            if den % p:
                return Fraction(num, den)

    top = [unit_rational() for _ in range(q + 1)]
    bottom = []
    while len(bottom) < q:
        y = unit_rational()
        if all((y + i).numerator % p for i in range(n)):
            bottom.append(y)
    return HyperSeriesSpec(top, bottom, unit_rational(), n)


def test_direct_oracle_agrees_on_random_specs():
    rng = random.Random(20261015)
    for _ in range(200):
        spec = random_spec(rng, rng.choice([5, 7, 11]))
        assert trunc_hyper(spec) == series(spec.top, spec.bottom, spec.z, spec.n)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 4), st.randoms(use_true_random=False))
def test_modular_agrees_with_rational(p, e, rng):
    spec = random_spec(rng, p)
    m = p ** e
    assert trunc_hyper(spec, m) == reduce_mod(trunc_hyper(spec), m)
