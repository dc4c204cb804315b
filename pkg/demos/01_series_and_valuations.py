# %% [markdown]
# # Truncated hypergeometric series, exactly and modulo p^e
#
# The evaluator sums the first n+1 terms with incremental term updates.  Over
# the rationals it is exact; given a modulus it works in Z/p^e.

# %%
from fractions import Fraction

from hypercong import HyperSeriesSpec, p_valuation, reduce_mod, trunc_hyper

spec = HyperSeriesSpec(top=[2, 2, 2], bottom=[1, 1], z=1, n=6)
value = trunc_hyper(spec)
print("3F2[2,2,2; 1,1 | 1]_6 =", value, " v_7 =", p_valuation(value, 7))

# %% [markdown]
# The modular path agrees with reducing the exact value.

# %%
half = HyperSeriesSpec([Fraction(-1, 2)] * 3, [1, 1], 1, 12)
exact = trunc_hyper(half)
print("exact:", exact)
print("mod 13^3:", trunc_hyper(half, 13 ** 3), "==", reduce_mod(exact, 13 ** 3))
print("v_13 =", p_valuation(exact, 13))
