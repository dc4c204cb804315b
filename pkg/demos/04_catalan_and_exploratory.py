# %% [markdown]
# # Catalan cubes and the exploratory mod p^3 check
#
# For p = 1 (mod 4) the sum of C_k^3 / 64^k up to (p-1)/2 is 8 mod p^2.

# %%
from hypercong import CheckParams, run_check
from hypercong.exactnum import odd_primes

for p in [q for q in odd_primes(3, 60) if q % 4 == 1]:
    v = run_check("catalan_mod_p2", CheckParams(p=p))
    print(f"p={p:2d}  v_p(sum - 8) = {v.observed}  {v.status.value}")

# %% [markdown]
# The alternating cubed-binomial sum with x = -2a is claimed to vanish mod p^3.
# The engine only records what it observes; small primes show valuation 2.

# %%
for p in odd_primes(5, 31):
    v = run_check("eq_1_1", CheckParams(p=p, x=-2))
    print(f"p={p:2d}  observed v_p = {v.observed}  ({v.status.value})")
