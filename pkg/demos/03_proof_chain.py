# %% [markdown]
# # Walking through the argument for one (p, a, r)
#
# psi(x) shifts every top parameter to 2a - x; phi(x) shifts only one.  Both
# are built as exact polynomials, so derivatives and evaluations are exact.

# %%
from hypercong import CheckParams, p_valuation, phi_poly, psi_poly, run_check

p, a, r = 11, 2, 1
psi, phi = psi_poly(p, a, r), phi_poly(p, a, r)
print("deg psi =", psi.degree, " psi(p) =", psi.eval(p))
print("psi'(0) / phi'(0) =", psi.derivative().eval(0) / phi.derivative().eval(0))
print("v_p(phi'(0)) =", p_valuation(phi.derivative().eval(0), p))

# %% [markdown]
# The chain checker computes phi'(0) four ways and checks every intermediate
# identity; its details dict records each sub-result.

# %%
v = run_check("phi_prime_chain", CheckParams(p=p, a=a, r=r))
print(v.status.value)
for key, val in v.details.items():
    print(f"  {key}: {val}")

# %%
for s in range(p):
    t = run_check("taylor_step", CheckParams(p=p, a=a, r=r, s=s))
    print(f"s={s:2d}  psi(sp) - (s-1) p psi'(0) has v_p = {t.observed}")
