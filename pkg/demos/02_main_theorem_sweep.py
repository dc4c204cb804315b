# %% [markdown]
# # Sweeping the main congruence
#
# For every odd prime p, r >= 1, 1 <= a < (p+r)/(2r+1) and every lift
# alpha = 2a + s p, the (2r+1)F(2r) series at alpha truncated at p-1 should
# vanish mod p^2.  The sweep runs in modular mode and reports valuations.

# %%
from hypercong import SweepConfig, run_sweep

cfg = SweepConfig(checks=["main_theorem"], p_min=3, p_max=31, r_set=[1, 2, 3], mode="modular")
report = run_sweep(cfg, write=False)
for check_id, row in report.summary.items():
    print(check_id, row)

# %% [markdown]
# The exact path on a smaller range, cross-checked against the modular one.

# %%
cfg = SweepConfig(checks=["main_theorem"], p_min=3, p_max=11, r_set=[1, 2], mode="cross-check")
report = run_sweep(cfg, write=False)
print("failures:", len(report.failures), "of", len(report.verdicts))
