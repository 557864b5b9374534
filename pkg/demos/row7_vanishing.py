# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
# ---

# %% [markdown]
# # Degree-one classes on the C3 x C3 surface with H1 = C14
#
# Pic(X) is Z L0 + C14, with K = 3 L0.  A curve with D^2 = 1 would have class
# L0 + t for one of the fourteen torsion classes t.  Two facts are used as axioms:
# K itself is not effective (p_g = 0), and 2 L0 + t is not effective when t is
# fixed by every automorphism.  Everything else is bookkeeping in the group.

# %%
from fppverify.picard import DivisorClass, act
from fppverify.registry import lookup
from fppverify.vanishing import PairCase, bicanonical_verdict, format_class, run_vanishing, separation_obstruction

X = lookup("(C2, p=2, ∅, d3D3)")
print(X.id, X.h1, X.aut_type, X.quotient_pi1)

# %% [markdown]
# The engine tries orbit sums first: if L + sL + s^2 L is K, then L is not
# effective, since otherwise K would be.  Pairs whose sum is a known
# non-effective class cannot both be effective.

# %%
rep = run_vanishing(X)
for D in rep.proved_noneffective:
    print(rep.proved[D].describe(rep.names))

# %% [markdown]
# Six classes survive.  They form two orbits under the automorphism acting by
# 2 on the 7-torsion, and every class in one orbit is excluded against the
# other orbit once orbits are transported.

# %%
for o in rep.orbits:
    print([format_class(D, rep.names) for D in o])
print("orbit exclusions:", rep.orbit_exclusions, "| at most", rep.max_simultaneously_effective, "effective")
print(rep.notes[-1])

# %% [markdown]
# If the orbit through D1 = L0 + t2 + t7 is effective, could the bicanonical
# map fail to separate two points of D1?  Each way of failing makes a torsion
# class restrict trivially to D1, and that class is never zero.

# %%
t2, t7 = X.named("t2"), X.named("t7")
orbit = [DivisorClass(1, t2 + t7 * k) for k in (1, 2, 4)]
sigma = next(g for g in X.subgroup_generators if act(g, orbit[0]) == orbit[1])
for case in PairCase:
    c = separation_obstruction(orbit, case, sigma)
    print(f"{case.value:18} delta = {format_class(DivisorClass(0, c.delta), rep.names):10} {c.verdict}")

print(bicanonical_verdict(X).verdict.value)
