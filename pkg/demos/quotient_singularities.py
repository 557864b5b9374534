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
# # Quotients of a fake projective plane by its automorphisms
#
# Every nontrivial automorphism fixes three points, so X/G has cyclic quotient
# singularities.  Resolving them with Hirzebruch-Jung chains gives K^2 and the
# Euler number of the resolution; Noether's formula then has to return chi = 1.

# %%
from fractions import Fraction

from fppverify.geometry import QUOTIENT_PRESETS, check_pullback_coefficients, hirzebruch_jung, \
    preset_quotient, pullback_proper_transform

for n, q in [(3, 2), (7, 5), (5, 2)]:
    g = hirzebruch_jung(n, q)
    print(f"1/{n}(1,{q}):", list(g.hj), [str(a) for a in g.discrepancies], "K^2 change", g.k_squared_correction())

# %%
for name in QUOTIENT_PRESETS:
    r = preset_quotient(name)
    print(f"X/{name:6} K^2 = {r.K2_resolution}  e = {r.euler_resolution}  chi = {r.chi}")

# %% [markdown]
# On X/C3 a curve through two A2 points, meeting one curve of each chain once,
# has proper transform D' = tau^* Dbar - c1 E1 - c2 E2.  The coefficients are
# forced by D'.E1 = 1 and D'.E2 = 0.

# %%
A2 = hirzebruch_jung(3, 2)
res = pullback_proper_transform([A2, A2], [(1, 0), (1, 0)], Fraction(1, 3))
print([[str(c) for c in cs] for cs in res.coefficients], "D'^2 =", res.proper_square)

# %% [markdown]
# Coefficient 1/2 on E1 alone cannot be right: it gives a non-integral
# intersection with E2.

# %%
print([str(x) for x in check_pullback_coefficients(A2, [Fraction(1, 2), 0]).intersections])
