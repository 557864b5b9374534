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
# # Coinvariants, quotient spaces and the norm identity
#
# For a group G acting on a space X, the coinvariants H1(X)_G map to H1(X/G).
# When stabilisers generate G the map is onto; when the action is free, the
# cokernel is G^ab.  Two small simplicial examples show both.

# %%
from fppverify.simquot import (SimplicialAction, coinvariant_surjection_check, exact_sequence_II_check,
                               grid_reflection, grid_torus, polygon, rotation)

T = grid_torus(4)
inv = SimplicialAction(T, (grid_reflection(4),))
print(coinvariant_surjection_check(T, inv).to_json())

# %%
C = polygon(6)
rot = SimplicialAction(C, (rotation(6, 2),))
print(coinvariant_surjection_check(C, rot).cokernel, exact_sequence_II_check(C, rot).to_json())

# %% [markdown]
# On the torsion side, an automorphism of order 3 whose coinvariants are 0 or
# C3 satisfies t + s t + s^2 t = 0, provided 9 does not divide the order.
# Multiplication by 4 on C9 shows the condition on 9 is needed.

# %%
from fppverify.abelian import FinAbGroup, GroupEndo, little_lemma_check
from fppverify.registry import registry

for d in registry():
    for g in d.subgroup_generators:
        v = little_lemma_check(d.h1, g.torsion_action)
        print(d.id, d.h1, "holds" if v.holds else "fails", v.violations)

C9 = FinAbGroup((9,))
print(little_lemma_check(C9, GroupEndo.scalar(C9, 4)))
